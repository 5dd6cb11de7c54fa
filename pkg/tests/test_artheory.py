from itertools import product

import pytest

from bgk.algebra import presentation_isomorphism, quiver_presentation
from bgk.artheory import (
    Configuration, brauer_relation, configuration, configuration_problems, domestic_census,
    dtr_permutation, exceptional_tubes, is_translation_stable, rf_ar_descriptor,
    riedtmann_bgset, riedtmann_data, riedtmann_presentation, stable_ar_summary,
)
from bgk.classify import classify_rep_type
from bgk.constructions import are_isomorphic, construct_domestic
from bgk.core import BrauerError
from bgk.fixtures import from_rotations, path_tree, star_tree, two_cycle, weakly_symmetric

from _builders import case2_bases, case_a_cover, case_b_cover, tree_rotations, trees, unicyclic
from _oracles import relation_partition_by_vertex


def one_double_tree():
    return from_rotations([["a", "h"], ["b"]], pairs=[("a", "b")], doubles=["h"])


# ------------------------------------------------------------------ tubes


def test_weakly_symmetric_census():
    S = stable_ar_summary(weakly_symmetric())
    assert S.tube_ranks == ()
    assert S.za_tilde == ((1, 1, 2),)
    assert S.za_count == 2


def test_case_two_census_on_three_vertices():
    B = next(b for b in case2_bases(3) if len(b.vertices) == 3)
    S = stable_ar_summary(construct_domestic(B, 2, 1))
    assert S.tube_ranks == (2, 2)
    assert S.za_tilde == ((2, 2, 1),)


def test_case_three_census():
    E = construct_domestic(unicyclic(3, 1, 0), 3, 1, 1)
    S = stable_ar_summary(E)
    assert S.tube_ranks == (3, 5)
    assert S.za_tilde == ((5, 3, 1),)
    assert exceptional_tubes(E).ranks == (3, 5)


def test_census_formula_matches_dtr_orbits():
    for B, case, r, l in [(unicyclic(2, 0, 1), 3, 2, 1), (unicyclic(3, 1, 1), 3, 3, 2),
                          (next(case2_bases(4)), 2, 2, None)]:
        E = construct_domestic(B, case, r, l)
        S = stable_ar_summary(E)
        assert S.orbit_census == exceptional_tubes(E).orbits


def test_dtr_permutation_is_a_permutation():
    E = two_cycle()
    perm = dtr_permutation(E)
    assert sorted(perm.values()) == sorted(E.half_edges)


def test_census_rejects_other_types():
    with pytest.raises(BrauerError):
        stable_ar_summary(path_tree(2))
    with pytest.raises(BrauerError):
        exceptional_tubes(path_tree(2))
    fig8 = from_rotations([["a", "b", "c", "d"]], pairs=[("a", "c"), ("b", "d")])
    with pytest.raises(BrauerError):
        stable_ar_summary(fig8)


def test_dot_census():
    dot = stable_ar_summary(weakly_symmetric()).to_dot()
    assert dot.count("ZA~_{1,1}") == 2


def test_domestic_census_case_one_counts():
    rt = classify_rep_type(weakly_symmetric())
    orbits, za = domestic_census(rt, 1)
    assert orbits == (1, 1, 1, 1) and za == ((1, 1, 2),)


# ------------------------------------------------------- Brauer relations


def test_single_edge_relation():
    rel = brauer_relation(path_tree(1), "t0")
    assert rel.n == 1 and rel.classes == ((0,),)


def test_path_and_star_relations():
    P = path_tree(3)
    assert brauer_relation(P, P.half_edges[0]).classes == ((0, 2), (1,))
    S = star_tree(3)
    assert brauer_relation(S, S.half_edges[0]).classes == ((0, 1, 2),)


def test_relations_match_vertex_partition():
    for T in trees(6):
        rot, pairs = tree_rotations(T)
        if not pairs:
            continue
        B = from_rotations(rot, pairs=pairs)
        for e in B.half_edges:
            rel = brauer_relation(B, e)
            assert set(rel.classes) == relation_partition_by_vertex(B, e)
            assert rel.crossing_pairs() == []
            assert configuration_problems(configuration(rel)) == []


def test_relation_needs_trivial_tree():
    with pytest.raises(BrauerError):
        brauer_relation(path_tree(2, 3), "t0")
    with pytest.raises(BrauerError):
        brauer_relation(two_cycle(), "c1")


def test_configuration_scan():
    # a shift is admissible exactly when p -> p + j(p) is a bijection on Z
    for n in (1, 2, 3, 4):
        for shift in product(range(1, n + 1), repeat=n):
            C = Configuration(n, shift)
            bijective = len({(i + shift[i]) % n for i in range(n)}) == n
            assert (configuration_problems(C, window=2) == []) == bijective, shift


# ------------------------------------------------------------- descriptors


def test_descriptor_of_trivial_tree():
    d = rf_ar_descriptor(path_tree(3))
    assert d.text() == "(ZA_3)_C/<tau^3>"
    assert d.tau_orbit_lengths() == (3, 3, 3)
    assert is_translation_stable(d.configuration, d.n // d.m)


def test_descriptor_with_exceptional_vertex():
    d = rf_ar_descriptor(path_tree(2, 3))
    assert (d.case, d.n, d.m, d.r, d.K) == ("a", 6, 3, 1, 2)
    assert d.stable_vertex_count == 12 and d.vertex_count == 14


def test_descriptor_of_cover():
    d = rf_ar_descriptor(case_a_cover(path_tree(2, 3), 2))
    assert (d.r, d.K) == (2, 4)


def test_descriptor_case_b():
    d = rf_ar_descriptor(case_b_cover(one_double_tree(), 1))
    assert d.text() == "(ZA_3)_C/<tau^3 phi>"
    assert (d.p, d.K) == (1, 3)
    assert d.tau_orbit_lengths() == (3, 6)


def test_descriptor_needs_rep_finite():
    with pytest.raises(BrauerError):
        rf_ar_descriptor(weakly_symmetric())


# --------------------------------------------------------------- Riedtmann


def test_literal_and_admissible_presentations():
    d = rf_ar_descriptor(case_b_cover(one_double_tree(), 1))
    D = riedtmann_data(d)
    lit = riedtmann_presentation(d, admissible=False)
    adm = riedtmann_presentation(d)
    ones = sum(1 for x in range(D.period) for k in (D.a[x], D.b[x]) if k == 1)
    assert ones > 0
    assert len(lit.arrows) == 6
    assert len(adm.arrows) < len(lit.arrows)


@pytest.mark.parametrize("E", [
    path_tree(3), path_tree(2, 3), star_tree(3, 2), case_a_cover(path_tree(2, 3), 2),
    case_b_cover(one_double_tree(), 2),
])
def test_riedtmann_presentation_matches_algebra(E):
    d = rf_ar_descriptor(E)
    assert presentation_isomorphism(riedtmann_presentation(d),
                                    quiver_presentation(E, "reduced")) is not None


@pytest.mark.parametrize("E", [path_tree(3), star_tree(3, 2), case_a_cover(path_tree(1, 2), 3)])
def test_riedtmann_bgset_recovers_input(E):
    assert are_isomorphic(riedtmann_bgset(rf_ar_descriptor(E)), E) is not None
