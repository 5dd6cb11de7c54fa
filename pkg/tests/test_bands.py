import networkx as nx
import pytest
from hypothesis import given, settings

from strategies import fms_bgs

from bgk.bands import (
    BandWord, band_bound, band_count, band_graph, band_problems, canonical_band,
    enumerate_bands, has_band, inverse_band, project_band, simple_cycle_bands,
)
from bgk.classify import REP_FINITE, classify_rep_type
from bgk.constructions import construct_domestic, sigma_quotient
from bgk.core import BrauerError, disjoint_union
from bgk.fixtures import from_rotations, path_tree, star_tree, two_cycle, weakly_symmetric


def triangle():
    return from_rotations([["a0", "b2"], ["a1", "b0"], ["a2", "b1"]],
                          pairs=[("a0", "b0"), ("a1", "b1"), ("a2", "b2")], name="triangle")


def figure_eight():
    """Two loops at one vertex: two cycles sharing a vertex."""
    return from_rotations([["a", "b", "c", "d"]], pairs=[("a", "b"), ("c", "d")], name="fig8")


def brute_band_classes(E, max_pairs):
    """Closed rise/fall walks, reduced to primitive periods and identified up
    to rotation and inversion by explicit orbit listing."""
    found = set()

    def walk(x, acc):
        for k in range(1, E.degree[x]):
            h = E.tau[E.g_power(x, k)]
            for l in range(1, E.degree[h]):
                y = E.tau[E.g_power(h, -l)]
                pairs = acc + ((x, k, l),)
                if y == pairs[0][0]:
                    n = len(pairs)
                    if all(pairs != pairs[p:] + pairs[:p] for p in range(1, n) if n % p == 0):
                        w = BandWord(pairs)
                        orbit = {pairs[i:] + pairs[:i] for i in range(n)}
                        inv = inverse_band(E, w).pairs
                        orbit |= {inv[i:] + inv[:i] for i in range(n)}
                        found.add(frozenset(orbit))
                if len(pairs) < max_pairs:
                    walk(y, pairs)

    for e in E.half_edges:
        walk(e, ())
    return found


class TestCanonical:
    def test_rotation_and_inverse(self):
        E = triangle()
        for c in enumerate_bands(E, 3):
            w = c.canonical
            assert canonical_band(E, inverse_band(E, w)) == c
            assert canonical_band(E, BandWord(w.pairs[1:] + w.pairs[:1])) == c

    def test_invalid_band(self):
        E = two_cycle()
        assert band_problems(E, BandWord(()))
        with pytest.raises(BrauerError):
            canonical_band(E, BandWord((("c1", 5, 1),)))


class TestEnumeration:
    @pytest.mark.parametrize("B", [path_tree(3), star_tree(4), path_tree(2, 3, 1)])
    def test_trees_have_no_bands(self, B):
        assert enumerate_bands(B, band_bound(B)) == []
        assert not has_band(B)
        assert str(band_count(B)) == "Finite(0)"

    def test_weakly_symmetric_has_two(self):
        E = weakly_symmetric()
        assert len(enumerate_bands(E, 2)) == 2
        assert len(enumerate_bands(E, 6)) == 2
        assert band_count(E).n == 2

    def test_odd_cycle_has_one(self):
        E = triangle()
        assert len(enumerate_bands(E, band_bound(E))) == 1
        assert band_count(E).n == 1

    def test_two_cycles_sharing_a_vertex(self):
        assert not band_count(figure_eight()).finite
        assert len(enumerate_bands(figure_eight(), 3)) > len(enumerate_bands(figure_eight(), 2))

    def test_disconnected_count_rejected(self):
        with pytest.raises(BrauerError):
            band_count(disjoint_union(two_cycle(), two_cycle()))

    @pytest.mark.parametrize("make", [weakly_symmetric, two_cycle, triangle, figure_eight])
    def test_matches_brute_force(self, make):
        E = make()
        for P in (1, 2, 3):
            ours = enumerate_bands(E, P)
            assert len(ours) == len(brute_band_classes(E, P))
            assert all(not band_problems(E, c.canonical) for c in ours)

    @settings(max_examples=40, deadline=None)
    @given(fms_bgs(sizes=(4, 6, 8)))
    def test_random_matches_brute_force(self, E):
        assert len(enumerate_bands(E, 2)) == len(brute_band_classes(E, 2))

    @settings(max_examples=60, deadline=None)
    @given(fms_bgs())
    def test_has_band_matches_rep_type(self, E):
        rep_finite = classify_rep_type(E).tag == REP_FINITE
        assert has_band(E) != rep_finite
        if rep_finite:
            assert enumerate_bands(E, band_bound(E)) == []


class TestGraph:
    def test_domestic_cycles_are_disjoint(self):
        # in a domestic instance every strongly connected part is one cycle
        E = construct_domestic(two_cycle(), 3, 2, 1)
        G = band_graph(E)
        for comp in nx.strongly_connected_components(G):
            if len(comp) > 1:
                sub = G.subgraph(comp)
                assert all(sub.out_degree(v) == 1 for v in sub)
        assert len(simple_cycle_bands(E)) == band_count(E).n

    def test_projection_of_bands(self):
        E = construct_domestic(two_cycle(), 3, 2, 1)
        Q, cov = sigma_quotient(E)
        images = {project_band(E, cov.mapping, c.canonical, Q) for c in enumerate_bands(E, 4)}
        assert images <= set(enumerate_bands(Q, 4))
