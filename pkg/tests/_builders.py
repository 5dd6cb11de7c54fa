"""Generators of base graphs for the domestic families and rep-finite covers."""

from __future__ import annotations

from itertools import combinations_with_replacement, combinations

import networkx as nx

from bgk.constructions import cyclic_cover
from bgk.fixtures import from_rotations


def tree_rotations(T: nx.Graph):
    """One planar embedding of an abstract tree: neighbours in sorted order."""
    rot, pairs = [], []
    for v in sorted(T):
        rot.append([f"v{v}>{u}" for u in sorted(T[v])])
    for u, v in T.edges:
        pairs.append((f"v{u}>{v}", f"v{v}>{u}"))
    return rot, pairs


def trees(max_vertices: int):
    for n in range(1, max_vertices + 1):
        if n == 1:
            yield nx.empty_graph(1)
        else:
            yield from nx.nonisomorphic_trees(n)


def case1_bases(max_vertices: int):
    """Trees with two double half-edges, attached at every pair of vertices."""
    for T in trees(max_vertices):
        rot, pairs = tree_rotations(T)
        for a, b in combinations_with_replacement(range(len(rot)), 2):
            r = [list(x) for x in rot]
            r[a].append("d1")
            r[b].append("d2")
            yield from_rotations(r, pairs=pairs, doubles=["d1", "d2"],
                                 name=f"tree{len(rot)}-doubles{a}{b}")


def case2_bases(max_vertices: int):
    """Trees (at least one edge) with f-degree 2 at two distinct vertices."""
    for T in trees(max_vertices):
        if T.number_of_nodes() < 2:
            continue
        rot, pairs = tree_rotations(T)
        for a, b in combinations(range(len(rot)), 2):
            yield from_rotations(rot, pairs=pairs, multiplicity={a: 2, b: 2},
                                 name=f"tree{len(rot)}-twos{a}{b}")


def unicyclic(m: int, inside: int, outside: int):
    """A cycle of length m with pendant edges at one cycle vertex, ``inside``
    of them between the two cycle half-edges and ``outside`` after them."""
    pairs = [(f"a{i}", f"b{i}") for i in range(m)]  # edge i joins c_i to c_{i+1}
    rot = [[f"b{(i - 1) % m}", f"a{i}"] for i in range(m)]
    rot[0] = [rot[0][0]] + [f"s{j}" for j in range(inside)] + rot[0][1:] + \
        [f"s{inside + j}" for j in range(outside)]
    for j in range(inside + outside):
        rot.append([f"x{j}"])
        pairs.append((f"s{j}", f"x{j}"))
    return from_rotations(rot, pairs=pairs, name=f"cycle{m}-{inside}-{outside}")


def case_a_cover(B, r: int):
    """Admissible r-fold cyclic cover of a tree B with exceptional f-degree m.

    The g-step into the exceptional vertex moves one sheet and every other
    vertex step moves m sheets, so sigma shifts by m; needs gcd(r, m) = 1.
    """
    exc = [v for v in B.vertices if B.f_degree(v[0]) != 1]
    m = int(B.f_degree(exc[0][0])) if exc else 1
    shift = {}
    for v in B.vertices:
        shift[B.ginv[v[0]]] = 1 if (exc and v == exc[0]) or (not exc and v == B.vertices[0]) else m
    return cyclic_cover(B, r, shift)[0]


def case_b_cover(Q, r: int):
    """2r-fold cover of a tree Q with one double h, in which tau at h swaps sheets."""
    (h,) = Q.doubles
    shift = {Q.ginv[v[0]]: 1 for v in Q.vertices}
    return cyclic_cover(Q, 2 * r, shift, {h: r})[0]
