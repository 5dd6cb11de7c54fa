"""Small named Brauer G-sets used in tests, docs and the CLI."""

from __future__ import annotations

from typing import Mapping, Sequence

from .core import BrauerGSet, make_bgset


def from_rotations(
    rotations: Sequence[Sequence[str]],
    pairs: Sequence[Sequence[str]] = (),
    doubles: Sequence[str] = (),
    multiplicity: Mapping[int, int] | None = None,
    outside_u: Sequence[str] = (),
    name: str | None = None,
) -> BrauerGSet:
    """Build a Brauer G-set from cyclic orders around each vertex.

    ``rotations[i]`` lists the half-edges of vertex i in g-order.  The degree
    of a half-edge is the vertex size times its f-degree ``multiplicity[i]``
    (default 1).  Half-edges in ``outside_u`` are left out of U.
    """
    multiplicity = multiplicity or {}
    g, degree = {}, {}
    for i, rot in enumerate(rotations):
        for j, e in enumerate(rot):
            g[e] = rot[(j + 1) % len(rot)]
            degree[e] = len(rot) * multiplicity.get(i, 1)
    tau = {}
    for a, b in pairs:
        tau[a], tau[b] = b, a
    for e in doubles:
        tau[e] = e
    skip = set(outside_u)
    U = [e for e in g if e not in skip]
    return make_bgset(g, tau, degree, U=U, name=name)


def ex1() -> BrauerGSet:
    """One vertex {e, e'} of degree 2 whose two half-edges are both doubles."""
    return make_bgset({"e": "e'", "e'": "e"}, {"e": "e", "e'": "e'"}, 2, name="ex1")


def ex2() -> BrauerGSet:
    """Four half-edges on one vertex, U = {e, e', e1}: a loop, a double, a free end."""
    g = {"e": "e1", "e1": "e'", "e'": "e2", "e2": "e"}
    tau = {"e": "e'", "e'": "e", "e1": "e1"}
    return make_bgset(g, tau, 4, U=["e", "e'", "e1"], name="ex2")


def weakly_symmetric() -> BrauerGSet:
    """Two interlaced loops at one vertex of f-degree 1/2."""
    g = {"a": "b", "b": "c", "c": "d", "d": "a"}
    tau = {"a": "c", "c": "a", "b": "d", "d": "b"}
    return make_bgset(g, tau, 2, name="weakly-symmetric")


def two_cycle() -> BrauerGSet:
    """Two vertices joined by two edges, trivial f-degree."""
    return from_rotations(
        [["c1", "c2"], ["c3", "c4"]], pairs=[("c1", "c4"), ("c2", "c3")], name="two-cycle"
    )


def single_vertex(doubles: int, m: int = 1, before: int = 0) -> BrauerGSet:
    """One vertex carrying a loop (e, f) and ``doubles`` double half-edges.

    ``before`` of the doubles sit between e and f in the cyclic order, the
    rest between f and e.  The f-degree of the vertex is ``m``.
    """
    inner = [f"e{i}" for i in range(1, before + 1)]
    outer = [f"e{i}" for i in range(before + 1, doubles + 1)]
    rot = ["e", *inner, "f", *outer]
    return from_rotations(
        [rot], pairs=[("e", "f")], doubles=inner + outer, multiplicity={0: m},
        name=f"single-vertex-{doubles}-{m}",
    )


def path_tree(edges: int, exceptional: int = 1, at: int = 0) -> BrauerGSet:
    """A Brauer tree shaped like a path with ``edges`` edges.

    Vertex ``at`` (0 .. edges) gets f-degree ``exceptional``.
    """
    rotations = []
    for v in range(edges + 1):
        rot = []
        if v > 0:
            rot.append(f"h{v - 1}")
        if v < edges:
            rot.append(f"t{v}")
        rotations.append(rot)
    pairs = [(f"t{i}", f"h{i}") for i in range(edges)]
    return from_rotations(rotations, pairs=pairs, multiplicity={at: exceptional},
                          name=f"path-{edges}")


def star_tree(edges: int, exceptional: int = 1, center: bool = True) -> BrauerGSet:
    """A star with ``edges`` edges; the exceptional vertex is the centre or a leaf."""
    rotations = [[f"s{i}" for i in range(edges)]] + [[f"x{i}"] for i in range(edges)]
    pairs = [(f"s{i}", f"x{i}") for i in range(edges)]
    mult = {0: exceptional} if center else {1: exceptional}
    return from_rotations(rotations, pairs=pairs, multiplicity=mult, name=f"star-{edges}")


def all_fixtures() -> dict:
    return {
        "ex1": ex1(),
        "ex2": ex2(),
        "weakly-symmetric": weakly_symmetric(),
        "two-cycle": two_cycle(),
        "single-vertex": single_vertex(2, 1, before=1),
    }
