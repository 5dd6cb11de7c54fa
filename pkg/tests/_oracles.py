"""Brute-force oracles, independent of the library algorithms they check."""

from __future__ import annotations

from itertools import product

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from bgk.core import G, GINV, TAU, BrauerGSet

_CANCEL = {(G, GINV), (GINV, G), (TAU, TAU)}
_INV = {G: GINV, GINV: G, TAU: TAU}


# ------------------------------------------------------------- homotopy


def _step(E, x, letter):
    if letter == G:
        return E.g[x]
    if letter == GINV:
        return E.ginv[x]
    return E.tau[x]


def _reduce(word: tuple) -> tuple:
    out = []
    for a in word:
        if out and (out[-1], a) in _CANCEL:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def _splice(w: tuple, k: int, loop: tuple) -> tuple:
    """Free reduction of w[:k] + loop + w[k:] for reduced w and a cyclically
    reduced loop: cancellation only happens at the two junctions."""
    out = list(w[:k])
    i = 0
    while i < len(loop) and out and (out[-1], loop[i]) in _CANCEL:
        out.pop()
        i += 1
    out.extend(loop[i:])
    j = k
    while j < len(w) and out and (out[-1], w[j]) in _CANCEL:
        out.pop()
        j += 1
    out.extend(w[j:])
    return tuple(out)


def _trace(E, x, word):
    pts = [x]
    for a in word:
        x = _step(E, x, a)
        pts.append(x)
    return pts


def _loops(E: BrauerGSet) -> dict:
    """Closed walks at each half-edge that are rotations of an (mh2) relator
    or of its inverse."""
    inv = _INV
    out = {}
    for x in E.U:
        y = E.tau[x]
        rel = (G,) * E.degree[x] + (TAU,) + (GINV,) * E.degree[y] + (TAU,)
        for word in (rel, tuple(inv[a] for a in reversed(rel))):
            # the inverse starts where rel ends, i.e. at x again
            pts = _trace(E, x, word)
            assert pts[-1] == x
            for i in range(len(word)):
                out.setdefault(pts[i], set()).add(word[i:] + word[:i])
    return out


def reduced_walks(E: BrauerGSet, source: str, max_len: int) -> list:
    """Freely reduced walks from ``source`` with at most ``max_len`` letters."""
    out = [()]
    frontier = [((), source)]
    for _ in range(max_len):
        nxt = []
        for word, x in frontier:
            for a in (G, GINV, TAU):
                if a == TAU and x not in E.U:
                    continue
                if word and (word[-1], a) in _CANCEL:
                    continue
                w = word + (a,)
                nxt.append((w, _step(E, x, a)))
        out.extend(w for w, _ in nxt)
        frontier = nxt
    return out


def homotopy_classes(E: BrauerGSet, source: str, max_len: int, slack: int) -> dict:
    """Union-find closure of the moves on reduced walks of length at most
    ``max_len + slack``; returns word -> class label for words up to
    ``max_len``.  Move (mh1) is built into free reduction, (mh2) is the
    insertion of a relator loop anywhere, (mh3) is the positional freedom."""
    bound = max_len + slack
    words = reduced_walks(E, source, bound)
    index = {w: i for i, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    loops = _loops(E)
    for w in words:
        pts = _trace(E, source, w)
        i = index[w]
        n = len(w)
        for k, x in enumerate(pts):
            prev = _INV[w[k - 1]] if k else None
            nxt = _INV[w[k]] if k < n else None
            for loop in loops.get(x, ()):
                # a splice that cannot cancel anything only makes w longer
                if n + len(loop) > bound and loop[0] != prev and loop[-1] != nxt:
                    continue
                v = _splice(w, k, loop)
                j = index.get(v)
                if j is not None:
                    a, b = find(i), find(j)
                    if a != b:
                        parent[a] = b
    return {w: find(index[w]) for w in words if len(w) <= max_len}


# ---------------------------------------------------------- path algebra


def _paths(pres, max_len: int) -> list:
    """Paths as tuples of arrow names in composition order (first arrow first)."""
    ends = pres.arrow_ends()
    out = []
    by_src = {}
    for name, (s, t) in ends.items():
        by_src.setdefault(s, []).append(name)
    layer = [(a,) for a in sorted(ends)]
    out.extend(layer)
    for _ in range(max_len - 1):
        layer = [p + (a,) for p in layer for a in by_src.get(ends[p[-1]][1], ())]
        out.extend(layer)
    return out


def path_algebra_dimension(pres, max_len: int) -> int:
    """dim kQ/I when every path longer than ``max_len`` lies in I.

    I is spanned by u r v for relations r and paths u, v; projecting away
    the long paths keeps the quotient unchanged.
    """
    ends = pres.arrow_ends()
    paths = _paths(pres, max_len)
    col = {p: i for i, p in enumerate(paths)}
    rows = []

    def src(p):
        return ends[p[0]][0]

    def tgt(p):
        return ends[p[-1]][1]

    for rel in pres.relations:
        terms = [tuple(path) for path in rel.paths]
        coeffs = [1] if rel.kind == "zero" else [1, -1]
        s0, t0 = src(terms[0]), tgt(terms[0])
        lefts = [()] + [p for p in paths if tgt(p) == s0]
        rights = [()] + [p for p in paths if src(p) == t0]
        for u, v in product(lefts, rights):
            row = {}
            for c, term in zip(coeffs, terms):
                full = u + term + v
                if full in col:
                    row[col[full]] = row.get(col[full], 0) + c
            row = {k: c for k, c in row.items() if c}
            if row:
                rows.append(row)
    if not rows:
        return len(paths) + len(pres.vertices)
    dense = [[QQ(r.get(j, 0)) for j in range(len(paths))] for r in rows]
    rank = DomainMatrix(dense, (len(rows), len(paths)), QQ).rank()
    return len(pres.vertices) + len(paths) - rank


# ------------------------------------------------------- Brauer relations


def relation_partition_by_vertex(B: BrauerGSet, anchor: str) -> set:
    """Residues k (half-edge at position 2k of the (tau g)-walk) grouped by
    the vertex of that half-edge."""
    pts, x = [], anchor
    for _ in range(2 * len(B.edges)):
        pts.append(x)
        x = B.tau[B.g[x]]
    vert = B.vertex_of
    groups = {}
    for k in range(len(B.edges)):
        groups.setdefault(vert[pts[2 * k]], []).append(k)
    return {tuple(sorted(v)) for v in groups.values()}


# ---------------------------------------------------- explicit presentation


def weakly_symmetric_drawn():
    """The quiver with relations drawn for the weakly symmetric example:
    vertices 1, 2; alpha1, alpha3: 1 -> 2 and alpha2, alpha4: 2 -> 1.
    Products read right to left, so alpha4 alpha1 is the path (alpha1, alpha4)."""
    from bgk.algebra import AlgebraPresentation, Relation

    arrows = (("alpha1", "1", "2"), ("alpha2", "2", "1"),
              ("alpha3", "1", "2"), ("alpha4", "2", "1"))
    zero = [("alpha1", "alpha4"), ("alpha2", "alpha1"), ("alpha3", "alpha2"), ("alpha4", "alpha3")]
    comm = [(("alpha1", "alpha2"), ("alpha3", "alpha4")), (("alpha4", "alpha1"), ("alpha2", "alpha3"))]
    rels = tuple(Relation("zero", (z,)) for z in zero) + \
        tuple(Relation("commutativity", c) for c in comm)
    return AlgebraPresentation("drawn", ("1", "2"), arrows, rels)
