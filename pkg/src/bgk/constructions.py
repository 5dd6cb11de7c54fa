"""Quotients, coverings, the doubling construction, universal-cover balls and
the explicit domestic families."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .core import (
    TAU, BrauerError, BrauerGSet, Walk, connected_components, is_connected, make_bgset,
)

DEFAULT_GROUP_BOUND = 10**5


@dataclass(frozen=True)
class CoveringMap:
    source: BrauerGSet
    target: BrauerGSet
    mapping: Mapping
    sheet_count: int

    def __call__(self, e):
        return self.mapping[e]

    def fiber(self, x) -> tuple:
        return tuple(e for e in self.source.half_edges if self.mapping[e] == x)


def covering_problems(source: BrauerGSet, target: BrauerGSet, mapping: Mapping,
                      only: Iterable | None = None) -> list:
    """Pointwise check of the covering conditions; returns readable problems.

    ``only`` restricts the check to a subset of source half-edges (used for
    the interior of a ball).
    """
    out = []
    points = source.half_edges if only is None else sorted(only)
    for e in points:
        x = mapping.get(e)
        if x not in target.g:
            out.append(f"{e}: image {x!r} is not a half-edge of the target")
            continue
        if mapping.get(source.g[e]) != target.g[x]:
            out.append(f"{e}: not g-equivariant")
        if source.degree[e] != target.degree[x]:
            out.append(f"{e}: degree {source.degree[e]} maps to {target.degree[x]}")
        if (e in source.U) != (x in target.U):
            out.append(f"{e}: membership in U is not preserved")
        elif e in source.U and mapping.get(source.tau[e]) != target.tau[x]:
            out.append(f"{e}: not tau-equivariant")
    if only is None:
        missing = set(target.half_edges) - set(mapping.values())
        if missing:
            out.append(f"not surjective, e.g. {min(missing)!r} has an empty fiber")
        elif is_connected(source):
            sizes = {}
            for e in source.half_edges:
                sizes[mapping[e]] = sizes.get(mapping[e], 0) + 1
            if len(set(sizes.values())) > 1:
                out.append("fibers have different sizes")
    return out


def make_covering(source: BrauerGSet, target: BrauerGSet, mapping: Mapping,
                  check: bool = True) -> CoveringMap:
    mapping = MappingProxyType(dict(mapping))
    if check:
        problems = covering_problems(source, target, mapping)
        if problems:
            raise BrauerError("not a covering: " + "; ".join(problems[:5]))
    sizes = {}
    for e in source.half_edges:
        sizes[mapping[e]] = sizes.get(mapping[e], 0) + 1
    counts = set(sizes.values())
    sheets = counts.pop() if len(counts) == 1 else 0
    return CoveringMap(source, target, mapping, sheets)


def is_automorphism(E: BrauerGSet, mapping: Mapping) -> bool:
    if sorted(mapping) != list(E.half_edges) or len(set(mapping.values())) != len(mapping):
        return False
    return not covering_problems(E, E, mapping)


def identity_covering(E: BrauerGSet) -> CoveringMap:
    return CoveringMap(E, E, MappingProxyType({e: e for e in E.half_edges}), 1)


# ------------------------------------------------------------------ quotients


def group_closure(E: BrauerGSet, generators: Sequence[Mapping],
                  bound: int = DEFAULT_GROUP_BOUND) -> list:
    """All elements of the group generated by ``generators``, as dicts.

    Raises BrauerError if a generator is not an automorphism or the group
    has more than ``bound`` elements.
    """
    for k, gen in enumerate(generators):
        if not is_automorphism(E, gen):
            raise BrauerError(f"generator {k} is not an automorphism")
    idx = {e: i for i, e in enumerate(E.half_edges)}
    gens = [tuple(idx[gen[e]] for e in E.half_edges) for gen in generators]
    ident = tuple(range(len(E.half_edges)))
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for s in gens:
            q = tuple(s[i] for i in p)
            if q not in seen:
                seen.add(q)
                if len(seen) > bound:
                    raise BrauerError(f"generated group has more than {bound} elements")
                queue.append(q)
    return [
        {e: E.half_edges[p[idx[e]]] for e in E.half_edges}
        for p in sorted(seen)
    ]


def group_orbits(E: BrauerGSet, generators: Sequence[Mapping]) -> dict:
    """Map each half-edge to the least element of its orbit."""
    rep = {e: e for e in E.half_edges}

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for gen in generators:
        for e in E.half_edges:
            a, b = find(e), find(gen[e])
            if a != b:
                rep[max(a, b)] = min(a, b)
    return {e: find(e) for e in E.half_edges}


def quotient(E: BrauerGSet, generators: Sequence[Mapping],
             bound: int = DEFAULT_GROUP_BOUND, name: str | None = None):
    """E/Pi for the group Pi generated by ``generators`` and the projection.

    Orbits are named by their least half-edge.
    """
    group_closure(E, generators, bound)
    rep = group_orbits(E, generators)
    names = sorted(set(rep.values()))
    Q = make_bgset(
        g={x: rep[E.g[x]] for x in names},
        tau={x: rep[E.tau[x]] for x in names if x in E.U},
        degree={x: E.degree[x] for x in names},
        U=[x for x in names if x in E.U],
        name=name,
    )
    return Q, make_covering(E, Q, rep)


def sigma_quotient(E: BrauerGSet, name: str | None = None):
    """E/<sigma> with its projection."""
    return quotient(E, [dict(E.sigma)], name=name)


def is_admissible(E: BrauerGSet, generators: Sequence[Mapping]) -> bool:
    """True iff every orbit meets every edge in at most one half-edge."""
    rep = group_orbits(E, generators)
    return all(rep[e] != rep[E.tau[e]] for e in E.U if E.tau[e] != e)


# ---------------------------------------------------------------------- hat


def _copy(e: str, i: int) -> str:
    return f"{e}:{i}"


def hat(E: BrauerGSet, name: str | None = None):
    """The doubled set E_1 + E_2 in which tau swaps the copies of a double."""
    g, tau, deg, proj = {}, {}, {}, {}
    for e in E.half_edges:
        for i in (1, 2):
            x = _copy(e, i)
            g[x] = _copy(E.g[e], i)
            deg[x] = E.degree[e]
            proj[x] = e
            if e in E.U:
                t = E.tau[e]
                tau[x] = _copy(e, 3 - i) if t == e else _copy(t, i)
    if len(g) != 2 * len(E.half_edges):
        raise BrauerError("half-edge names collide after doubling")
    H = make_bgset(g, tau, deg, U=list(tau), name=name)
    return H, make_covering(H, E, proj)


def hat_swap(H: BrauerGSet) -> dict:
    """The automorphism of hat(E) exchanging the two copies."""
    out = {}
    for x in H.half_edges:
        base, _, i = x.rpartition(":")
        out[x] = _copy(base, 3 - int(i))
    return out


def reduced_form(E: BrauerGSet) -> BrauerGSet:
    """E/<sigma> when <sigma> is admissible, otherwise hat(E/<sigma>)."""
    if not E.is_fms_bg:
        raise BrauerError("reduced form needs an f_ms-BG (U = E, tau without fixed points)")
    Q, _ = sigma_quotient(E)
    if is_admissible(E, [dict(E.sigma)]):
        return Q
    return hat(Q)[0]


# -------------------------------------------------------------- special balls


def _walk_id(source: str, exps: tuple) -> str:
    return f"{source}|" + ",".join(map(str, exps))


@dataclass(frozen=True)
class SpecialBall:
    """Special walks from ``source`` with at most ``radius`` tau letters.

    ``evaluation`` sends a walk to its target; ``boundary`` lists the walks
    whose target lies in U but whose tau image falls outside the ball.
    """

    source: str
    radius: int
    fragment: BrauerGSet
    evaluation: Mapping
    boundary: tuple
    walks: Mapping


def special_ball(E: BrauerGSet, e: str, radius: int) -> SpecialBall:
    if e not in E.g:
        raise BrauerError(f"unknown half-edge {e!r}")
    if radius < 0:
        raise BrauerError("radius must be non-negative")
    # a node is (exponents, base half-edges of each run)
    start = ((0,), (e,))
    nodes = {start}
    queue = deque([start])
    g, tau, target = {}, {}, {}
    boundary = []

    def end(node):
        exps, bases = node
        return E.g_power(bases[-1], exps[-1])

    while queue:
        node = queue.popleft()
        exps, bases = node
        t = end(node)
        target[node] = t
        d = E.degree[bases[-1]]
        gi = (exps[:-1] + ((exps[-1] + 1) % d,), bases)
        g[node] = gi
        nexts = [gi]
        if t in E.U:
            if len(exps) > 1 and exps[-1] == 0:
                tn = (exps[:-1], bases[:-1])
            elif len(exps) - 1 < radius:
                tn = (exps + (0,), bases + (E.tau[t],))
            else:
                tn = None
                boundary.append(node)
            if tn is not None:
                tau[node] = tn
                nexts.append(tn)
        for nx in nexts:
            if nx not in nodes:
                nodes.add(nx)
                queue.append(nx)
    ident = {node: _walk_id(e, node[0]) for node in nodes}
    frag = make_bgset(
        g={ident[n]: ident[g[n]] for n in nodes},
        tau={ident[n]: ident[t] for n, t in tau.items()},
        degree={ident[n]: E.degree[n[1][-1]] for n in nodes},
        U=[ident[n] for n in tau],
        name=f"ball({e},{radius})",
    )
    return SpecialBall(
        source=e,
        radius=radius,
        fragment=frag,
        evaluation=MappingProxyType({ident[n]: target[n] for n in nodes}),
        boundary=tuple(sorted(ident[n] for n in boundary)),
        walks=MappingProxyType({ident[n]: n[0] for n in nodes}),
    )


def is_brauer_tree(B: BrauerGSet) -> bool:
    """Connected modified BG without doubles whose diagram is a tree."""
    if not B.is_modified_bg or B.doubles or not is_connected(B):
        return False
    return len(B.edges) == len(B.vertices) - 1


def exceptional_vertices(B: BrauerGSet) -> list:
    return [v for v in B.vertices if B.f_degree(v[0]) != 1]


def unfold_exceptional_tree(B: BrauerGSet, h: str):
    """Unfold a Brauer tree at its exceptional vertex into a trivial-degree tree.

    Returns the unfolded tree and its covering onto B; the number of sheets
    equals the exceptional multiplicity m.
    """
    if not is_brauer_tree(B):
        raise BrauerError("input is not a Brauer tree")
    exc = exceptional_vertices(B)
    if len(exc) > 1:
        raise BrauerError("more than one exceptional vertex")
    if exc and h not in exc[0]:
        raise BrauerError(f"{h!r} is not at the exceptional vertex")
    m = int(B.f_degree(exc[0][0])) if exc else 1
    limit = 2 * m * len(B.half_edges) + 2
    for radius in range(limit + 1):
        ball = special_ball(B, h, radius)
        if not ball.boundary:
            break
    else:  # pragma: no cover - a finite tree always closes
        raise BrauerError("unfolding did not close")
    T = ball.fragment
    if len(T.edges) != m * len(B.edges):
        raise BrauerError("unfolded tree has the wrong number of edges")
    return T, make_covering(T, B, ball.evaluation)


# --------------------------------------------------------- domestic families


def _gt_positions(B: BrauerGSet, start: str) -> dict:
    """j with c = (g tau)^j start, along the <g tau>-orbit of ``start``."""
    out, x, j = {}, start, 0
    while x not in out:
        out[x] = j
        x = B.g[B.tau[x]]
        j += 1
    return out


def _vertex_bases(B: BrauerGSet, rank: Mapping) -> set:
    return {min((c for c in v if c in rank), key=lambda c: rank[c]) for v in B.vertices}


def _paired(B: BrauerGSet, N: int, shift_g: Mapping, tau_of, name: str) -> BrauerGSet:
    def nm(c, j):
        return f"{c}@{j % N}"

    g, tau, deg = {}, {}, {}
    for c in B.half_edges:
        for j in range(N):
            x = nm(c, j)
            gc = B.g[c]
            g[x] = nm(gc, j + shift_g.get(gc, 0))
            tc, tj = tau_of(c, j)
            tau[x] = nm(tc, tj)
            deg[x] = B.degree[c]
    if len(g) != N * len(B.half_edges):
        raise BrauerError("half-edge names collide in the construction")
    return make_bgset(g, tau, deg, name=name)


def cyclic_cover(B: BrauerGSet, N: int, g_shift: Mapping, tau_shift: Mapping | None = None,
                 name: str | None = None):
    """The N-sheeted voltage cover B x Z/N.

    g sends (c, j) to (g c, j + g_shift[c]) and tau sends (c, j) to
    (tau c, j + tau_shift[c]); missing shifts are 0.  Returns the cover and
    its projection onto B.
    """
    tau_shift = tau_shift or {}

    def nm(c, j):
        return f"{c}#{j % N}"

    g, tau, deg, proj = {}, {}, {}, {}
    for c in B.half_edges:
        for j in range(N):
            x = nm(c, j)
            g[x] = nm(B.g[c], j + g_shift.get(c, 0))
            deg[x] = B.degree[c]
            proj[x] = c
            if c in B.U:
                tau[x] = nm(B.tau[c], j + tau_shift.get(c, 0))
    E = make_bgset(g, tau, deg, U=list(tau), name=name or f"cover{N}({B.name or ''})")
    return E, make_covering(E, B, proj)


def construct_domestic(B: BrauerGSet, case: int, r: int, l: int | None = None) -> BrauerGSet:
    """The f_ms-BG with quotient B and Nakayama order 2r, 2r-1 or r.

    Case 1: B is a tree with two doubles; case 2: a tree with two vertices of
    f-degree 2; case 3: a unicyclic graph of trivial f-degree, with twist l.
    Half-edge (c, j) is named ``c@j`` with j in 0..N-1.
    """
    from .classify import domestic_case_problem, shape_stats

    if r < 1:
        raise BrauerError("r must be positive")
    problem = domestic_case_problem(B, case)
    if problem:
        raise BrauerError(f"base does not have the shape of case {case}: {problem}")
    if case == 1:
        N = 2 * r
        rank = _gt_positions(B, min(B.half_edges))
        bases = _vertex_bases(B, rank)
        shift = {c: 1 for c in bases}

        def tau_of(c, j):
            return (c, j + r) if B.tau[c] == c else (B.tau[c], j)

        return _paired(B, N, shift, tau_of, f"E_{r}")
    if case == 2:
        N = 2 * r - 1
        rank = _gt_positions(B, min(B.half_edges))
        bases = _vertex_bases(B, rank)
        shift = {c: (r if B.f_degree(c) == 2 else 1) for c in bases}
        return _paired(B, N, shift, lambda c, j: (B.tau[c], j), f"E'_{r}")
    if case == 3:
        if l is None or not 1 <= l <= r:
            raise BrauerError("case 3 needs 1 <= l <= r")
        st = shape_stats(B)
        b = st.cycle.base
        tb = B.tau[b]
        outer = _gt_positions(B, b)
        inner = _gt_positions(B, tb)
        bases = set()
        for v in B.vertices:
            outs = [c for c in v if c in outer]
            if outs:
                bases.add(min(outs, key=lambda c: outer[c]))
            else:
                bases.add(min(v, key=lambda c: inner[c]))
        shift = {c: 1 for c in bases}

        def tau_of(c, j):
            if c == b:
                return tb, j + l
            if c == tb:
                return b, j - l
            return B.tau[c], j

        return _paired(B, r, shift, tau_of, f"E_{r},{l}")
    raise BrauerError(f"unknown case {case!r}")


# ------------------------------------------------------------- isomorphisms


def _signature(E: BrauerGSet, e: str):
    in_u = e in E.U
    return (E.degree[e], E.orbit_size(e), in_u, in_u and E.tau[e] == e)


def _extend(E1: BrauerGSet, E2: BrauerGSet, a: str, b: str, used: set) -> dict | None:
    f = {a: b}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        y = f[x]
        if _signature(E1, x) != _signature(E2, y):
            return None
        pairs = [(E1.g[x], E2.g[y]), (E1.ginv[x], E2.ginv[y])]
        if x in E1.U:
            pairs.append((E1.tau[x], E2.tau[y]))
        for x2, y2 in pairs:
            if x2 in f:
                if f[x2] != y2:
                    return None
            else:
                f[x2] = y2
                queue.append(x2)
    images = set(f.values())
    if len(images) != len(f) or images & used:
        return None
    return f


def are_isomorphic(E1: BrauerGSet, E2: BrauerGSet) -> dict | None:
    """An isomorphism E1 -> E2 if one exists (first found in anchor order)."""
    if len(E1.half_edges) != len(E2.half_edges) or len(E1.U) != len(E2.U):
        return None
    s1 = sorted(_signature(E1, e) for e in E1.half_edges)
    if s1 != sorted(_signature(E2, e) for e in E2.half_edges):
        return None
    comps = connected_components(E1)

    def anchor(comp):
        return min(comp, key=lambda e: (_signature(E1, e), e))

    anchors = [anchor(c) for c in comps]

    def search(k, used, acc):
        if k == len(anchors):
            return acc
        a = anchors[k]
        sig = _signature(E1, a)
        for b in E2.half_edges:
            if b in used or _signature(E2, b) != sig:
                continue
            f = _extend(E1, E2, a, b, used)
            if f is None:
                continue
            res = search(k + 1, used | set(f.values()), {**acc, **f})
            if res is not None:
                return res
        return None

    return search(0, set(), {})


# ----------------------------------------------------------------- lifting


def lift_walk(cov: CoveringMap, w: Walk, start: str) -> Walk:
    """The unique walk over ``w`` that starts at ``start``."""
    if cov.mapping.get(start) != w.source:
        raise BrauerError(f"{start!r} does not lie over {w.source!r}")
    x = start
    for letter in w.letters:
        if letter == TAU and x not in cov.source.U:
            raise BrauerError("covering does not lift tau")
        x = cov.source.step(x, letter)
    return Walk(start, tuple(w.letters))


def lift_target(cov: CoveringMap, w: Walk, start: str) -> str:
    lifted = lift_walk(cov, w, start)
    x = lifted.source
    for letter in lifted.letters:
        x = cov.source.step(x, letter)
    return x
