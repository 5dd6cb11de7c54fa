"""Shape statistics, representation type, fundamental-group invariants and
monodromy of coverings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .constructions import (
    CoveringMap, exceptional_vertices, is_admissible, is_brauer_tree, lift_target,
    reduced_form, sigma_quotient,
)
from .core import G, GINV, TAU, BrauerError, BrauerGSet, Walk, is_connected, nakayama

REP_FINITE, DOMESTIC, NON_DOMESTIC = "rep-finite", "domestic", "non-domestic-tame"


@dataclass(frozen=True)
class CycleData:
    """The unique cycle of a unicyclic diagram, split by the base half-edge b.

    The <g tau>-orbit of b has length m + 2p ("outer"), the other m + 2q.
    """

    m: int
    p: int
    q: int
    base: str
    outer: tuple
    inner: tuple
    cycle_half_edges: tuple


@dataclass(frozen=True)
class ShapeStats:
    n: int
    k: int
    l: int
    degrees: tuple
    exceptional: tuple
    cycle: CycleData | None = None

    @property
    def euler_cycle_rank(self) -> int:
        return self.k - self.n + 1

    def as_dict(self) -> dict:
        out = {"n": self.n, "k": self.k, "l": self.l, "degrees": list(self.degrees),
               "cycle_rank": self.euler_cycle_rank, "exceptional": list(self.exceptional)}
        if self.cycle:
            out.update(m=self.cycle.m, p=self.cycle.p, q=self.cycle.q, base=self.cycle.base)
        return out


def _gt_orbit(B: BrauerGSet, x: str) -> tuple:
    out = [x]
    y = B.g[B.tau[x]]
    while y != x:
        out.append(y)
        y = B.g[B.tau[y]]
    return tuple(out)


def _cycle_edges(B: BrauerGSet) -> list:
    """Edges left after repeatedly pruning leaves of the diagram."""
    edges = list(B.edges)
    while True:
        deg = {}
        for a, b in edges:
            for x in (a, b):
                v = B.vertex_of[x]
                deg[v] = deg.get(v, 0) + 1
        keep = [
            (a, b) for a, b in edges
            if deg[B.vertex_of[a]] > 1 and deg[B.vertex_of[b]] > 1
        ]
        if len(keep) == len(edges):
            return keep
        edges = keep


def shape_stats(B: BrauerGSet) -> ShapeStats:
    """Counts n, k, l, the f-degrees and, for unicyclic B without doubles, m, p, q."""
    if len(B.U) != len(B.half_edges):
        raise BrauerError("shape statistics need U = E")
    if not B.is_modified_bg:
        raise BrauerError("f-degree is not integral")
    degrees = tuple(int(B.f_degree(v[0])) for v in B.vertices)
    exc = tuple(i for i, d in enumerate(degrees) if d > 1)
    n, k, l = len(B.vertices), len(B.edges), len(B.doubles)
    cycle = None
    if k - n + 1 == 1 and l == 0 and is_connected(B):
        cyc = _cycle_edges(B)
        m = len(cyc)
        halves = tuple(sorted(x for e in cyc for x in e))
        b = halves[0]
        outer = _gt_orbit(B, b)
        inner = _gt_orbit(B, B.tau[b])
        p, q = (len(outer) - m) // 2, (len(inner) - m) // 2
        if set(outer) & set(inner) or m + p + q != k:
            raise BrauerError("unicyclic diagram does not split into two faces")
        cycle = CycleData(m, p, q, b, outer, inner, halves)
    return ShapeStats(n, k, l, degrees, exc, cycle)


def domestic_case(st: ShapeStats) -> int | None:
    """Which of the three domestic shapes a quotient has, if any."""
    rank = st.euler_cycle_rank
    ones = all(d == 1 for d in st.degrees)
    if st.l == 2 and rank == 0 and ones:
        return 1
    if st.l == 0 and rank == 0 and sorted(st.degrees)[-2:] == [2, 2] and \
            sum(1 for d in st.degrees if d != 1) == 2:
        return 2
    if st.l == 0 and rank == 1 and ones:
        return 3
    return None


def domestic_case_problem(B: BrauerGSet, case: int) -> str:
    """Empty string if B has the shape of ``case``, otherwise the failed condition."""
    if not is_connected(B):
        return "base is not connected"
    try:
        st = shape_stats(B)
    except BrauerError as exc:
        return str(exc)
    rank = st.euler_cycle_rank
    want = {1: (2, 0), 2: (0, 0), 3: (0, 1)}.get(case)
    if want is None:
        return f"unknown case {case}"
    if st.l != want[0]:
        return f"needs l={want[0]} double half-edges, found {st.l}"
    if rank != want[1]:
        return f"needs k-n+1={want[1]}, found {rank}"
    if case == 2:
        twos = [d for d in st.degrees if d == 2]
        if len(twos) != 2 or any(d not in (1, 2) for d in st.degrees):
            return "needs exactly two vertices of f-degree 2 and all others 1"
    elif any(d != 1 for d in st.degrees):
        return "needs every f-degree equal to 1"
    return ""


# -------------------------------------------------------------- rep type


@dataclass(frozen=True)
class RepType:
    tag: str
    r: int = 1
    case: int | None = None
    subcase: str | None = None
    m: int | None = None
    p: int | None = None
    q: int | None = None
    l: int | None = None

    def as_dict(self) -> dict:
        out = {"type": self.tag}
        for key in ("case", "subcase", "r", "m", "p", "q", "l"):
            val = getattr(self, key)
            if val is not None and (self.tag != NON_DOMESTIC or key == "r"):
                out[key] = val
        return out


def _require_fms(E: BrauerGSet):
    if not E.is_fms_bg:
        raise BrauerError("input is not an f_ms-BG (needs U = E and tau without fixed points)")
    if not is_connected(E):
        raise BrauerError("input is not connected")


def is_brauer_tree_with_exceptional(B: BrauerGSet) -> bool:
    return is_brauer_tree(B) and len(exceptional_vertices(B)) <= 1


def case3_twist(E: BrauerGSet, B: BrauerGSet, cov: CoveringMap, st: ShapeStats) -> int:
    """The twist l of E over its unicyclic quotient, read off the fiber of b."""
    r = nakayama(E).order
    cyc = st.cycle
    start = min(cov.fiber(cyc.base))
    y = Walk(cyc.base, (TAU, G) * (cyc.m + 2 * cyc.p))
    end = lift_target(cov, y, start)
    x, s = start, 0
    while x != end:
        x = E.sigma[x]
        s += 1
    l = (s - cyc.m - cyc.p) % r
    return l or r


def classify_rep_type(E: BrauerGSet) -> RepType:
    _require_fms(E)
    r = nakayama(E).order
    B, cov = sigma_quotient(E)
    admissible = is_admissible(E, [dict(E.sigma)])
    R = reduced_form(E)
    if is_brauer_tree_with_exceptional(R):
        exc = exceptional_vertices(B)
        m = int(B.f_degree(exc[0][0])) if exc else 1
        return RepType(REP_FINITE, r=r, subcase="a" if admissible else "b", m=m)
    st = shape_stats(B)
    case = domestic_case(st)
    if case is None:
        return RepType(NON_DOMESTIC, r=r)
    if case == 1:
        return RepType(DOMESTIC, r=r // 2, case=1)
    if case == 2:
        return RepType(DOMESTIC, r=(r + 1) // 2, case=2)
    cyc = st.cycle
    return RepType(DOMESTIC, r=r, case=3, m=cyc.m, p=cyc.p, q=cyc.q,
                   l=case3_twist(E, B, cov, st))


def odd_degree_exponent(E: BrauerGSet, e: str):
    """(N, p): N minimal with g^N e in the sigma-orbit of e, and g^N e = sigma^p e."""
    orbit = [e]
    x = E.sigma[e]
    while x != e:
        orbit.append(x)
        x = E.sigma[x]
    pos = {y: i for i, y in enumerate(orbit)}
    x, N = E.g[e], 1
    while x not in pos:
        x, N = E.g[x], N + 1
    return N, pos[x]


# ------------------------------------------------------- fundamental groups


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple
    walks: Mapping = field(default_factory=dict)
    base: str | None = None

    def as_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [word_text(w) for w in self.relators],
            "base": self.base,
            "walks": {k: self.walks[k].text() for k in self.generators if k in self.walks},
        }


def word_text(word) -> str:
    parts = [x if k == 1 else f"{x}^{k}" for x, k in word]
    return " ".join(parts) if parts else "1"


def _inverse_letters(letters) -> tuple:
    inv = {G: GINV, GINV: G, TAU: TAU}
    return tuple(inv[x] for x in reversed(letters))


def pi1_presentation(B: BrauerGSet, base: str | None = None) -> GroupPresentation:
    """Generators a_i (vertices), b_i (independent cycles), c_j (doubles) with
    representative closed walks from a spanning tree of the diagram."""
    if not is_connected(B):
        raise BrauerError("input is not connected")
    if any(B.f_degree(v[0]).denominator != 1 for v in B.vertices):
        raise BrauerError("f-degree is not integral")
    base = base or B.half_edges[0]
    entry = {B.vertex_of[base]: (base, ())}
    order = [B.vertex_of[base]]
    tree = set()
    i = 0
    while i < len(order):
        v = order[i]
        h, path = entry[v]
        x = h
        for k in range(B.orbit_size(h)):
            if x in B.U and B.tau[x] != x:
                y = B.tau[x]
                w = B.vertex_of[y]
                if w not in entry:
                    entry[w] = (y, path + (G,) * k + (TAU,))
                    order.append(w)
                    tree.add(min(x, y))
            x = B.g[x]
        i += 1

    def to(x):
        """Letters from base to half-edge x through the tree."""
        h, path = entry[B.vertex_of[x]]
        k = 0
        while B.g_power(h, k) != x:
            k += 1
        return path + (G,) * k

    walks, gens, degs = {}, [], {}
    for idx, v in enumerate(order, start=1):
        h, path = entry[v]
        name = f"a{idx}"
        gens.append(name)
        degs[name] = int(B.f_degree(h))
        walks[name] = Walk(base, path + (G,) * B.orbit_size(h) + _inverse_letters(path))
    nb = 0
    for x, y in B.edges:
        if x in tree:
            continue
        nb += 1
        name = f"b{nb}"
        gens.append(name)
        walks[name] = Walk(base, to(x) + (TAU,) + _inverse_letters(to(y)))
    doubles = []
    for j, x in enumerate(B.doubles, start=1):
        name = f"c{j}"
        doubles.append(name)
        walks[name] = Walk(base, to(x) + (TAU,) + _inverse_letters(to(x)))
    gens.extend(doubles)
    a1 = ("a1", degs["a1"])
    rels = []
    for name in gens:
        if name[0] == "a" and name != "a1":
            rels.append((a1, (name, -degs[name])))
    for name in gens:
        if name[0] in "bc":
            rels.append((a1, (name, 1), ("a1", -degs["a1"]), (name, -1)))
    for name in doubles:
        rels.append(((name, 2),))
    return GroupPresentation(tuple(gens), tuple(rels), walks, base)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple

    def as_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def text(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelian_invariants(generators, relators) -> AbelianInvariants:
    """Invariant factors of the abelianized presentation (Smith normal form)."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    col = {x: i for i, x in enumerate(generators)}
    rows = []
    for word in relators:
        row = [0] * len(generators)
        for x, k in word:
            row[col[x]] += k
        if any(row):
            rows.append(row)
    if not rows:
        return AbelianInvariants(len(generators), ())
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [d for d in diag if d]
    torsion = tuple(sorted(d for d in nonzero if d > 1))
    return AbelianInvariants(len(generators) - len(nonzero), torsion)


def reduced_presentation(B: BrauerGSet) -> GroupPresentation:
    """The presentation of pi1(B) with the central element a1^d1 killed."""
    pres = pi1_presentation(B)
    d1 = int(B.f_degree(pres.base))
    rels = tuple(pres.relators) + ((("a1", d1),),)
    return GroupPresentation(pres.generators, rels, pres.walks, pres.base)


def reduced_pi1_abelianization(E: BrauerGSet) -> AbelianInvariants:
    _require_fms(E)
    B, _ = sigma_quotient(E)
    pres = reduced_presentation(B)
    return abelian_invariants(pres.generators, pres.relators)


# ---------------------------------------------------------------- monodromy


@dataclass(frozen=True)
class MonodromyAction:
    base: str
    fiber: tuple
    permutations: Mapping
    walks: Mapping

    def is_transitive(self) -> bool:
        if not self.fiber:
            return True
        seen = {self.fiber[0]}
        stack = [self.fiber[0]]
        while stack:
            x = stack.pop()
            for perm in self.permutations.values():
                y = perm[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.fiber)

    def orbit_sizes(self, name: str) -> list:
        perm = self.permutations[name]
        seen, out = set(), []
        for x in self.fiber:
            if x in seen:
                continue
            n, y = 0, x
            while True:
                seen.add(y)
                n += 1
                y = perm[y]
                if y == x:
                    break
            out.append(n)
        return out

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "fiber": list(self.fiber),
            "walks": {k: w.text() for k, w in self.walks.items()},
            "permutations": {k: [p[x] for x in self.fiber] for k, p in self.permutations.items()},
            "transitive": self.is_transitive(),
        }


def monodromy(cov: CoveringMap, base: str, walks: Mapping | None = None) -> MonodromyAction:
    """Action of closed walks at ``base`` on the fiber over it, by lifting."""
    if base not in cov.target.g:
        raise BrauerError(f"{base!r} is not a half-edge of the target")
    if walks is None:
        walks = pi1_presentation(cov.target, base=base).walks
    fiber = cov.fiber(base)
    perms = {}
    for name, w in walks.items():
        if w.source != base:
            raise BrauerError(f"walk {name} does not start at {base!r}")
        perms[name] = {x: lift_target(cov, w, x) for x in fiber}
    return MonodromyAction(base, fiber, perms, dict(walks))


def pi1_class(E: BrauerGSet) -> str:
    rt = classify_rep_type(E)
    if rt.tag == REP_FINITE:
        return "Z"
    if rt.tag == DOMESTIC:
        return "ZxZ" if rt.case == 3 else "AmalgamA2B2"
    return "Other"


__all__ = [
    "REP_FINITE", "DOMESTIC", "NON_DOMESTIC", "CycleData", "ShapeStats", "RepType",
    "GroupPresentation", "AbelianInvariants", "MonodromyAction", "shape_stats",
    "domestic_case", "domestic_case_problem", "classify_rep_type", "pi1_presentation",
    "reduced_presentation", "abelian_invariants", "reduced_pi1_abelianization",
    "monodromy", "pi1_class", "odd_degree_exponent", "case3_twist",
]
