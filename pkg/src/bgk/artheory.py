"""Stable AR-components of domestic algebras and AR-quiver descriptors of
representation-finite ones (Brauer relations, configurations of ZA_n and
the Riedtmann presentation)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

from .algebra import AlgebraPresentation, Relation
from .classify import (
    DOMESTIC, REP_FINITE, RepType, classify_rep_type, monodromy,
)
from .constructions import (
    exceptional_vertices, hat, is_admissible, is_brauer_tree, sigma_quotient,
    unfold_exceptional_tree,
)
from .core import G, TAU, BrauerError, BrauerGSet, Walk, make_bgset


# ------------------------------------------------------------------ tubes


def dtr_permutation(E: BrauerGSet) -> dict:
    """e -> sigma^{-1} (g tau)^2 e."""
    sinv = {v: k for k, v in E.sigma.items()}
    out = {}
    for e in E.half_edges:
        x = E.g[E.tau[E.g[E.tau[e]]]]
        out[e] = sinv[x]
    return out


def _orbit_lengths(perm: dict) -> list:
    seen, out = set(), []
    for x in sorted(perm):
        if x in seen:
            continue
        n, y = 0, x
        while y not in seen:
            seen.add(y)
            n += 1
            y = perm[y]
        out.append(n)
    return sorted(out)


@dataclass(frozen=True)
class TubeData:
    """All orbit lengths of sigma^{-1}(g tau)^2 and the exceptional ranks (> 1)."""

    orbits: tuple
    ranks: tuple

    def as_dict(self):
        return {"orbits": _multiset(self.orbits), "ranks": _multiset(self.ranks)}


def _multiset(values) -> list:
    return [{"value": v, "count": c} for v, c in sorted(Counter(values).items())]


def exceptional_tubes(E: BrauerGSet) -> TubeData:
    rt = classify_rep_type(E)
    if rt.tag == REP_FINITE:
        raise BrauerError("exceptional tubes need a representation-infinite algebra")
    orbits = tuple(_orbit_lengths(dtr_permutation(E)))
    return TubeData(orbits, tuple(x for x in orbits if x > 1))


@dataclass(frozen=True)
class ARSummary:
    """Census of the stable AR-quiver of a domestic algebra.

    ``orbit_census`` lists every tube ZA_inf/<tau^t> forced by the formulas,
    including rank 1; ``tube_ranks`` keeps only the exceptional ones.
    ``za_tilde`` holds (p, q, count) for the ZÃ_{p,q} components.
    """

    rep_type: RepType
    orbit_census: tuple
    tube_ranks: tuple
    za_tilde: tuple
    homogeneous: bool = True

    @property
    def za_count(self) -> int:
        return sum(c for _, _, c in self.za_tilde)

    def as_dict(self):
        return {
            "rep_type": self.rep_type.as_dict(),
            "tubes": _multiset(self.tube_ranks),
            "za_tilde": [{"p": p, "q": q, "count": c} for p, q, c in self.za_tilde],
            "homogeneous": self.homogeneous,
        }

    def to_dot(self) -> str:
        lines = ["digraph stable_ar {", "  node [shape=ellipse];"]
        k = 0
        for rank, count in sorted(Counter(self.tube_ranks).items()):
            for _ in range(count):
                lines.append(f'  c{k} [label="ZA_inf/<tau^{rank}>"];')
                k += 1
        for p, q, count in self.za_tilde:
            for _ in range(count):
                lines.append(f'  c{k} [label="ZA~_{{{p},{q}}}", shape=box];')
                k += 1
        lines.append('  h [label="ZA_inf/<tau> (infinitely many)", style=dashed];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def domestic_census(rt: RepType, n: int | None = None) -> tuple:
    """(orbit lengths, ZÃ components) from the domestic parameters.

    ``n`` is the vertex count of E/<sigma> (cases 1 and 2).
    """
    r = rt.r
    if rt.case == 1:
        return (n,) * (4 * r), ((n, n, 2 * r),)
    if rt.case == 2:
        return (n - 1,) * (4 * r - 2), ((n - 1, n - 1, 2 * r - 1),)
    m, p, q, l = rt.m, rt.p, rt.q, rt.l
    G_ = gcd(r, m + 2 * l) if m % 2 else gcd(2 * r, m + 2 * l)
    a, b = r * (m + 2 * p) // G_, r * (m + 2 * q) // G_
    return (a,) * G_ + (b,) * G_, ((max(a, b), min(a, b), G_),)


def stable_ar_summary(E: BrauerGSet) -> ARSummary:
    rt = classify_rep_type(E)
    if rt.tag != DOMESTIC:
        raise BrauerError("the stable AR census is computed for domestic algebras only")
    B, _ = sigma_quotient(E)
    orbits, za = domestic_census(rt, len(B.vertices))
    orbits = tuple(sorted(orbits))
    return ARSummary(rt, orbits, tuple(x for x in orbits if x > 1), za)


# ------------------------------------------------------- Brauer relations


def _tg_positions(B: BrauerGSet, e: str) -> dict:
    """i with x = (tau g)^i e, for every half-edge x of a tree."""
    pos, x, i = {}, e, 0
    while x not in pos:
        pos[x] = i
        x = B.tau[B.g[x]]
        i += 1
    return pos


def _require_trivial_tree(B: BrauerGSet):
    if not is_brauer_tree(B) or exceptional_vertices(B):
        raise BrauerError("needs a Brauer tree with trivial f-degree")


@dataclass(frozen=True)
class BrauerRelation:
    """Equivalence relation on residues 0..n-1 with the successor map.

    ``shift[k]`` in 1..n is the step from k to its successor, so the
    successor of k is (k + shift[k]) mod n.
    """

    n: int
    shift: tuple
    anchor: str = ""

    def successor(self, k: int) -> int:
        return (k + self.shift[k % self.n]) % self.n

    @property
    def classes(self) -> tuple:
        seen, out = set(), []
        for k in range(self.n):
            if k in seen:
                continue
            cls, x = [], k
            while x not in seen:
                seen.add(x)
                cls.append(x)
                x = self.successor(x)
            out.append(tuple(sorted(cls)))
        return tuple(out)

    def crossing_pairs(self) -> list:
        """Pairs of classes whose circular intervals interleave."""
        cls = self.classes
        label = {x: i for i, c in enumerate(cls) for x in c}
        out = []
        for a in range(self.n):
            for b in range(a + 1, self.n):
                for c in range(a + 1, b):
                    for d in range(b + 1, self.n):
                        if label[a] == label[b] and label[c] == label[d] and \
                                label[a] != label[c]:
                            out.append((cls[label[a]], cls[label[c]]))
        return sorted(set(out))

    def as_dict(self):
        return {"n": self.n, "classes": [list(c) for c in self.classes],
                "successor": [self.successor(k) for k in range(self.n)]}


def brauer_relation(B: BrauerGSet, e: str) -> BrauerRelation:
    _require_trivial_tree(B)
    n = len(B.edges)
    pos = _tg_positions(B, e)
    if len(pos) != 2 * n:
        raise BrauerError("the (tau g)-orbit of the anchor misses half-edges")
    shift = []
    for k in range(n):
        x = B.g[_nth(B, e, 2 * k)]
        i = pos[x]
        if i % 2:
            raise BrauerError("successor lands on an odd position")
        j = (i // 2 - k) % n
        shift.append(j or n)
    rel = BrauerRelation(n, tuple(shift), e)
    if rel.crossing_pairs():
        raise BrauerError("classes cross")
    return rel


def _nth(B: BrauerGSet, e: str, i: int) -> str:
    x = e
    for _ in range(i):
        x = B.tau[B.g[x]]
    return x


# ---------------------------------------------------------- configurations


@dataclass(frozen=True)
class Configuration:
    """The configuration of ZA_n with one point (i, j_i) on each going-up
    diagonal; ``shift`` holds j_i for one period of length n."""

    n: int
    shift: tuple

    def j(self, i: int) -> int:
        return self.shift[i % self.n]

    def contains(self, i: int, j: int) -> bool:
        return 1 <= j <= self.n and self.j(i) == j

    def beta(self, p: int) -> int:
        return p + self.j(p)

    def beta_inverse(self, p: int) -> int:
        for x in range(p - self.n, p):
            if self.beta(x) == p:
                return x
        raise BrauerError("no point on the going-down diagonal")

    def alpha(self, p: int) -> int:
        return self.n + self.beta_inverse(p) + 1

    def points(self, lo: int, hi: int) -> list:
        return [(i, self.j(i)) for i in range(lo, hi)]

    def as_dict(self):
        return {"n": self.n, "period": self.n,
                "points": [list(p) for p in self.points(0, self.n)]}


def configuration(rel: BrauerRelation) -> Configuration:
    return Configuration(rel.n, rel.shift)


def configuration_problems(C: Configuration, window: int = 3) -> list:
    """Checks the singleton-diagonal property and alpha beta = shift by n + 1."""
    n = C.n
    out = []
    lo, hi = -window * n, window * n
    pts = {(i, j) for i in range(lo - n, hi + n) for j in range(1, n + 1) if C.contains(i, j)}
    for p in range(lo, hi):
        up = [pt for pt in pts if pt[0] == p]
        down = [pt for pt in pts if pt[0] + pt[1] == p]
        if len(up) != 1:
            out.append(f"going-up diagonal {p} meets C in {len(up)} points")
        if len(down) != 1:
            out.append(f"going-down diagonal {p} meets C in {len(down)} points")
        if C.alpha(C.beta(p)) != p + n + 1:
            out.append(f"alpha(beta({p})) != {p + n + 1}")
    return out


def is_translation_stable(C: Configuration, t: int) -> bool:
    return all(C.j(i + t) == C.j(i) for i in range(C.n))


def phi(n: int, p: int, i: int, j: int) -> tuple:
    return (i + j - p - 1, n + 1 - j)


def is_symmetric(C: Configuration, p: int) -> bool:
    return all(C.contains(*phi(C.n, p, i, C.j(i))) for i in range(C.n))


# ------------------------------------------------------------- descriptor


@dataclass(frozen=True)
class ARQuiverDescriptor:
    """(ZA_n)_C modulo tau^K (case a) or tau^K composed with phi (case b)."""

    case: str
    n: int
    m: int
    r: int
    K: int
    relation: BrauerRelation
    configuration: Configuration
    p: int | None = None

    @property
    def group(self) -> str:
        return "translation" if self.case == "a" else "translation-reflection"

    def text(self) -> str:
        gen = f"tau^{self.K}" if self.case == "a" else f"tau^{self.K} phi"
        return f"(ZA_{self.n})_C/<{gen}>"

    @property
    def stable_vertex_count(self) -> int:
        return self.K * self.n

    @property
    def vertex_count(self) -> int:
        return self.K * (self.n + 1)

    def tau_orbit_lengths(self) -> tuple:
        """Lengths of the tau-orbits of the stable part, one per row class."""
        if self.case == "a":
            return (self.K,) * self.n
        return tuple(sorted((self.K,) + (2 * self.K,) * self.p))

    def generator(self, x: int) -> int:
        """Action of the group generator on Z = vertices of the covering quiver."""
        if self.case == "a":
            return x + self.K
        return self.configuration.beta_inverse(x) + self.p + 1 + self.K

    @property
    def swaps(self) -> bool:
        return self.case == "b"

    def as_dict(self):
        out = {"case": self.case, "n": self.n, "m": self.m, "r": self.r, "K": self.K,
               "group": self.group, "quiver": self.text(),
               "brauer_relation": self.relation.as_dict(),
               "configuration": self.configuration.as_dict(),
               "stable_vertices": self.stable_vertex_count,
               "vertices": self.vertex_count}
        if self.p is not None:
            out["p"] = self.p
        return out


def rf_ar_descriptor(E: BrauerGSet) -> ARQuiverDescriptor:
    rt = classify_rep_type(E)
    if rt.tag != REP_FINITE:
        raise BrauerError("the AR-quiver descriptor needs a representation-finite algebra")
    Q, cov = sigma_quotient(E)
    if is_admissible(E, [dict(E.sigma)]):
        exc = exceptional_vertices(Q)
        h = min(exc[0]) if exc else min(Q.half_edges)
        m = int(Q.f_degree(h)) if exc else 1
        B, _ = unfold_exceptional_tree(Q, h)
        anchor = f"{h}|0"
        n = len(B.edges)
        x = Walk(h, (G,) * Q.orbit_size(h))
        act = monodromy(cov, h, {"x": x})
        r = act.orbit_sizes("x")[0]
        if (n * r) % m:
            raise BrauerError("n r is not divisible by m")
        rel = brauer_relation(B, anchor)
        C = configuration(rel)
        return ARQuiverDescriptor("a", n, m, r, n * r // m, rel, C)
    doubles = Q.doubles
    if len(doubles) != 1:
        raise BrauerError("expected a quotient with a single double half-edge")
    h = doubles[0]
    B, _ = hat(Q)
    n = len(B.edges)
    p = (n - 1) // 2
    walks = {"x": Walk(h, (G,) * Q.orbit_size(h)), "y": Walk(h, (TAU,))}
    act = monodromy(cov, h, walks)
    base = act.fiber[0]
    px, py = act.permutations["x"], act.permutations["y"]
    r, y = None, base
    for k in range(1, len(act.fiber) + 1):
        y = px[y]
        if py[y] == base:
            r = k
            break
    if r is None:
        raise BrauerError("no x^r y in the stabilizer")
    rel = brauer_relation(B, f"{h}:1")
    C = configuration(rel)
    return ARQuiverDescriptor("b", n, 1, r, n * r, rel, C, p=p)


# ------------------------------------------------------------- Riedtmann


@dataclass(frozen=True)
class RiedtmannData:
    """The covering quiver data folded to one period of the group."""

    period: int
    vertex: dict  # integer -> class representative
    arrow: dict  # ("alpha"|"beta", integer) -> class name
    alpha: dict
    beta: dict
    a: dict
    b: dict


def _powers_to(f, x: int, target: int, limit: int) -> int:
    k, y = 0, x
    while y != target:
        y = f(y)
        k += 1
        if k > limit or y > target:
            raise BrauerError("path does not reach r + n")
    return k


def riedtmann_data(desc: ARQuiverDescriptor) -> RiedtmannData:
    C = desc.configuration
    n = desc.n
    P = desc.K if desc.case == "a" else 2 * desc.K
    lo, hi = -2 * P - 2 * n, 3 * P + 2 * n

    def fold(x):
        return x % P

    # vertex classes under the generator, on residues mod P
    vertex = {}
    for x in range(P):
        if x in vertex:
            continue
        orbit, y = [], x
        while fold(y) not in orbit:
            orbit.append(fold(y))
            y = desc.generator(y)
        rep = min(orbit)
        for z in orbit:
            if vertex.get(z, rep) != rep:
                raise BrauerError("group does not act freely")
            vertex[z] = rep
    if len(set(vertex.values())) != desc.K:
        raise BrauerError("group does not act freely on the configuration")
    arrow = {}
    for kind in ("alpha", "beta"):
        for x in range(P):
            key = (kind, x)
            if key in arrow:
                continue
            orbit, k, y = [], kind, x
            while (k, fold(y)) not in orbit:
                orbit.append((k, fold(y)))
                y = desc.generator(y)
                if desc.swaps:
                    k = "beta" if k == "alpha" else "alpha"
            rk, rx = min(orbit, key=lambda t: (t[1], t[0]))
            name = f"{rk}_{rx}"
            for o in orbit:
                arrow[o] = name
    alpha, beta, a, b = {}, {}, {}, {}
    for x in range(P):
        alpha[x] = C.alpha(x)
        beta[x] = C.beta(x)
        a[x] = _powers_to(C.alpha, x, x + n, hi - lo)
        b[x] = _powers_to(C.beta, x, x + n, hi - lo)
    return RiedtmannData(P, vertex, arrow, alpha, beta, a, b)


def riedtmann_presentation(desc: ARQuiverDescriptor, admissible: bool = True) -> AlgebraPresentation:
    """Residue quiver of the covering quiver with its relations.

    The literal form (``admissible=False``) has an alpha and a beta arrow
    per vertex, the two zero relations and the commutativity relation.  When
    some a_r or b_r is 1 the corresponding arrow equals a path of others;
    the admissible form eliminates those arrows.
    """
    if admissible:
        return _admissible_riedtmann(desc)
    D = riedtmann_data(desc)
    P = D.period
    C = desc.configuration

    def v(x):
        return str(D.vertex[x % P])

    def arr(kind, x):
        return D.arrow[(kind, x % P)]

    arrows = {}
    for (kind, x), name in D.arrow.items():
        t = D.alpha[x] if kind == "alpha" else D.beta[x]
        arrows.setdefault(name, (name, v(x), v(t)))
    rels = {}
    for x in range(P):
        za = Relation("zero", ((arr("alpha", x), arr("beta", D.alpha[x])),), "beta.alpha")
        zb = Relation("zero", ((arr("beta", x), arr("alpha", D.beta[x])),), "alpha.beta")
        pa, pb, y = [], [], x
        for _ in range(D.a[x]):
            pa.append(arr("alpha", y))
            y = C.alpha(y)
        y = x
        for _ in range(D.b[x]):
            pb.append(arr("beta", y))
            y = C.beta(y)
        cm = Relation("commutativity", (tuple(pa), tuple(pb)), "alpha-path = beta-path")
        for rel in (za, zb, cm):
            rels.setdefault(rel.key(), rel)
    vertices = tuple(sorted({v(x) for x in range(P)}, key=int))
    arrow_list = tuple(sorted(arrows.values(), key=lambda t: (int(t[0].split("_")[1]), t[0])))
    rel_list = tuple(sorted(rels.values(), key=lambda r: (r.kind != "zero", r.paths)))
    return AlgebraPresentation("riedtmann", vertices, arrow_list, rel_list)


def _admissible_riedtmann(desc: ARQuiverDescriptor) -> AlgebraPresentation:
    # arrows of degree 1 disappear exactly as in the reduced flavor of the
    # Brauer G-set built from the arrow classes
    from .algebra import quiver_presentation

    D = riedtmann_data(desc)
    R = quiver_presentation(riedtmann_bgset(desc), "reduced")
    vertex = {}
    for (kind, x), name in D.arrow.items():
        vertex[f"P({name})"] = str(D.vertex[x])
    names = {f"L({name})": name for name in D.arrow.values()}
    verts = tuple(sorted({vertex[v] for v in R.vertices}, key=int))
    arrows = tuple((names[a], vertex[s], vertex[t]) for a, s, t in R.arrows)
    rels = tuple(Relation(r.kind, tuple(tuple(names[a] for a in p) for p in r.paths), r.rule)
                 for r in R.relations)
    return AlgebraPresentation("riedtmann", verts, arrows, rels, R.warning)


def riedtmann_bgset(desc: ARQuiverDescriptor) -> BrauerGSet:
    """The Brauer G-set whose algebra has the Riedtmann quiver: half-edges are
    arrow classes, g follows alpha (beta) arrows and tau swaps alpha_r, beta_r."""
    D = riedtmann_data(desc)
    C = desc.configuration
    g, tau, deg = {}, {}, {}

    def setp(d, k, v):
        if d.get(k, v) != v:
            raise BrauerError("group does not commute with the arrow structure")
        d[k] = v

    for x in range(D.period):
        ax, bx = D.arrow[("alpha", x)], D.arrow[("beta", x)]
        setp(g, ax, D.arrow[("alpha", C.alpha(x) % D.period)])
        setp(g, bx, D.arrow[("beta", C.beta(x) % D.period)])
        setp(tau, ax, bx)
        setp(tau, bx, ax)
        setp(deg, ax, D.a[x])
        setp(deg, bx, D.b[x])
    return make_bgset(g, tau, deg, name="riedtmann")


def riedtmann_arrow_map(desc: ARQuiverDescriptor) -> dict:
    """Arrow class name -> L(name) in the algebra of riedtmann_bgset."""
    D = riedtmann_data(desc)
    return {name: f"L({name})" for name in set(D.arrow.values())}


__all__ = [
    "TubeData", "ARSummary", "BrauerRelation", "Configuration", "ARQuiverDescriptor",
    "RiedtmannData", "dtr_permutation", "exceptional_tubes", "domestic_census",
    "stable_ar_summary", "brauer_relation", "configuration", "configuration_problems",
    "is_translation_stable", "is_symmetric", "phi", "rf_ar_descriptor", "riedtmann_data",
    "riedtmann_presentation", "riedtmann_bgset", "riedtmann_arrow_map",
]
