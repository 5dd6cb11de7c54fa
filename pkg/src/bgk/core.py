"""Brauer G-sets, walks and the homotopy normal form.

A Brauer G-set is a finite set of half-edges E with a permutation g, a subset
U with an involution tau on it (fixed points allowed) and a degree function d
that is constant on g-orbits and makes sigma(e) = g^d(e) e commute with tau.

Half-edge identifiers are opaque strings.  Every canonical choice in the
package uses plain lexicographic order on them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

G, GINV, TAU = "g", "g^-1", "tau"
LETTERS = (G, GINV, TAU)
_INVERSE_LETTER = {G: GINV, GINV: G, TAU: TAU}


class BrauerError(ValueError):
    """Raised when an input does not satisfy the preconditions of an operation."""


class InvalidBrauerGSet(BrauerError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


class InvalidWalk(BrauerError):
    pass


def _freeze(mapping: Mapping) -> Mapping:
    return MappingProxyType(dict(sorted(mapping.items())))


@dataclass(frozen=True, eq=False)
class BrauerGSet:
    half_edges: tuple
    g: Mapping
    U: frozenset
    tau: Mapping
    degree: Mapping
    name: str | None = field(default=None)

    def __eq__(self, other):
        if not isinstance(other, BrauerGSet):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @cached_property
    def _key(self):
        return (
            self.half_edges,
            tuple(self.g[e] for e in self.half_edges),
            tuple(sorted(self.U)),
            tuple(sorted(self.tau.items())),
            tuple(self.degree[e] for e in self.half_edges),
        )

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<BrauerGSet{label} |E|={len(self.half_edges)} |U|={len(self.U)}>"

    @cached_property
    def ginv(self) -> Mapping:
        return MappingProxyType({v: k for k, v in self.g.items()})

    @cached_property
    def sigma(self) -> Mapping:
        return MappingProxyType({e: self.g_power(e, self.degree[e]) for e in self.half_edges})

    def g_power(self, e: str, k: int) -> str:
        """Apply g^k to e (k may be negative)."""
        step = self.g if k >= 0 else self.ginv
        for _ in range(abs(k)):
            e = step[e]
        return e

    @cached_property
    def vertices(self) -> tuple:
        """The g-orbits, each listed in g-order from its least element."""
        seen, out = set(), []
        for e in self.half_edges:
            if e in seen:
                continue
            orbit = [e]
            x = self.g[e]
            while x != e:
                orbit.append(x)
                x = self.g[x]
            seen.update(orbit)
            out.append(tuple(orbit))
        return tuple(out)

    @cached_property
    def vertex_of(self) -> Mapping:
        return MappingProxyType({e: i for i, v in enumerate(self.vertices) for e in v})

    def orbit_size(self, e: str) -> int:
        return len(self.vertices[self.vertex_of[e]])

    def f_degree(self, e: str) -> Fraction:
        return Fraction(self.degree[e], self.orbit_size(e))

    @cached_property
    def doubles(self) -> tuple:
        return tuple(e for e in self.half_edges if e in self.U and self.tau[e] == e)

    @cached_property
    def edges(self) -> tuple:
        return tuple(
            (e, self.tau[e]) for e in self.half_edges if e in self.U and e < self.tau[e]
        )

    @property
    def is_fms_bg(self) -> bool:
        return len(self.U) == len(self.half_edges) and not self.doubles

    @property
    def is_modified_bg(self) -> bool:
        return len(self.U) == len(self.half_edges) and all(
            self.f_degree(v[0]).denominator == 1 for v in self.vertices
        )

    def step(self, e: str, letter: str) -> str:
        if letter == G:
            return self.g[e]
        if letter == GINV:
            return self.ginv[e]
        if letter == TAU:
            if e not in self.U:
                raise InvalidWalk(f"tau applied at {e!r}, which is not in U")
            return self.tau[e]
        raise InvalidWalk(f"unknown letter {letter!r}")

    def renamed(self, mapping: Mapping, name: str | None = None) -> "BrauerGSet":
        """Relabel half-edges through an injective map."""
        m = dict(mapping)
        return make_bgset(
            g={m[e]: m[self.g[e]] for e in self.half_edges},
            tau={m[e]: m[t] for e, t in self.tau.items()},
            degree={m[e]: d for e, d in self.degree.items()},
            U=[m[e] for e in self.U],
            name=name if name is not None else self.name,
            check=False,
        )


def make_bgset(
    g: Mapping,
    tau: Mapping,
    degree: Mapping | int,
    U: Iterable | None = None,
    name: str | None = None,
    check: bool = True,
) -> BrauerGSet:
    """Build a BrauerGSet from plain mappings.

    ``U`` defaults to the domain of ``tau``; an integer ``degree`` is used for
    every half-edge.  With ``check`` the result is validated and
    InvalidBrauerGSet is raised on any problem.
    """
    half_edges = tuple(sorted(g))
    if isinstance(degree, int):
        degree = {e: degree for e in half_edges}
    u = frozenset(U) if U is not None else frozenset(tau)
    if check:
        report = validate(
            {"half_edges": list(half_edges), "g": dict(g), "U": sorted(u),
             "tau": dict(tau), "degree": dict(degree)}
        )
        if not report.valid:
            raise InvalidBrauerGSet(report)
    return BrauerGSet(
        half_edges=half_edges,
        g=_freeze(g),
        U=u,
        tau=_freeze(tau),
        degree=_freeze(degree),
        name=name,
    )


@dataclass(frozen=True)
class Issue:
    kind: str
    witness: str | None
    message: str

    def as_dict(self):
        return {"kind": self.kind, "witness": self.witness, "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    malformed: tuple
    violations: tuple
    is_fms_bg: bool = False
    is_modified_bg: bool = False

    @property
    def valid(self) -> bool:
        return not self.malformed and not self.violations

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = [f"{i.kind} at {i.witness!r}: {i.message}" for i in self.malformed + self.violations]
        return "; ".join(parts)

    def as_dict(self):
        return {
            "valid": self.valid,
            "fms_bg": self.is_fms_bg,
            "modified_bg": self.is_modified_bg,
            "malformed": [i.as_dict() for i in self.malformed],
            "violations": [i.as_dict() for i in self.violations],
        }


def _as_candidate(raw) -> dict:
    if isinstance(raw, BrauerGSet):
        return {
            "half_edges": list(raw.half_edges),
            "g": dict(raw.g),
            "U": sorted(raw.U),
            "tau": dict(raw.tau),
            "degree": dict(raw.degree),
        }
    return raw


def validate(raw) -> ValidationReport:
    """Check a candidate (BrauerGSet or document-like dict) against the axioms.

    Malformed input (unknown identifiers, missing or non-positive values) is
    reported separately from violations of the axioms (mf1) and (mf2).
    """
    cand = _as_candidate(raw)
    malformed = []
    half = cand.get("half_edges")
    if half is None:
        half = list(cand.get("g", {}))
    if len(set(half)) != len(half):
        dup = sorted(e for e in set(half) if half.count(e) > 1)[0]
        malformed.append(Issue("duplicate", dup, "half-edge listed twice"))
    hs = set(half)
    g = dict(cand.get("g", {}))
    tau = dict(cand.get("tau", {}))
    u = list(cand.get("U", tau.keys()))
    deg = dict(cand.get("degree", {}))

    for e in sorted(hs):
        if e not in g:
            malformed.append(Issue("missing", e, "no value for g"))
        if e not in deg:
            malformed.append(Issue("missing", e, "no degree"))
        elif not isinstance(deg[e], int) or isinstance(deg[e], bool) or deg[e] < 1:
            malformed.append(Issue("bad-degree", e, f"degree {deg[e]!r} is not a positive integer"))
    for name, mp in (("g", g), ("tau", tau), ("degree", deg)):
        for k in sorted(mp, key=str):
            if k not in hs:
                malformed.append(Issue("unknown", str(k), f"key of {name} is not a half-edge"))
            if name != "degree" and mp[k] not in hs:
                malformed.append(Issue("unknown", str(mp[k]), f"value of {name} is not a half-edge"))
    for e in sorted(u, key=str):
        if e not in hs:
            malformed.append(Issue("unknown", str(e), "member of U is not a half-edge"))
    if malformed:
        return ValidationReport(tuple(malformed), ())

    violations = []
    if sorted(g.values()) != sorted(hs):
        counts = {}
        for v in g.values():
            counts[v] = counts.get(v, 0) + 1
        bad = sorted(e for e in hs if counts.get(e, 0) != 1)[0]
        violations.append(Issue("g-not-bijective", bad, "g is not a permutation"))
        return ValidationReport((), tuple(violations))
    uset = set(u)
    for e in sorted(uset):
        if e not in tau:
            violations.append(Issue("tau-domain", e, "tau undefined on a member of U"))
        elif tau[e] not in uset:
            violations.append(Issue("tau-range", e, "tau(e) is not in U"))
        elif tau[tau[e]] != e:
            violations.append(Issue("tau-involution", e, "tau(tau(e)) != e"))
    for e in sorted(set(tau) - uset):
        violations.append(Issue("tau-domain", e, "tau defined outside U"))
    # (mf1): d constant on g-orbits
    for e in sorted(hs):
        if deg[g[e]] != deg[e]:
            violations.append(Issue("mf1", e, f"d(e)={deg[e]} but d(g e)={deg[g[e]]}"))
            break
    if violations:
        return ValidationReport((), tuple(violations))

    def gpow(x, k):
        for _ in range(k):
            x = g[x]
        return x

    sigma = {e: gpow(e, deg[e]) for e in hs}
    for e in sorted(hs):
        if (e in uset) != (sigma[e] in uset):
            violations.append(Issue("mf2", e, "sigma does not preserve U"))
            break
    for e in sorted(uset):
        if sigma[tau[e]] != tau[sigma[e]]:
            violations.append(Issue("mf2", e, "tau and sigma do not commute"))
            break
    if violations:
        return ValidationReport((), tuple(violations))

    E = BrauerGSet(tuple(sorted(hs)), _freeze(g), frozenset(uset), _freeze(tau), _freeze(deg))
    return ValidationReport((), (), E.is_fms_bg, E.is_modified_bg)


def to_document(E: BrauerGSet, comment: str | None = None) -> dict:
    doc = {
        "schema": "bgk/1",
        "half_edges": list(E.half_edges),
        "g": {e: E.g[e] for e in E.half_edges},
        "U": sorted(E.U),
        "tau": {e: E.tau[e] for e in sorted(E.tau)},
        "degree": {e: E.degree[e] for e in E.half_edges},
    }
    if E.name:
        doc["name"] = E.name
    if comment:
        doc["comment"] = comment
    return doc


def from_document(doc: Mapping) -> BrauerGSet:
    return make_bgset(
        g=doc["g"], tau=doc.get("tau", {}), degree=doc["degree"],
        U=doc.get("U"), name=doc.get("name"),
    )


# ---------------------------------------------------------------- statistics


@dataclass(frozen=True)
class Permutation:
    mapping: Mapping
    order: int

    def __call__(self, e):
        return self.mapping[e]

    def cycles(self) -> list:
        seen, out = set(), []
        for e in sorted(self.mapping):
            if e in seen:
                continue
            cyc = [e]
            x = self.mapping[e]
            while x != e:
                cyc.append(x)
                x = self.mapping[x]
            seen.update(cyc)
            out.append(tuple(cyc))
        return out


def permutation(mapping: Mapping) -> Permutation:
    p = Permutation(MappingProxyType(dict(mapping)), 1)
    order = math.lcm(*(len(c) for c in p.cycles())) if mapping else 1
    return Permutation(p.mapping, order)


def nakayama(E: BrauerGSet) -> Permutation:
    """The Nakayama automorphism sigma(e) = g^d(e) e and its order."""
    return permutation(E.sigma)


@dataclass(frozen=True)
class VertexInfo:
    half_edges: tuple
    size: int
    degree: int
    f_degree: Fraction


@dataclass(frozen=True)
class VertexStats:
    vertices: tuple
    edges: tuple
    double_half_edges: tuple

    @property
    def n(self):
        return len(self.vertices)

    @property
    def k(self):
        return len(self.edges)

    @property
    def l(self):
        return len(self.double_half_edges)


def vertex_stats(E: BrauerGSet) -> VertexStats:
    verts = tuple(
        VertexInfo(v, len(v), E.degree[v[0]], Fraction(E.degree[v[0]], len(v)))
        for v in E.vertices
    )
    return VertexStats(verts, E.edges, E.doubles)


def connected_components(E: BrauerGSet) -> list:
    """Partition of the half-edges under steps by g, g^-1 and tau."""
    parent = {e: e for e in E.half_edges}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    for e in E.half_edges:
        union(e, E.g[e])
        if e in E.U:
            union(e, E.tau[e])
    groups = {}
    for e in E.half_edges:
        groups.setdefault(find(e), []).append(e)
    return sorted((tuple(v) for v in groups.values()), key=lambda c: c[0])


def is_connected(E: BrauerGSet) -> bool:
    return len(connected_components(E)) <= 1


# --------------------------------------------------------------------- walks


@dataclass(frozen=True)
class Walk:
    """A walk given by its source and its letters in order of application.

    The textual form is ``e0 g tau g^-1 ...``: source first, then letters
    left to right in the order they are applied.
    """

    source: str
    letters: tuple = ()

    def __len__(self):
        return len(self.letters)

    def text(self) -> str:
        return " ".join((self.source,) + tuple(self.letters))

    def then(self, other: "Walk") -> "Walk":
        return Walk(self.source, self.letters + other.letters)


def parse_walk(text: str) -> Walk:
    parts = text.split()
    if not parts:
        raise InvalidWalk("empty walk text")
    for p in parts[1:]:
        if p not in LETTERS:
            raise InvalidWalk(f"unknown letter {p!r}")
    return Walk(parts[0], tuple(parts[1:]))


def walk_trace(E: BrauerGSet, w: Walk) -> list:
    """Half-edges visited by w, starting with its source."""
    if w.source not in E.g:
        raise InvalidWalk(f"unknown source {w.source!r}")
    out = [w.source]
    for letter in w.letters:
        out.append(E.step(out[-1], letter))
    return out


def walk_target(E: BrauerGSet, w: Walk) -> str:
    return walk_trace(E, w)[-1]


def inverse_walk(E: BrauerGSet, w: Walk) -> Walk:
    return Walk(walk_target(E, w), tuple(_INVERSE_LETTER[x] for x in reversed(w.letters)))


@dataclass(frozen=True)
class SpecialWalk:
    """g^{i_k} tau ... tau g^{i_1} tau g^{i_0} applied to ``source``."""

    source: str
    exponents: tuple = (0,)

    def to_walk(self) -> Walk:
        letters = []
        for j, i in enumerate(self.exponents):
            if j:
                letters.append(TAU)
            letters.extend([G] * i)
        return Walk(self.source, tuple(letters))


@dataclass(frozen=True)
class NormalForm:
    special: SpecialWalk
    power: int


class _NFState:
    """Stack machine computing normal forms letter by letter.

    frames[j] = (half-edge where the j-th g-run starts, exponent i_j);
    ``power`` counts the central factor g^{d(t)} pushed to the far end.
    """

    __slots__ = ("E", "frames", "power")

    def __init__(self, E: BrauerGSet, source: str):
        self.E = E
        self.frames = [(source, 0)]
        self.power = 0

    def copy(self):
        s = _NFState.__new__(_NFState)
        s.E, s.frames, s.power = self.E, list(self.frames), self.power
        return s

    def target(self) -> str:
        base, i = self.frames[-1]
        t = self.E.g_power(base, i)
        return self.E.g_power(t, self.power * self.E.degree[t])

    def special_end(self) -> str:
        base, i = self.frames[-1]
        return self.E.g_power(base, i)

    def apply(self, letter: str):
        E = self.E
        base, i = self.frames[-1]
        d = E.degree[base]
        if letter == G:
            i += 1
            if i == d:
                i = 0
                self.power += 1
            self.frames[-1] = (base, i)
        elif letter == GINV:
            i -= 1
            if i < 0:
                i = d - 1
                self.power -= 1
            self.frames[-1] = (base, i)
        elif letter == TAU:
            x = E.g_power(base, i)
            if x not in E.U:
                raise InvalidWalk(f"tau applied at {x!r}, which is not in U")
            if len(self.frames) > 1 and i == 0:
                self.frames.pop()
            else:
                self.frames.append((E.tau[x], 0))
        else:
            raise InvalidWalk(f"unknown letter {letter!r}")

    def key(self):
        return (tuple(self.frames), self.power)

    def normal_form(self, source: str) -> NormalForm:
        return NormalForm(SpecialWalk(source, tuple(i for _, i in self.frames)), self.power)


def walk_normal_form(E: BrauerGSet, w: Walk) -> NormalForm:
    """The unique (special walk v, integer n) with w homotopic to g^{n d(t)} v."""
    if w.source not in E.g:
        raise InvalidWalk(f"unknown source {w.source!r}")
    st = _NFState(E, w.source)
    for letter in w.letters:
        st.apply(letter)
    return st.normal_form(w.source)


def expand_normal_form(E: BrauerGSet, nf: NormalForm) -> Walk:
    """The walk v followed by g^{n d(t(v))}, i.e. a representative of nf."""
    v = nf.special.to_walk()
    t = walk_target(E, v)
    k = nf.power * E.degree[t]
    extra = (G,) * k if k >= 0 else (GINV,) * (-k)
    return Walk(v.source, v.letters + extra)


def walks_homotopic(E: BrauerGSet, w1: Walk, w2: Walk) -> bool:
    if w1.source != w2.source:
        raise BrauerError("walks must share their source")
    return walk_normal_form(E, w1) == walk_normal_form(E, w2)


def is_special(E: BrauerGSet, sw: SpecialWalk) -> bool:
    """Check the exponent bounds of a special walk along its actual path."""
    x = sw.source
    k = len(sw.exponents) - 1
    for j, i in enumerate(sw.exponents):
        d = E.degree[x]
        if j == 0 or j == k:
            if not 0 <= i < d:
                return False
        elif not 0 < i < d:
            return False
        x = E.g_power(x, i)
        if j < k:
            if x not in E.U:
                return False
            x = E.tau[x]
    return True


def disjoint_union(E1: BrauerGSet, E2: BrauerGSet, tags=("1", "2")) -> BrauerGSet:
    """Disjoint union with half-edges tagged ``e:1`` / ``e:2``."""
    def tag(E, t):
        return {e: f"{e}:{t}" for e in E.half_edges}

    m1, m2 = tag(E1, tags[0]), tag(E2, tags[1])
    g, tau, deg, u = {}, {}, {}, []
    for E, m in ((E1, m1), (E2, m2)):
        for e in E.half_edges:
            g[m[e]] = m[E.g[e]]
            deg[m[e]] = E.degree[e]
        for e, t in E.tau.items():
            tau[m[e]] = m[t]
        u.extend(m[e] for e in E.U)
    return make_bgset(g, tau, deg, U=u, check=False)


