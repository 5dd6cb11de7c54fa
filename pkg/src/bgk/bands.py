"""Bands of a Brauer G-set: enumeration, canonical classes and counting.

A band period is a cyclic sequence of pairs (e_i, k_i, l_i): rise from e_i by
g^{k_i} (0 < k_i < d(e_i)), apply tau to reach h_i, fall by g^{-l_i}
(0 < l_i < d(h_i)) and apply tau to reach e_{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .core import BrauerError, BrauerGSet, is_connected


@dataclass(frozen=True, order=True)
class BandWord:
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def steps(self, E: BrauerGSet) -> list:
        """Signed form [(e_0, +k_0), (h_0, -l_0), (e_1, +k_1), ...]."""
        out = []
        for e, k, l in self.pairs:
            h = E.tau[E.g_power(e, k)]
            out.extend([(e, k), (h, -l)])
        return out

    def text(self) -> str:
        return " ".join(f"{e}:+{k}:-{l}" for e, k, l in self.pairs)


@dataclass(frozen=True, order=True)
class BandClass:
    canonical: BandWord


def rise(E: BrauerGSet, e: str, k: int) -> str:
    """tau g^k e, or None when tau is undefined there."""
    x = E.g_power(e, k)
    return E.tau[x] if x in E.U else None


def fall(E: BrauerGSet, h: str, l: int) -> str:
    x = E.g_power(h, -l)
    return E.tau[x] if x in E.U else None


def band_problems(E: BrauerGSet, w: BandWord) -> list:
    out = []
    if not w.pairs:
        return ["empty period"]
    x = w.pairs[0][0]
    for i, (e, k, l) in enumerate(w.pairs):
        if e != x:
            out.append(f"pair {i} starts at {e!r}, walk is at {x!r}")
            return out
        if not 0 < k < E.degree[e]:
            out.append(f"pair {i}: rise {k} out of range at {e!r}")
        h = rise(E, e, k)
        if h is None:
            return out + [f"pair {i}: tau undefined after the rise"]
        if not 0 < l < E.degree[h]:
            out.append(f"pair {i}: fall {l} out of range at {h!r}")
        x = fall(E, h, l)
        if x is None:
            return out + [f"pair {i}: tau undefined after the fall"]
    if x != w.pairs[0][0]:
        out.append("period does not close up")
    return out


def _primitive(pairs: tuple) -> bool:
    n = len(pairs)
    return all(pairs != pairs[p:] + pairs[:p] for p in range(1, n) if n % p == 0)


def inverse_band(E: BrauerGSet, w: BandWord) -> BandWord:
    inv = []
    for e, k, l in reversed(w.pairs):
        h = rise(E, e, k)
        inv.append((E.g_power(h, -l), l, k))
    return BandWord(tuple(inv))


def _min_rotation(pairs: tuple) -> tuple:
    return min(pairs[i:] + pairs[:i] for i in range(len(pairs)))


def canonical_band(E: BrauerGSet, w: BandWord) -> BandClass:
    """Least rotation of the period or of its inverse."""
    problems = band_problems(E, w)
    if problems:
        raise BrauerError("invalid band: " + "; ".join(problems))
    a = _min_rotation(w.pairs)
    b = _min_rotation(inverse_band(E, w).pairs)
    return BandClass(BandWord(min(a, b)))


def transitions(E: BrauerGSet) -> dict:
    """(e, k) -> list of (l, e') with e' = tau g^{-l} tau g^k e."""
    out = {}
    for e in E.half_edges:
        for k in range(1, E.degree[e]):
            h = rise(E, e, k)
            if h is None:
                continue
            nxt = []
            for l in range(1, E.degree[h]):
                x = fall(E, h, l)
                if x is not None:
                    nxt.append((l, x))
            out[(e, k)] = nxt
    return out


def enumerate_bands(E: BrauerGSet, max_pairs: int) -> list:
    """Every band class whose period has at most ``max_pairs`` pairs."""
    if max_pairs < 1:
        return []
    trans = transitions(E)
    starts = {}
    for (e, k) in trans:
        starts.setdefault(e, []).append(k)
    found = set()

    def dfs(origin, x, acc):
        for k in starts.get(x, ()):
            for l, y in trans[(x, k)]:
                pairs = acc + ((x, k, l),)
                if y == origin and _primitive(pairs):
                    found.add(canonical_band(E, BandWord(pairs)))
                if len(pairs) < max_pairs:
                    dfs(origin, y, pairs)

    for e in sorted(starts):
        dfs(e, e, ())
    return sorted(found)


def band_graph(E: BrauerGSet) -> nx.DiGraph:
    """Rise states (e, k) linked through intermediate nodes (e, k, l)."""
    trans = transitions(E)
    G = nx.DiGraph()
    for (e, k), nxt in trans.items():
        G.add_node((e, k))
        for l, y in nxt:
            G.add_edge((e, k), (e, k, l))
            for k2 in range(1, E.degree[y]):
                if (y, k2) in trans:
                    G.add_edge((e, k, l), (y, k2))
    return G


def has_band(E: BrauerGSet) -> bool:
    G = band_graph(E)
    return any(len(c) > 1 for c in nx.strongly_connected_components(G))


def simple_cycle_bands(E: BrauerGSet) -> list:
    """Band classes of closed walks that never repeat a rise state."""
    found = set()
    for cyc in nx.simple_cycles(band_graph(E)):
        # the cycle alternates (e, k) and (e, k, l); the latter are the pairs
        pairs = tuple(v for v in cyc if len(v) == 3)
        found.add(canonical_band(E, BandWord(pairs)))
    return sorted(found)


@dataclass(frozen=True)
class BandCount:
    finite: bool
    n: int | None = None

    def as_dict(self):
        return {"finite": self.finite, "count": self.n}

    def __str__(self):
        return f"Finite({self.n})" if self.finite else "Infinite"


def band_bound(E: BrauerGSet) -> int:
    return sum(E.degree[e] - 1 for e in E.half_edges)


def band_count(E: BrauerGSet) -> BandCount:
    """Finite(0) for representation-finite, Finite(N) for domestic, else Infinite."""
    from .classify import DOMESTIC, REP_FINITE, classify_rep_type

    if not is_connected(E):
        raise BrauerError("input is not connected")
    rt = classify_rep_type(E)
    if rt.tag == REP_FINITE:
        return BandCount(True, 0)
    if rt.tag == DOMESTIC:
        return BandCount(True, len(simple_cycle_bands(E)))
    return BandCount(False)


def project_band(E: BrauerGSet, mapping, w: BandWord, target: BrauerGSet) -> BandClass:
    """Image of a band under a covering, reduced to its primitive period."""
    pairs = tuple((mapping[e], k, l) for e, k, l in w.pairs)
    n = len(pairs)
    for p in range(1, n + 1):
        if n % p == 0 and pairs == pairs[p:] + pairs[:p]:
            return canonical_band(target, BandWord(pairs[:p]))
    raise AssertionError("unreachable")
