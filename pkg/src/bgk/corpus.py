"""Exhaustive and random generators of connected f_ms-BGs, deduplicated by a
canonical form."""

from __future__ import annotations

import random
from itertools import product

from .core import BrauerGSet, is_connected, make_bgset, validate


def canonical_code(E: BrauerGSet) -> tuple:
    """Isomorphism invariant of a connected Brauer G-set with U = E.

    Relabel half-edges in breadth-first order from each start (following g
    then tau) and keep the least resulting table.
    """
    best = None
    for start in E.half_edges:
        lab = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in (E.g[x], E.tau.get(x, x)):
                if y not in lab:
                    lab[y] = len(order)
                    order.append(y)
        if len(order) != len(E.half_edges):
            raise ValueError("canonical_code needs a connected input")
        code = tuple((lab[E.g[x]], lab[E.tau.get(x, x)], E.degree[x]) for x in order)
        if best is None or code < best:
            best = code
    return best


def from_code(code: tuple, name: str | None = None) -> BrauerGSet:
    ids = [f"h{i}" for i in range(len(code))]
    g = {ids[i]: ids[c[0]] for i, c in enumerate(code)}
    tau = {ids[i]: ids[c[1]] for i, c in enumerate(code)}
    deg = {ids[i]: c[2] for i, c in enumerate(code)}
    return make_bgset(g, tau, deg, name=name, check=False)


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _matchings(items: list):
    if not items:
        yield ()
        return
    a = items[0]
    for i in range(1, len(items)):
        b = items[i]
        rest = items[1:i] + items[i + 1:]
        for m in _matchings(rest):
            yield ((a, b),) + m


def _connected(n: int, g: list, tau: list) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (g[x], tau[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _code(n: int, g: list, tau: list, deg: list) -> tuple:
    best = None
    for start in range(n):
        lab = [-1] * n
        lab[start] = 0
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in (g[x], tau[x]):
                if lab[y] < 0:
                    lab[y] = len(order)
                    order.append(y)
        code = tuple((lab[g[x]], lab[tau[x]], deg[x]) for x in order)
        if best is None or code < best:
            best = code
    return best


def _sigma_commutes(n: int, g: list, tau: list, deg: list) -> bool:
    def gp(x, k):
        for _ in range(k):
            x = g[x]
        return x

    sigma = [gp(x, deg[x]) for x in range(n)]
    return all(sigma[tau[x]] == tau[sigma[x]] for x in range(n))


def small_fms_codes(max_half_edges: int = 8, max_degree: int = 6, min_half_edges: int = 2):
    """Canonical codes of all connected f_ms-BGs with at most ``max_half_edges``
    half-edges and every degree at most ``max_degree``."""
    seen = set()
    for n in range(max(2, min_half_edges), max_half_edges + 1, 2):
        shapes = set()
        for part in _partitions(n):
            g, orbits, x = [0] * n, [], 0
            for size in part:
                cyc = list(range(x, x + size))
                for i, y in enumerate(cyc):
                    g[y] = cyc[(i + 1) % size]
                orbits.append(cyc)
                x += size
            if len(orbits) > n // 2 + 1:
                continue
            for m in _matchings(list(range(n))):
                tau = [0] * n
                for a, b in m:
                    tau[a], tau[b] = b, a
                if not _connected(n, g, tau):
                    continue
                key = _code(n, g, tau, [1] * n)
                if key in shapes:
                    continue
                shapes.add(key)
                for degs in product(range(1, max_degree + 1), repeat=len(orbits)):
                    deg = [0] * n
                    for cyc, d in zip(orbits, degs):
                        for y in cyc:
                            deg[y] = d
                    if not _sigma_commutes(n, g, tau, deg):
                        continue
                    code = _code(n, g, tau, deg)
                    if code not in seen:
                        seen.add(code)
                        yield code


def small_fms_bgs(max_half_edges: int = 8, max_degree: int = 6):
    for i, code in enumerate(small_fms_codes(max_half_edges, max_degree)):
        yield from_code(code, name=f"small-{i}")


def random_fms_bg(rng: random.Random, n_half_edges: int, max_degree: int = 6,
                  max_vertices: int | None = None, tries: int = 1000) -> BrauerGSet:
    """A random connected f_ms-BG; degrees are drawn per vertex until sigma
    commutes with tau."""
    n = n_half_edges
    if n % 2:
        raise ValueError("an f_ms-BG has an even number of half-edges")
    for _ in range(tries):
        perm = list(range(n))
        rng.shuffle(perm)
        k = rng.randint(1, max_vertices or n // 2 + 1)
        cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
        g = [0] * n
        orbits = []
        bounds = [0] + cuts + [n]
        for a, b in zip(bounds, bounds[1:]):
            cyc = perm[a:b]
            orbits.append(cyc)
            for i, y in enumerate(cyc):
                g[y] = cyc[(i + 1) % len(cyc)]
        pts = list(range(n))
        rng.shuffle(pts)
        tau = [0] * n
        for a, b in zip(pts[::2], pts[1::2]):
            tau[a], tau[b] = b, a
        if not _connected(n, g, tau):
            continue
        for _ in range(50):
            deg = [0] * n
            for cyc in orbits:
                if rng.random() < 0.6:
                    d = len(cyc) * rng.randint(1, max(1, max_degree // len(cyc)))
                else:
                    d = rng.randint(1, max_degree)
                for y in cyc:
                    deg[y] = d
            if _sigma_commutes(n, g, tau, deg):
                ids = [f"h{i}" for i in range(n)]
                E = make_bgset({ids[i]: ids[g[i]] for i in range(n)},
                               {ids[i]: ids[tau[i]] for i in range(n)},
                               {ids[i]: deg[i] for i in range(n)},
                               name=f"random-{n}")
                if is_connected(E) and validate(E).valid:
                    return E
    raise RuntimeError("no valid random instance found")


def random_corpus(count: int, seed: int = 0, sizes=(10, 12, 14, 16), max_degree: int = 6):
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        E = random_fms_bg(rng, rng.choice(sizes), max_degree)
        code = canonical_code(E)
        if code in seen:
            continue
        seen.add(code)
        out.append(E.renamed({e: e for e in E.half_edges}, name=f"random-{len(out)}"))
    return out


__all__ = ["canonical_code", "from_code", "small_fms_codes", "small_fms_bgs",
           "random_fms_bg", "random_corpus"]
