"""Quivers with relations of the algebra A_E, its string quotient A_E/soc,
strings, mouth modules and the AR-translate of string modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from .core import BrauerError, BrauerGSet

FLAVORS = ("full", "reduced", "string", "riedtmann")


# ------------------------------------------------------------ presentations


@dataclass(frozen=True)
class Relation:
    """A zero path or a difference of two paths.

    Paths are tuples of arrow names in travel order (first arrow first);
    ``text`` writes them right to left as products.
    """

    kind: str
    paths: tuple
    rule: str = ""

    def text(self) -> str:
        words = ["".join(reversed(p)) for p in self.paths]
        return " - ".join(words)

    def key(self):
        return (self.kind, tuple(sorted(self.paths)) if self.kind == "commutativity" else self.paths)


@dataclass(frozen=True)
class AlgebraPresentation:
    flavor: str
    vertices: tuple
    arrows: tuple  # (name, source, target)
    relations: tuple
    warning: str | None = None
    labels: dict = field(default_factory=dict, compare=False)

    def arrow_ends(self) -> dict:
        return {a: (s, t) for a, s, t in self.arrows}

    def relation_keys(self) -> set:
        return {r.key() for r in self.relations}

    def as_dict(self) -> dict:
        out = {
            "flavor": self.flavor,
            "vertices": list(self.vertices),
            "arrows": [{"name": a, "source": s, "target": t} for a, s, t in self.arrows],
            "relations": [
                {"kind": r.kind, "rule": r.rule, "paths": [list(p) for p in r.paths],
                 "text": r.text()}
                for r in self.relations
            ],
        }
        if self.warning:
            out["warning"] = self.warning
        return out

    def to_dot(self) -> str:
        lines = ["digraph quiver {", "  node [shape=box];"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a, s, t in self.arrows:
            lines.append(f'  "{s}" -> "{t}" [label="{a}"];')
        lines.append("  /* relations")
        for r in self.relations:
            lines.append(f"     {r.rule}: {r.text()}")
        lines.append("  */")
        lines.append("}")
        return "\n".join(lines) + "\n"


def vertex_name(E: BrauerGSet, e: str) -> str:
    return f"P({min(e, E.tau[e])})"


def arrow_name(e: str) -> str:
    return f"L({e})"


def g_path(E: BrauerGSet, e: str, length: int) -> tuple:
    """Arrow names of L(g^{length-1} e) ... L(e), in travel order."""
    return tuple(arrow_name(E.g_power(e, j)) for j in range(length))


def _require_u(E: BrauerGSet):
    if len(E.U) != len(E.half_edges):
        raise BrauerError("the algebra needs U = E")


def quiver_presentation(E: BrauerGSet, flavor: str = "reduced") -> AlgebraPresentation:
    """Quiver and relations of A_E (full / reduced), A_E/soc (string) or the
    Riedtmann presentation of a representation-finite E."""
    if flavor not in FLAVORS:
        raise BrauerError(f"unknown flavor {flavor!r}")
    if flavor == "riedtmann":
        from .artheory import rf_ar_descriptor, riedtmann_presentation

        return riedtmann_presentation(rf_ar_descriptor(E))
    _require_u(E)
    vertices = tuple(sorted({vertex_name(E, e) for e in E.half_edges}))
    full = flavor == "full"

    def has_arrow(e):
        return full or E.degree[e] > 1

    arrows = tuple(
        (arrow_name(e), vertex_name(E, e), vertex_name(E, E.g[e]))
        for e in E.half_edges if has_arrow(e)
    )
    rels = []
    warning = None
    degenerate = [e for e in E.half_edges if E.tau[e] != e and e < E.tau[e]
                  and E.degree[e] == 1 and E.degree[E.tau[e]] == 1]
    if degenerate and not full:
        warning = (f"edge {{{degenerate[0]}, {E.tau[degenerate[0]]}}} has both degrees 1; "
                   "the reduced quiver does not present A_E")
    # commutativity of the two maximal paths at each edge
    if flavor != "string":
        for e in E.half_edges:
            h = E.tau[e]
            if h <= e:
                continue
            if not full and (E.degree[e] == 1 or E.degree[h] == 1):
                continue
            rels.append(Relation("commutativity", (g_path(E, e, E.degree[e]),
                                                    g_path(E, h, E.degree[h])),
                                 "fR1" if full else "fR1'"))
    # maximal paths vanish in the string quotient
    if flavor == "string":
        for e in E.half_edges:
            if E.degree[e] > 1:
                rels.append(Relation("zero", (g_path(E, e, E.degree[e]),), "a"))
    # L(e2) L(e1) = 0 when e2 = tau g e1 is not g e1
    for e1 in E.half_edges:
        x = E.g[e1]
        e2 = E.tau[x]
        if e2 == x or not (has_arrow(e1) and has_arrow(e2)):
            continue
        rule = {"full": "fR2", "reduced": "fR2'", "string": "b"}[flavor]
        rels.append(Relation("zero", ((arrow_name(e1), arrow_name(e2)),), rule))
    # overlong paths; in the reduced flavor only where not already implied
    if flavor != "string":
        for e in E.half_edges:
            d = E.degree[e]
            if full or (d > 1 and E.degree[E.tau[e]] == 1):
                rels.append(Relation("zero", (g_path(E, e, d + 1),), "fR3" if full else "fR3'"))
    return AlgebraPresentation(flavor, vertices, arrows, tuple(rels), warning)


def presentation_isomorphism(P1: AlgebraPresentation, P2: AlgebraPresentation,
                             arrow_hint: dict | None = None) -> dict | None:
    """An arrow bijection P1 -> P2 induced by a vertex bijection that carries
    the relation set of P1 onto that of P2, or None."""
    if len(P1.vertices) != len(P2.vertices) or len(P1.arrows) != len(P2.arrows):
        return None
    if len(P1.relations) != len(P2.relations):
        return None
    ends1, ends2 = P1.arrow_ends(), P2.arrow_ends()
    target_keys = P2.relation_keys()

    def check(amap):
        keys = set()
        for r in P1.relations:
            paths = tuple(tuple(amap[a] for a in p) for p in r.paths)
            keys.add(Relation(r.kind, paths).key())
        return keys == target_keys

    if arrow_hint is not None:
        return dict(arrow_hint) if check(arrow_hint) else None

    arrows1 = [a for a, _, _ in P1.arrows]

    def search(i, vmap, amap, used):
        if i == len(arrows1):
            return dict(amap) if check(amap) else None
        a = arrows1[i]
        s, t = ends1[a]
        for b, (s2, t2) in ends2.items():
            if b in used:
                continue
            if vmap.get(s, s2) != s2 or vmap.get(t, t2) != t2:
                continue
            inv = {v: k for k, v in vmap.items()}
            if inv.get(s2, s) != s or inv.get(t2, t) != t:
                continue
            nv = dict(vmap)
            nv[s], nv[t] = s2, t2
            amap[a] = b
            res = search(i + 1, nv, amap, used | {b})
            if res is not None:
                return res
            del amap[a]
        return None

    return search(0, {}, {}, frozenset())


def presentation_from_brauer_map(P1: AlgebraPresentation, P2: AlgebraPresentation,
                                 f: dict) -> dict | None:
    """Check the arrow bijection L(e) -> L(f(e)) induced by a map of half-edges."""
    amap = {}
    for a, _, _ in P1.arrows:
        e = a[2:-1]
        amap[a] = arrow_name(f[e])
    return presentation_isomorphism(P1, P2, arrow_hint=amap)


def algebra_dimension(E: BrauerGSet) -> int:
    """Dimension of A_E from its path basis.

    At an edge {e, h} the basis consists of the idempotent and the paths
    along g from e and from h, whose two maximal members coincide.
    """
    _require_u(E)
    total = 0
    for e in E.half_edges:
        h = E.tau[e]
        if h == e:
            total += 1 + E.degree[e]
        elif e < h:
            total += 1 + E.degree[e] + E.degree[h] - 1
    return total


def greek_relabel(pres: AlgebraPresentation):
    """Greek-letter arrow names alpha_1.. in arrow order (for display)."""
    return {a: f"alpha_{i}" for i, (a, _, _) in enumerate(pres.arrows, start=1)}


# ------------------------------------------------------------------ strings


@dataclass(frozen=True, order=True)
class StringWord:
    """A string of A_E/soc as a walk in E.

    ``start`` is the half-edge where the walk begins; each run r applies
    g^r (direct letters for r > 0, inverse letters for r < 0), runs
    alternate in sign and consecutive runs are separated by tau.  A trivial
    string has no runs and an orientation ``sign``: its right-hand
    extensions are runs of sign ``sign`` from ``start`` and of sign
    ``-sign`` from tau(start).
    """

    start: str
    runs: tuple = ()
    sign: int = 1

    @property
    def trivial(self) -> bool:
        return not self.runs

    def length(self) -> int:
        return sum(abs(r) for r in self.runs)

    def text(self) -> str:
        if self.trivial:
            return f"1[{self.start}]"
        return self.start + " " + " ".join(f"{r:+d}" for r in self.runs)


def string_end(E: BrauerGSet, s: StringWord) -> str:
    x = s.start
    for i, r in enumerate(s.runs):
        if i:
            x = E.tau[x]
        x = E.g_power(x, r)
    return x


def string_problems(E: BrauerGSet, s: StringWord) -> list:
    out = []
    if s.start not in E.g:
        return [f"unknown half-edge {s.start!r}"]
    if s.trivial:
        return [] if s.sign in (1, -1) else ["trivial string needs sign +1 or -1"]
    x = s.start
    for i, r in enumerate(s.runs):
        if i:
            if (r > 0) == (s.runs[i - 1] > 0):
                out.append(f"runs {i - 1} and {i} have the same sign")
            x = E.tau[x]
        if r == 0 or abs(r) > E.degree[x] - 1:
            out.append(f"run {i} of length {r} out of range at {x!r}")
        x = E.g_power(x, r)
    return out


def reverse_string(E: BrauerGSet, s: StringWord) -> StringWord:
    if s.trivial:
        return StringWord(s.start, (), -s.sign)
    return StringWord(string_end(E, s), tuple(-r for r in reversed(s.runs)))


def string_key(E: BrauerGSet, s: StringWord):
    """Module-level identity: trivial strings by vertex, others up to reversal."""
    if s.trivial:
        return ("vertex", vertex_name(E, s.start))
    r = reverse_string(E, s)
    return ("string", min((s.start, s.runs), (r.start, r.runs)))


def canonical_string(E: BrauerGSet, s: StringWord) -> StringWord:
    if s.trivial:
        return StringWord(min(s.start, E.tau[s.start]), (), 1)
    r = reverse_string(E, s)
    return min(s, r, key=lambda w: (w.start, w.runs))


def string_letters(E: BrauerGSet, s: StringWord) -> tuple:
    """Quiver letters (arrow, +1 or -1) in travel order."""
    out = []
    x = s.start
    for i, r in enumerate(s.runs):
        if i:
            x = E.tau[x]
        if r > 0:
            for _ in range(r):
                out.append((arrow_name(x), 1))
                x = E.g[x]
        else:
            for _ in range(-r):
                x = E.ginv[x]
                out.append((arrow_name(x), -1))
    return tuple(out)


@dataclass(frozen=True)
class StringList:
    strings: tuple
    saturated: bool


def _normalize(E: BrauerGSet, start: str, runs, sign: int = 1) -> StringWord:
    """Merge runs around zero-length runs (a zero run cancels its two taus)."""
    runs = list(runs)
    out = []
    x = start
    i = 0
    while i < len(runs):
        r = runs[i]
        if r == 0:
            if not out:
                # leading zero run: the walk really starts after the tau
                if i + 1 < len(runs):
                    x = E.tau[x]
                    start = x
            elif i + 1 < len(runs):
                # tau, nothing, tau: continue the previous run
                out[-1] += runs[i + 1]
                i += 1
            i += 1
            continue
        out.append(r)
        i += 1
    return StringWord(start, tuple(out), sign)


def enumerate_strings(E: BrauerGSet, max_len: int) -> StringList:
    """All strings of A_E/soc with at most ``max_len`` letters, one per module."""
    _require_u(E)
    found = {}
    truncated = False
    for e in E.half_edges:
        t = StringWord(e, (), 1)
        found.setdefault(string_key(E, t), canonical_string(E, t))

    def dfs(start, runs, x):
        nonlocal truncated
        used = sum(abs(r) for r in runs)
        d = E.degree[x]
        sign = -1 if runs and runs[-1] > 0 else 1
        signs = (1, -1) if not runs else (sign,)
        for sg in signs:
            for k in range(1, d):
                if used + k > max_len:
                    truncated = True
                    break
                w = StringWord(start, runs + (sg * k,))
                key = string_key(E, w)
                if key not in found:
                    found[key] = canonical_string(E, w)
                y = E.g_power(x, sg * k)
                dfs(start, w.runs, E.tau[y])

    for e in E.half_edges:
        dfs(e, (), e)
    strings = tuple(sorted(found.values(), key=lambda w: (len(w.runs) > 0, w.start, w.runs)))
    return StringList(strings, not truncated)


def saturated_strings(E: BrauerGSet, limit: int = 200) -> StringList:
    """Enumerate with growing length until no string is cut off."""
    n = 1
    while n <= limit:
        res = enumerate_strings(E, n)
        if res.saturated:
            return res
        n *= 2
    raise BrauerError("string enumeration did not saturate; the algebra looks representation-infinite")


def mouth_module(E: BrauerGSet, e: str) -> StringWord:
    d = E.degree[e]
    if d == 1:
        return StringWord(e, (), 1)
    return StringWord(e, (d - 1,))


def mouth_modules(E: BrauerGSet) -> list:
    from .classify import REP_FINITE, classify_rep_type

    if classify_rep_type(E).tag == REP_FINITE:
        raise BrauerError("mouth modules are defined for representation-infinite algebras")
    return [mouth_module(E, e) for e in E.half_edges]


# --------------------------------------------------------- AR-translation


def _run_bound(E: BrauerGSet, x: str) -> int:
    return E.degree[x] - 1


def _add_direct_right(E: BrauerGSet, s: StringWord):
    """Append one direct letter at the right end, or None."""
    if s.trivial:
        x = s.start if s.sign == 1 else E.tau[s.start]
        if _run_bound(E, x) < 1:
            return None
        return StringWord(x, (1,))
    z = string_end(E, s)
    if s.runs[-1] > 0:
        if s.runs[-1] + 1 > _run_bound(E, z):
            return None
        return StringWord(s.start, s.runs[:-1] + (s.runs[-1] + 1,))
    if _run_bound(E, E.tau[z]) < 1:
        return None
    return StringWord(s.start, s.runs + (1,))


def add_cohook_right(E: BrauerGSet, s: StringWord):
    t = _add_direct_right(E, s)
    if t is None:
        return None
    z = string_end(E, t)
    k = _run_bound(E, E.tau[z])
    if k >= 1:
        t = StringWord(t.start, t.runs + (-k,))
    return t


def delete_hook_right(E: BrauerGSet, s: StringWord):
    """Remove the trailing direct run and one inverse letter, or None."""
    if s.trivial:
        return None
    runs = list(s.runs)
    if runs[-1] > 0:
        runs.pop()
    if not runs:
        return None
    first_sign = 1 if s.runs[0] > 0 else -1
    runs[-1] += 1  # one inverse letter less
    if runs[-1] == 0:
        runs.pop()
    if not runs:
        return StringWord(s.start, (), first_sign)
    return StringWord(s.start, tuple(runs))


def _left(op, E, s):
    t = op(E, reverse_string(E, s))
    return None if t is None else reverse_string(E, t)


def projective_top_string(E: BrauerGSet, x: str) -> StringWord:
    """P/soc P for the projective at P(x)."""
    h = E.tau[x]
    a, b = E.degree[x] - 1, E.degree[h] - 1
    return _normalize(E, E.g_power(x, a), (-a, b))


def radical_string(E: BrauerGSet, x: str) -> StringWord:
    """rad P for the projective at P(x)."""
    h = E.tau[x]
    a, b = E.degree[x] - 1, E.degree[h] - 1
    return _normalize(E, E.g[x], (a, -b))


def dtr_string(E: BrauerGSet, s: StringWord) -> StringWord:
    """The AR-translate DTr of a non-projective string module."""
    problems = string_problems(E, s)
    if problems:
        raise BrauerError("invalid string: " + "; ".join(problems))
    key = string_key(E, s)
    for x in E.half_edges:
        if string_key(E, projective_top_string(E, x)) == key:
            return canonical_string(E, radical_string(E, x))
    right = add_cohook_right(E, s)
    left_ok = _left(add_cohook_right, E, s) is not None
    t = s
    if right is not None:
        t = right
    if left_ok:
        t = _left(add_cohook_right, E, t)
    if right is None:
        t = delete_hook_right(E, t)
        if t is None:
            raise BrauerError(f"no hook to delete on the right of {s.text()}")
    if not left_ok:
        t = _left(delete_hook_right, E, t)
        if t is None:
            raise BrauerError(f"no hook to delete on the left of {s.text()}")
    return canonical_string(E, t)


# ------------------------------------------------------ string-algebra bands


def _zero_paths(pres: AlgebraPresentation) -> list:
    return [r.paths[0] for r in pres.relations if r.kind == "zero"]


class _WordChecker:
    """String condition for letter words (arrow, +1 or -1) of a monomial algebra."""

    def __init__(self, pres: AlgebraPresentation):
        self.ends = pres.arrow_ends()
        zero = _zero_paths(pres)
        self.zero = set(zero)
        self.lengths = sorted({len(z) for z in zero})
        self.longest = max(self.lengths, default=1)

    def joinable(self, x, y) -> bool:
        (a, sa), (b, sb) = x, y
        end_a = self.ends[a][1] if sa > 0 else self.ends[a][0]
        start_b = self.ends[b][0] if sb > 0 else self.ends[b][1]
        return end_a == start_b and not (a == b and sa != sb)

    def tail_ok(self, word) -> bool:
        """No zero relation ends at the last letter (word already valid before it)."""
        if len(word) >= 2 and not self.joinable(word[-2], word[-1]):
            return False
        sign = word[-1][1]
        for k in self.lengths:
            if k > len(word):
                break
            seg = word[-k:]
            if any(sg != sign for _, sg in seg):
                break
            names = tuple(a for a, _ in seg)
            if (names if sign > 0 else names[::-1]) in self.zero:
                return False
        return True

    def word_ok(self, word) -> bool:
        return all(self.tail_ok(word[:i]) for i in range(1, len(word) + 1))


def _word_ok(word, pres: AlgebraPresentation) -> bool:
    return _WordChecker(pres).word_ok(tuple(word))


def _cyclic_canonical(word: tuple) -> tuple:
    inv = tuple((a, -s) for a, s in reversed(word))
    rots = [w[i:] + w[:i] for w in (word, inv) for i in range(len(w))]
    return min(rots)


def _primitive_word(word: tuple) -> bool:
    n = len(word)
    return all(word != word[p:] + word[:p] for p in range(1, n) if n % p == 0)


def string_algebra_bands(pres: AlgebraPresentation, max_pairs: int) -> list:
    """Bands of a monomial string algebra with at most ``max_pairs`` direct runs,
    found by brute force over cyclic letter words."""
    chk = _WordChecker(pres)
    max_letters = 2 * max_pairs * max(chk.longest - 1, 1)
    letters = [(a, 1) for a in sorted(chk.ends)] + [(a, -1) for a in sorted(chk.ends)]
    nxt = {x: [y for y in letters if chk.joinable(x, y)] for x in letters}
    found = set()

    def closes(word):
        reps = -(-(chk.longest + len(word)) // len(word)) + 1
        return chk.word_ok(word * reps) and _primitive_word(word)

    def extend(word, runs):
        if len(word) >= 2 and word[-1][1] < 0 and chk.joinable(word[-1], word[0]):
            if closes(word):
                found.add(_cyclic_canonical(word))
        if len(word) >= max_letters:
            return
        for y in nxt[word[-1]]:
            new_runs = runs + (1 if y[1] > 0 and word[-1][1] < 0 else 0)
            if new_runs > max_pairs:
                continue
            w = word + (y,)
            if chk.tail_ok(w):
                extend(w, new_runs)

    for x in letters:
        if x[1] > 0:
            extend((x,), 1)
    return sorted(found)


def band_to_word(E: BrauerGSet, pairs) -> tuple:
    """The cyclic quiver word of a band of E (rises direct, falls inverse)."""
    word = []
    for e, k, l in pairs:
        word.extend(string_letters(E, StringWord(e, (k,))))
        h = E.tau[E.g_power(e, k)]
        word.extend(string_letters(E, StringWord(h, (-l,))))
    return _cyclic_canonical(tuple(word))


__all__ = [
    "FLAVORS", "Relation", "AlgebraPresentation", "StringWord", "StringList",
    "quiver_presentation", "presentation_isomorphism", "presentation_from_brauer_map",
    "algebra_dimension", "enumerate_strings", "saturated_strings", "mouth_module",
    "mouth_modules", "dtr_string", "string_key", "canonical_string", "reverse_string",
    "string_end", "string_letters", "string_problems", "string_algebra_bands",
    "band_to_word", "projective_top_string", "radical_string",
]
