"""Command-line front end.

Every subcommand reads one interchange document (a path or ``-`` for stdin)
and writes JSON to stdout, or DOT where ``--dot`` is supported.  Exit codes:
0 success, 1 domain error (including invalid documents), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import algebra, artheory, bands, classify, constructions, fixtures
from .core import (
    BrauerError, BrauerGSet, from_document, nakayama, to_document, validate, vertex_stats,
)

SCHEMA = "bgk/1"


class UsageError(Exception):
    pass


class DocumentError(BrauerError):
    pass


# ----------------------------------------------------------------- input


def _issue_path(issue) -> str:
    """JSON path into the document for a validation issue."""
    w = issue.witness
    msg = issue.message
    if issue.kind in ("missing", "bad-degree"):
        return f"$.degree.{w}" if "degree" in msg else f"$.g.{w}"
    if issue.kind == "unknown":
        for key in ("g", "tau", "degree"):
            if f"of {key} " in msg:
                return f"$.{key}"
        return "$.U"
    if issue.kind == "duplicate":
        return "$.half_edges"
    if issue.kind == "g-not-bijective":
        return "$.g"
    if issue.kind == "mf1":
        return f"$.degree.{w}"
    return f"$.tau.{w}"


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not JSON ({exc.msg} at line {exc.lineno})") from None


def _shape_check(doc) -> None:
    if not isinstance(doc, dict):
        raise DocumentError("$: a document must be a JSON object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise DocumentError(f"$.schema: unsupported schema {schema!r}")
    for key in ("g", "degree"):
        if not isinstance(doc.get(key), dict):
            raise DocumentError(f"$.{key}: missing or not an object")
    if not isinstance(doc.get("tau", {}), dict):
        raise DocumentError("$.tau: not an object")
    for key in ("half_edges", "U"):
        if key in doc and not isinstance(doc[key], list):
            raise DocumentError(f"$.{key}: not a list")


def load(path: str) -> BrauerGSet:
    doc = _read_json(path)
    _shape_check(doc)
    report = validate(doc)
    if not report.valid:
        issue = (report.malformed + report.violations)[0]
        raise DocumentError(f"{_issue_path(issue)}: {issue.kind}: {issue.message}")
    return from_document(doc)


# ---------------------------------------------------------------- output


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset, tuple)):
        return sorted(x) if isinstance(x, (set, frozenset)) else list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dump(obj) -> str:
    if isinstance(obj, dict) and "schema" not in obj:
        obj = {"schema": SCHEMA, **obj}
    return json.dumps(obj, sort_keys=True, indent=2, default=_json_default) + "\n"


def _no_dot(args):
    if getattr(args, "dot", False):
        raise UsageError(f"{args.command} has no DOT rendering")


# ------------------------------------------------------------- commands


def cmd_validate(args):
    _no_dot(args)
    doc = _read_json(args.input)
    _shape_check(doc)
    report = validate(doc)
    out = report.as_dict()
    for key in ("malformed", "violations"):
        issues = report.malformed if key == "malformed" else report.violations
        for item, issue in zip(out[key], issues):
            item["path"] = _issue_path(issue)
    return out, 0 if report.valid else 1


def cmd_stats(args):
    _no_dot(args)
    E = load(args.input)
    st = vertex_stats(E)
    sig = nakayama(E)
    return {
        "name": E.name,
        "half_edges": len(E.half_edges),
        "vertices": [
            {"half_edges": list(v.half_edges), "degree": v.degree, "f_degree": v.f_degree}
            for v in st.vertices
        ],
        "n": st.n, "k": st.k, "l": st.l,
        "edges": [list(e) for e in st.edges],
        "doubles": list(st.double_half_edges),
        "fms_bg": E.is_fms_bg,
        "modified_bg": E.is_modified_bg,
        "sigma": {"order": sig.order, "cycles": [list(c) for c in sig.cycles()]},
    }, 0


def _covering_doc(Q: BrauerGSet, cov) -> dict:
    doc = to_document(Q)
    doc["covering"] = {"sheets": cov.sheet_count,
                       "projection": {e: cov.mapping[e] for e in cov.source.half_edges}}
    return doc


def cmd_quotient(args):
    _no_dot(args)
    E = load(args.input)
    if args.generators:
        gens = _read_json(args.generators)
        if not isinstance(gens, list) or not all(isinstance(x, dict) for x in gens):
            raise DocumentError("$: generators must be a list of objects")
        Q, cov = constructions.quotient(E, gens)
    else:
        Q, cov = constructions.sigma_quotient(E)
    return _covering_doc(Q, cov), 0


def cmd_hat(args):
    _no_dot(args)
    H, cov = constructions.hat(load(args.input))
    return _covering_doc(H, cov), 0


def cmd_reduce(args):
    _no_dot(args)
    return to_document(constructions.reduced_form(load(args.input))), 0


def cmd_construct(args):
    _no_dot(args)
    if args.case is None or args.r is None:
        raise UsageError("construct needs --case and --r")
    if args.case == 3 and args.l is None:
        raise UsageError("case 3 needs --l")
    B = load(args.input)
    return to_document(constructions.construct_domestic(B, args.case, args.r, args.l)), 0


def cmd_iso(args):
    _no_dot(args)
    E1, E2 = load(args.input), load(args.other)
    w = constructions.are_isomorphic(E1, E2)
    return {"isomorphic": w is not None,
            "witness": None if w is None else {k: w[k] for k in sorted(w)}}, 0


def cmd_bands(args):
    _no_dot(args)
    E = load(args.input)
    out = {"count": bands.band_count(E).as_dict(), "bound": bands.band_bound(E)}
    if args.max_period is not None:
        found = bands.enumerate_bands(E, args.max_period)
        out["max_period"] = args.max_period
        out["bands"] = [c.canonical.text() for c in found]
    return out, 0


def cmd_classify(args):
    _no_dot(args)
    return classify.classify_rep_type(load(args.input)).as_dict(), 0


def cmd_pi1(args):
    _no_dot(args)
    E = load(args.input)
    if args.what == "presentation":
        # a modified BG is presented directly, an f_ms-BG through its reduced form
        of = "input"
        if not E.is_modified_bg:
            E, of = constructions.reduced_form(E), "reduced_form"
        return {**classify.pi1_presentation(E, base=args.base).as_dict(), "of": of}, 0
    if args.what == "abelian":
        inv = classify.reduced_pi1_abelianization(E)
        return {**inv.as_dict(), "text": inv.text()}, 0
    return {"class": classify.pi1_class(E)}, 0


def cmd_monodromy(args):
    _no_dot(args)
    E = load(args.input)
    B, cov = constructions.sigma_quotient(E)
    base = args.base or B.half_edges[0]
    act = classify.monodromy(cov, base)
    out = act.as_dict()
    out["orbit_sizes"] = {k: act.orbit_sizes(k) for k in sorted(act.permutations)}
    return out, 0


def cmd_algebra(args):
    E = load(args.input)
    pres = algebra.quiver_presentation(E, args.flavor)
    if args.dot:
        return pres.to_dot(), 0
    out = pres.as_dict()
    out["dimension"] = algebra.algebra_dimension(E)
    return out, 0


def cmd_strings(args):
    _no_dot(args)
    E = load(args.input)
    if args.max_len is None:
        lst = algebra.saturated_strings(E)
    else:
        lst = algebra.enumerate_strings(E, args.max_len)
    return {"count": len(lst.strings), "saturated": lst.saturated,
            "strings": [s.text() for s in lst.strings]}, 0


def cmd_dtr(args):
    _no_dot(args)
    E = load(args.input)
    perm = artheory.dtr_permutation(E)
    rows = []
    for M, e in zip(algebra.mouth_modules(E), E.half_edges):
        image = algebra.dtr_string(E, M)
        expected = algebra.mouth_module(E, perm[e])
        rows.append({
            "half_edge": e,
            "mouth": M.text(),
            "dtr": image.text(),
            "dtr_half_edge": perm[e],
            "agrees": algebra.string_key(E, image) == algebra.string_key(E, expected),
        })
    return {"modules": rows}, 0


def cmd_tubes(args):
    _no_dot(args)
    return artheory.exceptional_tubes(load(args.input)).as_dict(), 0


def cmd_ar_summary(args):
    summary = artheory.stable_ar_summary(load(args.input))
    if args.dot:
        return summary.to_dot(), 0
    return summary.as_dict(), 0


def cmd_ar_descriptor(args):
    _no_dot(args)
    desc = artheory.rf_ar_descriptor(load(args.input))
    out = desc.as_dict()
    out["text"] = desc.text()
    return out, 0


def cmd_ball(args):
    _no_dot(args)
    E = load(args.input)
    start = args.start or E.half_edges[0]
    ball = constructions.special_ball(E, start, args.radius)
    return {
        "source": ball.source,
        "radius": ball.radius,
        "size": len(ball.fragment.half_edges),
        "boundary": list(ball.boundary),
        "evaluation": dict(ball.evaluation),
        "fragment": to_document(ball.fragment),
    }, 0


def cmd_fixture(args):
    _no_dot(args)
    table = fixtures.all_fixtures()
    if args.name not in table:
        raise UsageError(f"unknown fixture {args.name!r}; choose from {', '.join(sorted(table))}")
    return to_document(table[args.name]), 0


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bgk", description="Brauer G-set toolkit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    def add(name, func, help_text, dot=False):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output (default)")
        fmt.add_argument("--dot", action="store_true",
                         help="DOT output" if dot else argparse.SUPPRESS)
        return sp

    def with_input(sp):
        sp.add_argument("input", help="interchange document, or - for stdin")
        return sp

    with_input(add("validate", cmd_validate, "check the axioms"))
    with_input(add("stats", cmd_stats, "vertex and edge statistics"))
    sp = with_input(add("quotient", cmd_quotient, "quotient by sigma or by given generators"))
    sp.add_argument("--generators", help="JSON list of half-edge permutations")
    with_input(add("hat", cmd_hat, "doubled Brauer G-set"))
    with_input(add("reduce", cmd_reduce, "reduced form"))
    sp = with_input(add("construct", cmd_construct, "domestic family over a base graph"))
    sp.add_argument("--case", type=int, choices=(1, 2, 3))
    sp.add_argument("--r", type=int)
    sp.add_argument("--l", type=int)
    sp = with_input(add("iso", cmd_iso, "isomorphism test with witness"))
    sp.add_argument("other", help="second document")
    sp = with_input(add("bands", cmd_bands, "band count and enumeration"))
    sp.add_argument("--max-period", type=int, help="list band classes up to this many pairs")
    with_input(add("classify", cmd_classify, "representation type"))
    sp = add("pi1", cmd_pi1, "fundamental-group invariants")
    sp.add_argument("what", choices=("presentation", "abelian", "class"))
    with_input(sp)
    sp.add_argument("--base", help="base half-edge")
    sp = with_input(add("monodromy", cmd_monodromy, "monodromy of E over E/<sigma>"))
    sp.add_argument("--base", help="base half-edge of the quotient")
    sp = with_input(add("algebra", cmd_algebra, "quiver with relations", dot=True))
    sp.add_argument("--flavor", choices=algebra.FLAVORS, default="reduced")
    sp = with_input(add("strings", cmd_strings, "strings of A/soc"))
    sp.add_argument("--max-len", type=int, help="length bound (default: until saturated)")
    with_input(add("dtr", cmd_dtr, "AR-translates of the mouth modules"))
    with_input(add("tubes", cmd_tubes, "exceptional tube ranks"))
    with_input(add("ar-summary", cmd_ar_summary, "stable AR census (domestic)", dot=True))
    with_input(add("ar-descriptor", cmd_ar_descriptor, "ZA_n description (rep-finite)"))
    sp = with_input(add("ball", cmd_ball, "special-walk ball around a half-edge"))
    sp.add_argument("--start", help="centre half-edge (default: least)")
    sp.add_argument("--radius", type=int, default=2)
    sp = add("fixture", cmd_fixture, "print a shipped example document")
    sp.add_argument("name")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result, code = args.func(args)
    except UsageError as exc:
        print(f"bgk: usage error: {exc}", file=sys.stderr)
        return 2
    except BrauerError as exc:
        print(f"bgk: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    sys.stdout.write(result if isinstance(result, str) else dump(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
