"""Command-line front end.

    packedwords op --kind middle --q q 2,1,1 1,2
    packedwords coproduct 3,4,2,5,1,1,3,5
    packedwords dims --max-n 4 --format json
    packedwords check --suite tridendriform --max-total 6

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import freeness, hopf, suites
from .algebra import LinearCombination, lc, rank
from .words import (backslash, concat, dot, format_word, is_irreducible,
                    parse_word, surjections)

KINDS = ("concat", "shuffle", "left", "right", "middle", "weak-right", "dot", "backslash")
SUITE_NAMES = ("dendriform", "tridendriform", "bialgebra", "infinitesimal", "brace",
               "gv", "order", "shuffle-sets", "freeness")


class UsageError(Exception):
    pass


def parse_q(text: str | None):
    """``None`` or ``"q"`` mean symbolic; otherwise a rational literal."""
    if text is None or text.strip() == "q":
        return None
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q expects a rational number or 'q', got {text!r}") from None
    return int(value) if value.denominator == 1 else value


def _word(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output -----------------------------------------------------------------

def _number(v) -> int | str:
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else str(v)


def _specialized(result: LinearCombination, q) -> tuple[str, dict]:
    """Text and JSON for ``result`` evaluated at a non-integer rational."""
    values = result.evaluate(q)
    keys = [k for k in result.keys() if k in values]
    pieces = []
    for k in keys:
        v = Fraction(values[k])
        body = format_word(k) if k and isinstance(k[0], int) else "⊗".join(map(format_word, k))
        mag = "" if abs(v) == 1 else f"{abs(v)}"
        pieces.append(("-" if v < 0 else "+", f"{mag}{body}"))
    if not pieces:
        text = "0"
    else:
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        text += "".join(f" {s} {b}" for s, b in pieces[1:])
    data = {"degree": result.degree,
            "terms": [{"coeff": [_number(values[k])], "word": list(k)} for k in keys]}
    return text, data


def _emit(result, fmt: str, q=None) -> None:
    if isinstance(result, tuple):
        result = lc(result)
    if isinstance(q, Fraction):
        text, data = _specialized(result, q)
    else:
        text, data = str(result), result.to_json()
    print(json.dumps(data, sort_keys=True) if fmt == "json" else text)


# -- commands -----------------------------------------------------------------

def cmd_op(args) -> int:
    if len(args.words) != 2:
        raise UsageError("op takes exactly two words")
    x, y = (_word(w) for w in args.words)
    q = parse_q(args.q)
    family_q = q if isinstance(q, int) else None
    kind = args.kind
    if kind == "concat":
        result = concat(x, y)
    elif kind == "dot":
        result = dot(x, y)
    elif kind == "backslash":
        result = backslash(x, y)
    elif kind == "shuffle":
        result = hopf.shuffle_product(x, y)
    else:
        result = hopf.tridendriform(x, y, kind, family_q)
    _emit(result, args.format, q if isinstance(q, Fraction) else None)
    return 0


def cmd_coproduct(args) -> int:
    _emit(hopf.coproduct(_word(args.word)), args.format)
    return 0


def cmd_primitive(args) -> int:
    x = _word(args.word)
    e = hopf.eulerian_projector(x)
    if args.format == "json":
        print(json.dumps({"E": e.to_json(), "input_primitive": hopf.is_primitive(x)},
                         sort_keys=True))
    else:
        print(e)
    return 0


def _irreducible(text: str):
    x = _word(text)
    if not is_irreducible(x):
        raise UsageError(f"{format_word(x)} is reducible")
    return x


def cmd_eta(args) -> int:
    _emit(freeness.eta(_irreducible(args.word)), args.format)
    return 0


def cmd_psi(args) -> int:
    x = _irreducible(args.word)
    q = parse_q(args.q)
    result = freeness.psi(x, q if isinstance(q, int) else None)
    _emit(result, args.format, q if isinstance(q, Fraction) else None)
    return 0


def _max_n(args, default: int) -> int:
    n = default if args.max_n is None else args.max_n
    if n < 1 or n > freeness.CEILING:
        raise UsageError(f"--max-n must be between 1 and {freeness.CEILING}")
    return n


def cmd_basis(args) -> int:
    n = _max_n(args, 3)
    tables = freeness.enumerate_bases(n)
    sets = ("irr", "indec", "D", "C", "B")
    if args.format == "json":
        data = [{"n": d, **{s: [list(w) for w in getattr(tables, s)[d]] for s in sets}}
                for d in range(1, n + 1)]
        print(json.dumps(data, sort_keys=True))
        return 0
    for d in range(1, n + 1):
        for s in sets:
            words = getattr(tables, s)[d]
            print(f"{s}_{d} ({len(words)}): {' '.join(map(format_word, words))}".rstrip())
    return 0


def dims_rows(n: int) -> list[dict]:
    tables = freeness.enumerate_bases(n)
    rows = []
    for d in range(1, n + 1):
        row = {"n": d, **tables.counts(d)}
        row["primRank"] = rank([hopf.eulerian_projector(x) for x in surjections(d)], at=0)
        rows.append(row)
    return rows


def cmd_dims(args) -> int:
    rows = dims_rows(_max_n(args, 4))
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
        return 0
    cols = ["n", "ST", "Irr", "Indec", "D", "C", "B", "primRank"]
    print("  ".join(f"{c:>8}" for c in cols))
    for row in rows:
        print("  ".join(f"{row[c]:>8}" for c in cols))
    return 0


def cmd_check(args) -> int:
    if args.suite is None:
        raise UsageError("check needs --suite")
    if args.suite == "freeness":
        n = _max_n(args, 4)
        reports = [freeness.freeness_report(d) for d in range(1, n + 1)]
        ok = all(r["pass"] for r in reports)
        if args.format == "json":
            print(json.dumps({"suite": "freeness", "pass": ok, "reports": reports},
                             sort_keys=True))
        else:
            for r in reports:
                print(f"n={r['n']}: {'pass' if r['pass'] else 'FAIL'} "
                      f"counts={r['counts']} ranks={r['ranks']}")
        return 0 if ok else 1
    try:
        report = suites.axiom_suite(args.suite, args.max_total)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--q", default=None, help="rational value or 'q' (default symbolic)")
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--max-total", type=int, default=None)
    common.add_argument("--suite", choices=SUITE_NAMES, default=None)
    common.add_argument("--kind", choices=KINDS, default="middle")

    parser = argparse.ArgumentParser(prog="packedwords", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("op", parents=[common], help="product of two words")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_op)
    for name, func, text in [("coproduct", cmd_coproduct, "reduced coproduct"),
                             ("primitive", cmd_primitive, "the projector E"),
                             ("eta", cmd_eta, "brace morphism on an irreducible word"),
                             ("psi", cmd_psi, "GV morphism on an irreducible word")]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("word")
        p.set_defaults(func=func)
    sub.add_parser("basis", parents=[common], help="generator sets").set_defaults(func=cmd_basis)
    sub.add_parser("dims", parents=[common], help="dimension table").set_defaults(func=cmd_dims)
    sub.add_parser("check", parents=[common], help="run a suite").set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
