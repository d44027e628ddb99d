"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import boundary, fixtures, knot_module, tables, verify
from .errors import ParseError, SkeinAlgError
from .parsing import format_torus, format_xy, parse_torus, parse_xy


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinalg",
        description=(
            "Exact skein computations: the torus algebra acting on the"
            " knot-complement module."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    act = sub.add_parser("act", help="apply a torus element to a module element")
    act.add_argument("--skein", required=True, help="torus expression, e.g. '(0,1)'")
    act.add_argument(
        "--on", required=True, dest="target", help="module expression, e.g. 'x^2*y^1'"
    )
    act.add_argument("--basis", choices=("chebyshev", "power"), default="chebyshev")
    act.add_argument("--format", choices=("text", "json"), default="text")
    act.add_argument(
        "--seeds",
        choices=("derived", "printed"),
        default="derived",
        help="seed the engine from recomputed actions or the stored tables",
    )

    mul = sub.add_parser("mul", help="multiply two torus elements")
    mul.add_argument("--left", required=True)
    mul.add_argument("--right", required=True)
    mul.add_argument("--format", choices=("text", "json"), default="text")

    derive = sub.add_parser("derive", help="recompute stored objects")
    derive.add_argument(
        "--target",
        required=True,
        choices=("theorem1", "theorem2", "reductions", "handlebody-fixtures"),
    )
    derive.add_argument(
        "--compare",
        action="store_true",
        help="also diff against the stored displays",
    )
    derive.add_argument("--basis", choices=("chebyshev", "power"), default="chebyshev")

    ver = sub.add_parser("verify", help="run a consistency suite")
    ver.add_argument("--suite", required=True, choices=verify.SUITES)
    ver.add_argument("--trials", type=int, default=100)
    ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)

    tab = sub.add_parser("tables", help="export the coefficient tables")
    tab.add_argument("--format", choices=("csv", "latex", "json"), default="json")

    return parser


def _cmd_act(args) -> int:
    a = parse_torus(args.skein)
    v = parse_xy(args.target)
    engine = boundary.ActionEngine(
        seeds=None if args.seeds == "derived" else "printed"
    )
    result = engine.act(a, v)
    if args.format == "json":
        print(json.dumps(result.to_json(args.basis), indent=2, sort_keys=True))
    else:
        print(format_xy(result, basis=args.basis))
    return 0


def _cmd_mul(args) -> int:
    product = parse_torus(args.left).mul(parse_torus(args.right))
    if args.format == "json":
        print(json.dumps(product.to_json(), indent=2, sort_keys=True))
    else:
        print(format_torus(product))
    return 0


def _cmd_derive(args) -> int:
    code = 0
    if args.target == "reductions":
        rules = knot_module.derive_reductions()
        for b in sorted(rules.s_rules):
            print(f"S_{b}(y) -> {format_xy(rules.rule(b), basis=args.basis)}")
        print(f"X4 -> {format_xy(rules.x4, basis=args.basis)}")
        if args.compare:
            subset = [
                f
                for f in fixtures.load_fixtures("knot_module")
                if f["kind"] in ("reduction", "x4_expansion")
            ]
            results = [fixtures.compare_fixture("knot_module", f) for f in subset]
            print(fixtures.summarize(results), end="")
            if fixtures.unexpected_mismatches(results):
                code = 1
    elif args.target in ("theorem1", "theorem2"):
        kind = "alpha" if args.target == "theorem1" else "beta"
        derived = tables.derived_table(kind)
        print(derived.to_text(), end="")
        if args.compare:
            report = tables.compare_tables(derived, tables.printed_table(kind))
            print(report.to_text(), end="")
            if not report.ok():
                code = 1
    else:  # handlebody-fixtures
        results = fixtures.run_group("handlebody")
        if args.compare:
            print(fixtures.summarize(results), end="")
            if fixtures.unexpected_mismatches(results):
                code = 1
        else:
            for r in results:
                print(f"{r['name']} -> {r['derived']}")
    return code


def _cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, trials=args.trials, seed=args.seed)
    print(verify.render(results), end="")
    return 0 if not verify.failures(results) else 1


def _cmd_tables(args) -> int:
    print(tables.export_all(args.format), end="")
    return 0


_DISPATCH = {
    "act": _cmd_act,
    "mul": _cmd_mul,
    "derive": _cmd_derive,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ParseError as exc:
        print(f"parse error at position {exc.position}: {exc}", file=sys.stderr)
        return 2
    except SkeinAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
