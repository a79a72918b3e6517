"""Command line front end.

Subcommands: `info` reports a code's parameters, `certify` emits a
weight-delta certificate as JSON, `oracle` runs the brute-force
distance computation, `bound` evaluates the sphere-packing
classification, and `table` regenerates a published table and diffs it
against the checked-in golden JSON.

Exit codes: 0 success, 2 criterion or validation failure, 3 resource
cap, 4 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bch import bch_bound, bose_distance, build_code, dimension_closed_form
from .bounds import classify
from .errors import (
    BadParameters,
    BchCertError,
    BudgetExceeded,
    CertificateError,
    CriterionFailed,
    FieldTooLarge,
    NormCheckFailed,
    OutOfLemmaRange,
    RowMismatch,
    TooLarge,
)
from .locator import (
    construct_nonprimitive_family,
    construct_qt_family,
    construct_small_delta,
    search_certificate,
)
from .oracle import FULL_ENUM_CAP, min_distance_full, min_distance_support
from .tables import (
    FAMILIES,
    compare_with_golden,
    generate_family,
    payload_text,
    render_csv,
    render_text,
    resolve_family,
    rows_payload,
    write_golden,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_RESOURCE = 3
EXIT_USAGE = 4

_VALIDATION_ERRORS = (CriterionFailed, RowMismatch, CertificateError,
                      NormCheckFailed)
_RESOURCE_ERRORS = (FieldTooLarge, TooLarge, BudgetExceeded)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _print_error(ex: Exception) -> None:
    print(json.dumps({"error": type(ex).__name__, "message": str(ex)}),
          file=sys.stderr)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human, end="")


def cmd_info(args) -> int:
    code = build_code(args.q, args.n, args.delta, args.b)
    try:
        closed = dimension_closed_form(args.q, args.n, args.delta)
    except OutOfLemmaRange:
        closed = None
    payload = {
        "q": code.q, "n": code.n, "delta": code.delta, "b": code.b,
        "m": code.m, "k": code.dimension, "k_closed_form": closed,
        "bose_distance": bose_distance(code) if code.b == 1 else None,
        "bch_bound": bch_bound(code),
        "defining_set_size": len(code.defining_set),
        "field": code.field.describe(),
    }
    lines = [f"code: {code.params_str()} (designed distance, b={code.b})",
             f"m: {code.m}  (ambient field GF({code.field.order}))",
             f"k: {code.dimension}"
             + ("" if closed is None else f"  (closed form {closed})"),
             f"bose distance: {payload['bose_distance']}",
             f"bch bound: {payload['bch_bound']}",
             f"defining set size: {payload['defining_set_size']}"]
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def _require(args, names, family) -> None:
    missing = [f"--{n.replace('lam', 'lambda')}" for n in names
               if getattr(args, n) is None]
    if missing:
        raise BadParameters(
            f"certify {family} requires {', '.join(missing)}")


def cmd_certify(args) -> int:
    if args.family == "qt":
        _require(args, ("q", "t", "m"), "qt")
        cert = construct_qt_family(args.q, args.t, args.m)
    elif args.family == "nonprimitive":
        _require(args, ("p", "e", "lam"), "nonprimitive")
        cert = construct_nonprimitive_family(args.p, args.e, args.lam)
    elif args.family == "small-delta":
        _require(args, ("q", "m", "delta"), "small-delta")
        cert = construct_small_delta(args.q, args.m, args.delta)
    else:
        _require(args, ("q", "n", "delta"), "search")
        code = build_code(args.q, args.n, args.delta, 1)
        cert = search_certificate(code, budget=args.budget)
        if cert is None:
            print(json.dumps({"found": False,
                              "message": "support space exhausted: d > delta"}))
            return EXIT_VALIDATION
    print(json.dumps(cert.to_json_dict(), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_oracle(args) -> int:
    code = build_code(args.q, args.n, args.delta, args.b)
    method = args.method
    if method == "auto":
        method = "full" if code.q**code.dimension <= FULL_ENUM_CAP else "support"
    if method == "full":
        result = min_distance_full(code)
    else:
        result = min_distance_support(code, args.w_max, budget=args.budget)
    payload = result.to_json_dict()
    if payload["d"] is None:
        human = (f"d > {payload['lower_bound'] - 1} "
                 f"({payload['method']}, {payload['enumerated']} supports)\n")
    else:
        human = (f"d = {payload['d']} ({payload['method']}, "
                 f"{payload['enumerated']} enumerated)\n")
    _emit(args, payload, human)
    return EXIT_OK


def cmd_bound(args) -> int:
    report = classify(args.n, args.k, args.d, args.q)
    human = (f"[{args.n},{args.k},{args.d}]_{args.q}: {report.classification} "
             f"(sphere packing allows d <= {report.max_d_allowed})\n")
    _emit(args, report.to_json_dict(), human)
    return EXIT_OK


def cmd_table(args) -> int:
    names = list(FAMILIES) if args.family == "all" else [resolve_family(args.family)]
    for family in names:
        rows = generate_family(family)
        if args.update_golden:
            path = write_golden(family, rows, args.seed_dir)
            print(f"wrote {path}", file=sys.stderr)
        else:
            compare_with_golden(family, rows, args.seed_dir)
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{family}.json").write_text(
                payload_text(rows_payload(family, rows)))
            (out / f"{family}.csv").write_text(render_csv(rows))
            from .figures import render_family_figure
            render_family_figure(family, rows, out / f"{family}.png")
        if args.json:
            print(json.dumps(rows_payload(family, rows), indent=2,
                             sort_keys=True))
        else:
            print(render_text(family, rows), end="")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="bchcert",
                     description="Certified minimum distances for "
                                 "narrow-sense BCH codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="report code parameters")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("certify", help="emit a weight-delta certificate")
    p.add_argument("family",
                   choices=("qt", "nonprimitive", "small-delta", "search"))
    p.add_argument("--q", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle", help="brute-force minimum distance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--w-max", type=int, default=None)
    p.add_argument("--method", choices=("auto", "full", "support"),
                   default="auto")
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bound", help="sphere-packing classification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="regenerate a published table")
    p.add_argument("family", choices=(*FAMILIES, "qt", "all"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--out-dir")
    p.add_argument("--seed-dir")
    p.add_argument("--update-golden", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except _VALIDATION_ERRORS as ex:
        _print_error(ex)
        return EXIT_VALIDATION
    except _RESOURCE_ERRORS as ex:
        _print_error(ex)
        return EXIT_RESOURCE
    except BchCertError as ex:
        _print_error(ex)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
