"""Command-line entry point: ``k3curves <command> ...``.

Exit status is 0 on success, 1 when the operation itself fails (guard
exceeded, reduction impossible, self-test mismatch) and 2 for bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import counting
from .admseq import enumerate_admissible, enumerate_one_admissible
from .cremona import DEFAULT_MAX_STEPS, BlowupClass, ReductionError, reduce_to_section_class
from .modforms import k3_generating_series, re_generating_series
from .selftest import render_results, run_selftest

SCHEMA_VERSION = 1


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _surface(text: str) -> counting.Surface:
    try:
        return counting.Surface.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def cmd_series(args) -> int:
    build = k3_generating_series if args.surface is counting.Surface.K3 else re_generating_series
    coeffs = build(args.genus, args.order).integer_coeffs()
    if args.json:
        _emit({
            "kind": "series",
            "schema_version": SCHEMA_VERSION,
            "surface": args.surface.value,
            "genus": args.genus,
            "order": args.order,
            "coefficients": coeffs,
        })
    else:
        for n, c in enumerate(coeffs):
            print(f"{n}: {c}")
    return 0


def cmd_count(args) -> int:
    q = counting.CountQuery(args.surface, args.genus, args.nodes)
    guards = counting.Guards.from_env()
    try:
        value = counting.METHODS[args.method](q, guards)
    except (counting.GuardExceeded, counting.UndeterminedComponent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _emit({
            "kind": "count",
            "schema_version": SCHEMA_VERSION,
            "surface": args.surface.value,
            "genus": args.genus,
            "nodes": args.nodes,
            "method": args.method,
            "value": value,
        })
    else:
        print(value)
    return 0


def cmd_reduce(args) -> int:
    try:
        c = BlowupClass.parse(args.class_text)
        result = reduce_to_section_class(c, args.max_steps)
    except ReductionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _emit({
            "kind": "reduction",
            "schema_version": SCHEMA_VERSION,
            "input": c.render(),
            "i": result.i,
            "transforms": result.n_transforms,
            "steps": [
                {"kind": s.kind, "before": s.before.render(), "after": s.after.render(),
                 "detail": list(s.detail)}
                for s in result.steps
            ],
        })
    else:
        for k, step in enumerate(result.steps, 1):
            print(f"{k}. {step.describe()}")
        print(f"transforms: {result.n_transforms}")
        print(f"result: e9 + {result.i} F  (i = {result.i})")
    return 0


def cmd_admissible(args) -> int:
    seqs = enumerate_one_admissible(args.size) if args.one_admissible else enumerate_admissible(args.size)
    if args.json:
        _emit({
            "kind": "admissible",
            "schema_version": SCHEMA_VERSION,
            "size": args.size,
            "one_admissible": args.one_admissible,
            "sequences": [{"lo": s.lo, "values": list(s.values)} for s in seqs],
            "count": len(seqs),
        })
    else:
        for s in seqs:
            print(s.render())
        print(f"count: {len(seqs)}")
    return 0


def cmd_selftest(args) -> int:
    results = run_selftest(quick=args.quick)
    print(render_results(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3curves",
        description="Exact curve counts on K3 and rational elliptic surfaces.",
        epilog=f"Guard overrides: {counting.ENV_CONVOLUTION_MAX}, {counting.ENV_COMPONENTS_MAX}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="coefficients of the generating series")
    p.add_argument("--surface", type=_surface, required=True, help="k3 or re")
    p.add_argument("--genus", type=_non_negative, required=True)
    p.add_argument("--order", type=_non_negative, required=True)
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("count", help="a single count N_g(n) or N_g^Y(C_n)")
    p.add_argument("--surface", type=_surface, required=True, help="k3 or re")
    p.add_argument("--genus", type=_non_negative, required=True)
    p.add_argument("--nodes", type=_non_negative, required=True)
    p.add_argument("--method", choices=sorted(counting.METHODS), default="closed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("reduce", help="reduce a class with F.C = 1 to e9 + iF")
    p.add_argument("class_text", metavar="CLASS", help='"d;a1,...,a9"')
    p.add_argument("--max-steps", type=_positive, default=DEFAULT_MAX_STEPS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("admissible", help="list admissible sequences of a given size")
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--one-admissible", action="store_true", help="only 1-admissible ones")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("selftest", help="run the built-in consistency checks")
    p.add_argument("--quick", action="store_true", help="smaller grids")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # e.g. malformed guard override
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
