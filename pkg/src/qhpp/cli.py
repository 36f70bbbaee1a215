"""Command-line interface.

Subcommands: ``eval``, ``expand``, ``kollar``, ``family``, ``sweep``,
``verify``.  All numeric output is exact; decimal approximations appear only
behind ``--approx`` and are marked as approximate.  Exit codes: 0 success,
1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import families, verify
from .contraction import QhppReport
from .hjcf import (
    HJFraction,
    determinant,
    discrepancy_coefficients,
    evaluate,
    expand,
    partial_orders,
)
from .kollar import KollarParams, singularity_types, weights


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; route through our exit-code scheme
    def error(self, message):
        raise _UsageError(message)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_span(text: str) -> range:
    """An inclusive integer span ``lo..hi`` (a bare integer means lo == hi)."""
    try:
        if ".." in text:
            lo_text, _, hi_text = text.partition("..")
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise _UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if hi < lo:
        raise _UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _report_record(family: str, params: Sequence[int], report: QhppReport) -> dict:
    return {"family": family, "params": list(params), **report.to_record()}


def cmd_eval(args) -> int:
    w = HJFraction(tuple(args.entries))
    value = evaluate(w)
    po = partial_orders(w)
    coeffs = discrepancy_coefficients(w)
    print(f"w = {w}")
    print(f"q/q1 = {value.numerator}/{value.denominator}")
    print(f"|w| = {determinant(w)}")
    print(f"u = ({', '.join(str(x) for x in po.u)})")
    print(f"v = ({', '.join(str(x) for x in po.v)})")
    print(f"discrepancies = ({', '.join(_frac(d) for d in coeffs)})")
    return 0


def cmd_expand(args) -> int:
    print(expand(args.q, args.q1))
    return 0


def cmd_kollar(args) -> int:
    p = KollarParams(args.a1, args.a2, args.a3, args.a4)
    W = weights(p)
    print(f"a  = {p.as_tuple()}")
    print(f"w  = ({W.w1}, {W.w2}, {W.w3}, {W.w4})")
    print(f"d  = {W.d}")
    print(f"w* = {W.wstar}")
    print(f"s1 = {W.s1}, t1 = {W.t1}")
    print(f"s2 = {W.s2}, t2 = {W.t2}")
    if W.wstar != 1:
        print(
            f"w* = {W.wstar} != 1: singularity types are only defined for a "
            "primitive weight system"
        )
        return 0
    for i, (sing, chain) in enumerate(singularity_types(p), start=1):
        print(f"type {i}: {sing}, chain {chain}")
    return 0


def _print_report(fb: families.FamilyBuild, report: QhppReport, approx: bool) -> None:
    print(f"family {fb.family}{fb.params}")
    print(f"blow-ups = {fb.model.blowup_count}")
    print(f"rho = {report.rho}")
    for i, (sing, chain) in enumerate(report.singularities, start=1):
        print(f"singularity {i}: {sing}, chain {chain}")
    print(f"k_class = {report.k_class.value}")
    print(f"k_value = {_frac(report.k_value)}")
    if approx:
        print(f"k_value approx. {float(report.k_value):.6g}")
    print(f"test curve = {report.test_curve}")


def cmd_family(args) -> int:
    fb = families.build(args.family, args.params)
    report = fb.classify()
    if args.json:
        print(json.dumps(_report_record(fb.family, fb.params, report)))
    else:
        _print_report(fb, report, args.approx)
    if args.graph:
        with open(args.graph, "w") as handle:
            handle.write(fb.model.dual_graph().to_dot())
        if not args.json:
            print(f"dual graph written to {args.graph}")
    return 0


def _sweep_rows(family: str, spans: list[range]):
    for params in product(*spans):
        fb = families.build(family, params)
        yield fb, fb.classify()


def cmd_sweep(args) -> int:
    family = args.family
    if family not in families.FAMILY_IDS:
        raise _UsageError(
            f"unknown family {family!r}; known: {', '.join(families.FAMILY_IDS)}"
        )
    names = families.PARAM_NAMES[family]
    if len(args.ranges) != len(names):
        raise _UsageError(
            f"family {family} takes {len(names)} range(s) ({', '.join(names)}), "
            f"got {len(args.ranges)}"
        )
    spans = [_parse_span(text) for text in args.ranges]
    rows = _sweep_rows(family, spans)
    if args.format == "json":
        records = [_report_record(family, fb.params, rep) for fb, rep in rows]
        text = json.dumps(records, indent=2) + "\n"
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header = [*names, "orders", "rho", "k_class", "k_value"]
        if args.approx:
            header.append("k_value_approx")
        writer.writerow(header)
        for fb, rep in rows:
            row = [
                *fb.params,
                ";".join(str(s.q) for s, _ in rep.singularities),
                rep.rho,
                rep.k_class.value,
                _frac(rep.k_value),
            ]
            if args.approx:
                row.append(f"{float(rep.k_value):.6g}")
            writer.writerow(row)
        text = buffer.getvalue()
    else:  # markdown
        header = [*names, "orders", "rho", "k_class", "k_value"]
        if args.approx:
            header.append("k_value (approx.)")
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join(" --- " for _ in header) + "|",
        ]
        for fb, rep in rows:
            cells = [
                *(str(x) for x in fb.params),
                ";".join(str(s.q) for s, _ in rep.singularities),
                str(rep.rho),
                rep.k_class.value,
                _frac(rep.k_value),
            ]
            if args.approx:
                cells.append(f"{float(rep.k_value):.6g}")
            lines.append("| " + " | ".join(cells) + " |")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    results = verify.run(args.suite)
    failed = 0
    for check in results:
        status = "PASS" if check.passed else "FAIL"
        detail = f" ({check.detail})" if check.detail else ""
        print(f"{status} {check.name}{detail}")
        failed += not check.passed
    if failed:
        print(f"{failed} of {len(results)} checks failed")
        return 2
    print(f"all {len(results)} checks passed")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="qhpp",
        description=(
            "Exact computations with Hirzebruch-Jung continued fractions, "
            "blow-ups of the plane and rank-one contractions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a chain: value, order, discrepancies")
    p.add_argument("entries", nargs="+", type=int, metavar="N")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("expand", help="expand q/q1 into a chain")
    p.add_argument("q", type=int)
    p.add_argument("q1", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("kollar", help="weight system and singularity types")
    for name in ("a1", "a2", "a3", "a4"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_kollar)

    p = sub.add_parser("family", help="build one family member and classify it")
    p.add_argument("family", choices=families.FAMILY_IDS)
    p.add_argument("params", nargs="+", type=int, metavar="P")
    p.add_argument("--json", action="store_true", help="emit a JSON record")
    p.add_argument("--graph", metavar="PATH", help="write the dual graph as DOT")
    p.add_argument(
        "--approx", action="store_true", help="also print a decimal approximation"
    )
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", help="classify a family over parameter ranges")
    p.add_argument("family")
    p.add_argument("ranges", nargs="+", metavar="LO..HI")
    p.add_argument("--format", choices=("csv", "json", "markdown"), default="csv")
    p.add_argument("--output", "-o", metavar="PATH")
    p.add_argument(
        "--approx", action="store_true", help="add a decimal approximation column"
    )
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run exhaustive invariant suites")
    p.add_argument("suite", choices=("hjcf", "kollar", "families", "all"))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    raise SystemExit(main())
