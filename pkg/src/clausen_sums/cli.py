"""Command-line interface.

Usage:
    clausen-sums psi 1/10 --digits 30 --method murty --format json
    clausen-sums clausen --p 1 --q 3 --method all
    clausen-sums verify --all --digits 50 --report csv
    clausen-sums list

Default precision is 50 digits, overridable with $CLAUSEN_SUMS_DIGITS.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import re
import sys
from fractions import Fraction

from clausen_sums import __version__
from clausen_sums.clausen import (
    basel_case,
    c_from_pq,
    check_parameter,
    closed_3f2,
    series_3f2,
    telescoped_3f2,
)
from clausen_sums.digamma import ROUTES, psi_closed, psi_closed_pq, psi_hyp, psi_series
from clausen_sums.errors import AccuracyError, DomainError, ParseError
from clausen_sums.hp import PrecisionContext, format_decimal
from clausen_sums.rational import format_rational, parse_rational
from clausen_sums.theorems import Thresholds, load_database, summarize, verify_all

TOOL = "clausen-sums"
ENV_DIGITS = "CLAUSEN_SUMS_DIGITS"
DIFF_DIGITS = 6
CSV_COLUMNS = [
    "id", "c", "status", "digits", "closed_value", "series_value", "series_eps",
    "rhs_value", "diff_closed", "diff_series", "verdict",
]
_NEG_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _default_digits() -> int:
    raw = os.environ.get(ENV_DIGITS)
    if raw is None:
        return 50
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{TOOL}: error: ${ENV_DIGITS} must be an integer, got {raw!r}")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _num(x, digits) -> str | None:
    if x is None:
        return None
    return format_decimal(getattr(x, "value", x), digits)


def _header(digits, route) -> dict:
    return {"tool": TOOL, "version": __version__, "digits": digits, "route": route}


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# --------------------------------------------------------------------------
# psi


def cmd_psi(args) -> int:
    ctx = PrecisionContext(args.digits)
    r = args.arg
    unreduced = re.match(r"^\s*-?(\d+)\s*/\s*(\d+)\s*$", args.raw_arg or "")
    if unreduced and math.gcd(int(unreduced.group(1)), int(unreduced.group(2))) > 1:
        logging.getLogger(__name__).info("argument %s reduced to %s", args.raw_arg, format_rational(r))

    methods = ("murty", "gauss", "series", "hyp") if args.method == "all" else (args.method,)
    out = _header(args.digits, args.method)
    out["argument"] = format_rational(r)
    results = {}
    for m in methods:
        if m in ROUTES:
            cf = psi_closed(r, m)
            results[m] = {"closed_form": cf.render(), "value": _num(cf.evaluate(ctx), args.digits)}
        elif m == "series":
            s = psi_series(r, ctx)
            results[m] = {"value": _num(s.value, args.digits), "eps": _num(s.eps, DIFF_DIGITS),
                          "terms": s.terms, "kummer_order": s.kummer_order}
        else:
            results[m] = {"value": _num(psi_hyp(r, ctx), args.digits)}
    out["results"] = results

    if args.format == "json":
        sys.stdout.write(dump_json(out))
        return 0
    print(f"psi({out['argument']})  digits={args.digits}")
    for m, res in results.items():
        if "closed_form" in res:
            print(f"  {m:<7} closed form: {res['closed_form']}")
            print(f"  {'':<7} value:       {res['value']}")
        elif "eps" in res:
            print(f"  {m:<7} value:       {res['value']}  (+/- {res['eps']}, {res['terms']} terms)")
        else:
            print(f"  {m:<7} value:       {res['value']}")
    return 0


# --------------------------------------------------------------------------
# clausen


def cmd_clausen(args) -> int:
    ctx = PrecisionContext(args.digits)
    if args.c is not None:
        if args.p is not None or args.q is not None:
            raise SystemExit(f"{TOOL} clausen: error: give either --c or --p/--q, not both")
        c = args.c
    elif args.p is not None and args.q is not None:
        if args.q <= 0:
            raise SystemExit(f"{TOOL} clausen: error: --q must be positive")
        c = c_from_pq(args.p, args.q)
    else:
        raise SystemExit(f"{TOOL} clausen: error: give --c, or both --p and --q")
    c = check_parameter(c)

    out = _header(args.digits, args.route)
    out["c"] = format_rational(c)
    out["function"] = f"3F2[1, 1, {format_rational(c)}; 2, {format_rational(c + 1)}; 1]"
    results = {}
    if c == 1:
        out["note"] = "c = 1: the series is sum 1/(m+1)^2 = pi^2/6 (closed form degenerates)"
        results["basel"] = {"closed_form": "pi * pi / 6", "value": _num(basel_case(ctx), args.digits)}
    methods = ("closed", "series", "telescoped") if args.method == "all" else (args.method,)
    for m in methods:
        if m == "closed" and c != 1:
            cf = closed_3f2(c, args.route)
            results[m] = {"closed_form": cf.render(), "value": _num(cf.evaluate(ctx), args.digits)}
        elif m == "series":
            s = series_3f2(c, ctx)
            results[m] = {"value": _num(s.value, args.digits), "eps": _num(s.eps, DIFF_DIGITS),
                          "terms": s.terms, "kummer_order": s.kummer_order}
        elif m == "telescoped" and c != 1:
            results[m] = {"value": _num(telescoped_3f2(c, ctx), args.digits)}
    out["results"] = results

    if args.format == "json":
        sys.stdout.write(dump_json(out))
        return 0
    print(f"{out['function']}  digits={args.digits}")
    if "note" in out:
        print(f"  note: {out['note']}")
    for m, res in results.items():
        if "closed_form" in res:
            print(f"  {m:<10} closed form: {res['closed_form']}")
            print(f"  {'':<10} value:       {res['value']}")
        elif "eps" in res:
            print(f"  {m:<10} value:       {res['value']}  (+/- {res['eps']}, {res['terms']} terms)")
        else:
            print(f"  {m:<10} value:       {res['value']}")
    return 0


# --------------------------------------------------------------------------
# verify


def report_record(r, digits: int) -> dict:
    return {
        "id": r.id,
        "c": format_rational(r.c),
        "status": r.status,
        "digits": r.digits,
        "route": r.route,
        "closed_form": r.closed_form,
        "closed_value": _num(r.closed_value, digits),
        "series_value": _num(r.series_value, digits),
        "series_eps": _num(r.series_eps, DIFF_DIGITS),
        "rhs_value": _num(r.rhs_value, digits),
        "diff_closed": _num(r.diff_closed, DIFF_DIGITS),
        "diff_series": _num(r.diff_series, DIFF_DIGITS),
        "verdict": r.verdict,
        "expected": r.expected_verdict,
        "error": r.error,
    }


def render_verify(reports, digits: int, route: str, fmt: str) -> str:
    records = [report_record(r, digits) for r in reports]
    if fmt == "json":
        out = _header(digits, route)
        out["records"] = records
        out["summary"] = summarize(reports)
        return dump_json(out)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue()
    cols = [("id", 5), ("c", 6), ("status", 9), ("verdict", 13), ("diff_closed", 12),
            ("diff_series", 12), ("series_eps", 12)]
    lines = ["  ".join(f"{name:<{w}}" for name, w in cols)]
    for rec in records:
        lines.append("  ".join(f"{str(rec[name] if rec[name] is not None else '-'):<{w}}" for name, w in cols))
        if rec["error"]:
            lines.append(f"      error: {rec['error']}")
    s = summarize(reports)
    lines.append(f"summary: {s['pass']} pass, {s['expected_fail']} expected-fail, {s['fail']} fail"
                 f"  (digits={digits}, route={route})")
    return "\n".join(lines) + "\n"


def cmd_verify(args, parser) -> int:
    if not args.all and not args.id:
        parser.error("give --all or at least one --id")
    known = {r.id for r in load_database()}
    unknown = [i for i in (args.id or []) if i not in known]
    if unknown:
        parser.error(f"unknown theorem id(s): {', '.join(unknown)}")
    ctx = PrecisionContext(args.digits)
    thresholds = Thresholds(pass_threshold=args.threshold)
    reports = verify_all(ctx, thresholds, args.route, ids=None if args.all else args.id)
    text = render_verify(reports, args.digits, args.route, args.report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.ok for r in reports) else 1


def cmd_list(args) -> int:
    for r in load_database():
        print(r.to_line())
    return 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    digits = _default_digits()
    parser = argparse.ArgumentParser(prog=TOOL, description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log notices to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="digamma at a rational argument")
    p._negative_number_matcher = _NEG_RATIONAL
    p.add_argument("arg", help="rational argument, e.g. 1/10 or -3/2")
    p.add_argument("--method", choices=("murty", "gauss", "series", "hyp", "all"), default="murty")
    p.add_argument("--digits", type=int, default=digits)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("clausen", help="3F2[1, 1, c; 2, c+1; 1]")
    p.add_argument("--c", type=_rational_arg, help="third upper parameter")
    p.add_argument("--p", type=int, help="with --q: c = (p+q)/q")
    p.add_argument("--q", type=int)
    p.add_argument("--method", choices=("closed", "series", "telescoped", "all"), default="closed")
    p.add_argument("--route", choices=ROUTES, default="murty")
    p.add_argument("--digits", type=int, default=digits)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="check the theorem database")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id", action="append", help="theorem id, repeatable (e.g. 4.13)")
    p.add_argument("--digits", type=int, default=digits)
    p.add_argument("--report", choices=("text", "json", "csv"), default="text")
    p.add_argument("--threshold", type=float, default=None,
                   help="pass threshold for |closed - rhs| (default 1e-(digits-10))")
    p.add_argument("--route", choices=ROUTES, default="murty")
    p.add_argument("--output", help="write the report here instead of stdout")

    sub.add_parser("list", help="print the theorem database")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if getattr(args, "digits", 50) < 10:
        parser.error("--digits must be at least 10")
    try:
        if args.command == "psi":
            args.raw_arg = args.arg
            try:
                args.arg = parse_rational(args.arg)
            except ParseError as exc:
                parser.error(str(exc))
            return cmd_psi(args)
        if args.command == "clausen":
            return cmd_clausen(args)
        if args.command == "verify":
            return cmd_verify(args, parser)
        return cmd_list(args)
    except (DomainError, AccuracyError) as exc:
        print(f"{TOOL}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
