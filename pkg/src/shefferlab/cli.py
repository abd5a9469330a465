"""Command-line interface.

Usage::

    shefferlab expand --family daehee_first_barnes --a 1,2 --n 5 --format csv
    shefferlab expand --family bernoulli_number --n 10 --format json
    shefferlab verify --theorems all --n-max 8 --preset default

Exit codes: 0 success, 1 at least one identity failed, 2 usage error.
The environment variable ``SHEFFERLAB_ORDER`` overrides the working
truncation order (default ``n + 2``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BadRational, ShefferLabError
from .families import NUMBER_FAMILIES, FamilyId, FamilyParams, family_numbers, family_polynomials
from .identities import ALL_THEOREMS, PRESETS, Grid, IdentityReport, TheoremId, verify_suite
from .polynomial import Polynomial
from .rational import format_rational, parse_rational

SCHEMA_VERSION = "1"
ORDER_ENV = "SHEFFERLAB_ORDER"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except BadRational as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except BadRational as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shefferlab", description="Exact Sheffer-sequence tables and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ex = sub.add_parser("expand", help="tabulate a number or polynomial family")
    ex.add_argument("--family", required=True, choices=[f.value for f in FamilyId])
    ex.add_argument("--n", required=True, type=_nonneg_int)
    ex.add_argument("--a", type=_rational_list, default=())
    ex.add_argument("--lambda", dest="lam", type=_rational)
    ex.add_argument("--s", type=_nonneg_int)
    ex.add_argument("--r", type=_nonneg_int)
    ex.add_argument("--x-eval", dest="x_eval", type=_rational)
    ex.add_argument("--format", choices=["json", "csv"], default="json")

    ve = sub.add_parser("verify", help="check the identities over a parameter grid")
    ve.add_argument("--theorems", default="all")
    ve.add_argument("--n-max", dest="n_max", type=_nonneg_int, default=8)
    ve.add_argument("--preset", choices=sorted(PRESETS), default="default")
    ve.add_argument("--format", choices=["json", "csv"], default="json")
    ve.add_argument("--out")
    return parser


def _working_order(n: int, minimum: int) -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None or raw == "":
        return max(n + 2, minimum)
    try:
        order = int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None
    if order < minimum:
        raise UsageError(f"{ORDER_ENV}={order} is below the required order {minimum}")
    return order


# --- serialization -------------------------------------------------------------


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def _poly_json(p: Polynomial) -> list[str]:
    return p.to_strings() or ["0"]


def _csv_text(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _params_json(params: FamilyParams) -> dict:
    return {
        "a": [format_rational(x) for x in params.a],
        "lambda": None if params.lam is None else format_rational(params.lam),
        "s": params.s,
        "r": params.r,
    }


def expand_document(family: FamilyId, params: FamilyParams, n: int, x_eval: Optional[Fraction], order: int, fmt: str) -> str:
    numbers: Optional[list[Fraction]] = None
    polys: Optional[list[Polynomial]] = None
    if family in NUMBER_FAMILIES:
        if x_eval is not None:
            raise UsageError(f"--x-eval does not apply to the number family {family.value}")
        numbers = family_numbers(family, params, n, order)
    else:
        polys = family_polynomials(family, params, n, order)
        if x_eval is not None:
            numbers = [p(x_eval) for p in polys]

    if fmt == "csv":
        if numbers is not None:
            rows = [["n", "value"]] + [[k, format_rational(v)] for k, v in enumerate(numbers)]
        else:
            rows = [["n"] + [f"x^{k}" for k in range(n + 1)]]
            rows += [[k] + (p.to_strings() or ["0"]) for k, p in enumerate(polys)]
        return _csv_text(rows)

    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "expand",
        "family": family.value,
        "params": _params_json(params),
        "n": n,
        "x_eval": None if x_eval is None else format_rational(x_eval),
    }
    if numbers is not None:
        doc["kind"] = "numbers"
        doc["values"] = [format_rational(v) for v in numbers]
    else:
        doc["kind"] = "polynomials"
        doc["polynomials"] = [_poly_json(p) for p in polys]
    return dump_json(doc)


def report_json(report: IdentityReport) -> dict:
    inst = report.instance
    out = {
        "theorem": inst.theorem.value,
        "n": inst.n,
        "m": inst.m,
        "a": [format_rational(x) for x in inst.a],
        "lambda": None if inst.lam is None else format_rational(inst.lam),
        "s": inst.s,
        "pass": report.passed,
        "lhs": _poly_json(report.lhs),
        "rhs": _poly_json(report.rhs),
        "witness": _poly_json(report.witness),
    }
    if len(report.checks) > 1:
        out["checks"] = [
            {
                "label": c.label,
                "pass": c.passed,
                "lhs": _poly_json(c.lhs),
                "rhs": _poly_json(c.rhs),
                "witness": _poly_json(c.witness),
            }
            for c in report.checks
        ]
    return out


def verify_document(reports: list[IdentityReport], summary: dict, meta: dict, fmt: str) -> str:
    if fmt == "csv":
        rows = [["theorem", "n", "m", "a", "lambda", "s", "pass"]]
        for r in reports:
            inst = r.instance
            rows.append(
                [
                    inst.theorem.value,
                    inst.n,
                    "" if inst.m is None else inst.m,
                    " ".join(format_rational(x) for x in inst.a),
                    "" if inst.lam is None else format_rational(inst.lam),
                    "" if inst.s is None else inst.s,
                    "true" if r.passed else "false",
                ]
            )
        return _csv_text(rows)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "theorems": meta["theorems"],
        "n_max": meta["n_max"],
        "preset": meta["preset"],
        "summary": summary,
        "reports": [report_json(r) for r in reports],
    }
    return dump_json(doc)


# --- commands ------------------------------------------------------------------


def cmd_expand(args) -> tuple[int, str]:
    family = FamilyId(args.family)
    params = FamilyParams(a=tuple(args.a), lam=args.lam, s=args.s, r=args.r)
    order = _working_order(args.n, args.n)
    return 0, expand_document(family, params, args.n, args.x_eval, order, args.format)


def _parse_theorems(text: str) -> tuple[TheoremId, ...]:
    if text == "all":
        return ALL_THEOREMS
    tags = [t.strip() for t in text.split(",") if t.strip()]
    if not tags:
        raise UsageError("--theorems is empty")
    out = []
    for tag in tags:
        try:
            out.append(TheoremId(tag))
        except ValueError:
            raise UsageError(f"unknown theorem tag {tag!r}") from None
    return tuple(out)


def cmd_verify(args) -> tuple[int, str]:
    theorems = _parse_theorems(args.theorems)
    grid = Grid.preset(args.preset, theorems, args.n_max)
    order = _working_order(args.n_max, args.n_max + 1)
    result = verify_suite(grid, order)
    summary = result.summary
    meta = {"theorems": [t.value for t in theorems], "n_max": args.n_max, "preset": args.preset}
    text = verify_document(result.reports, summary, meta, args.format)
    return (0 if summary["failed"] == 0 else 1), text


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = cmd_expand if args.command == "expand" else cmd_verify
        code, text = handler(args)
    except UsageError as exc:
        print(f"shefferlab: error: {exc}", file=sys.stderr)
        return 2
    except ShefferLabError as exc:
        print(f"shefferlab: error: {exc}", file=sys.stderr)
        return 2
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
