"""Command-line interface.

Subcommands ``bernoulli``, ``stirling``, ``fubini``, ``ordered-bell`` print
exact values as JSON lines or CSV; ``verify`` runs the cross-check suite.
Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .bernoulli import bernoulli_at_integer
from .exact_arith import Value, format_value, parse_rational
from .fubini import fubini_poly, ordered_bell
from .stirling import triangle_build
from .verify import DEFAULT_S_VALUES, TriangleBuilder, VerifyConfig, format_report, run_verification

KINDS = ("bernoulli_number", "bernoulli_at_integer", "stirling", "r_stirling", "fubini_value", "ordered_bell")
INDEX_COLUMNS = ("n", "k", "r", "x")


@dataclass(frozen=True)
class OutputRecord:
    kind: str
    indices: dict[str, Value]
    value: Value

    def as_json(self) -> str:
        idx = {k: format_value(v) if isinstance(v, Fraction) else v for k, v in self.indices.items()}
        return json.dumps({"kind": self.kind, "indices": idx, "value": format_value(self.value)})

    def as_row(self) -> list[str]:
        row = [self.kind]
        for col in INDEX_COLUMNS:
            row.append(format_value(self.indices[col]) if col in self.indices else "")
        row.append(format_value(self.value))
        return row


def write_records(records: Iterable[OutputRecord], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        for rec in records:
            out.write(rec.as_json() + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["kind", *INDEX_COLUMNS, "value"])
    for rec in records:
        writer.writerow(rec.as_row())


def cmd_bernoulli(n_max: int, r: int) -> Iterable[OutputRecord]:
    kind = "bernoulli_number" if r == 0 else "bernoulli_at_integer"
    for n in range(n_max + 1):
        yield OutputRecord(kind, {"n": n, "r": r}, bernoulli_at_integer(n, r))


def cmd_stirling(n_max: int, r: int, k: int | None = None) -> Iterable[OutputRecord]:
    kind = "stirling" if r == 0 else "r_stirling"
    tri = triangle_build(r, n_max)
    for n in range(r, n_max + 1):
        ks = range(n + 1) if k is None else [k] if k <= n else []
        for kk in ks:
            yield OutputRecord(kind, {"n": n, "k": kk, "r": r}, tri[n, kk])


def cmd_fubini(n: int, r: int, x: Fraction) -> OutputRecord:
    return OutputRecord("fubini_value", {"n": n, "r": r, "x": x}, fubini_poly(n, r)(x))


def cmd_ordered_bell(n_max: int) -> Iterable[OutputRecord]:
    for n in range(n_max + 1):
        yield OutputRecord("ordered_bell", {"n": n}, ordered_bell(n))


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rstirling",
        description="Exact Bernoulli, r-Stirling and Fubini-polynomial values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("bernoulli", help="B_n(r) for n = 0..n-max")
    p.add_argument("--n-max", type=_non_negative, required=True)
    p.add_argument("--r", type=_non_negative, default=0)
    add_format(p)

    p = sub.add_parser("stirling", help="rows r..n-max of the S_r triangle")
    p.add_argument("--n-max", type=_non_negative, required=True)
    p.add_argument("--r", type=_non_negative, default=0)
    p.add_argument("--k", type=_non_negative, default=None, help="emit only this column")
    add_format(p)

    p = sub.add_parser("fubini", help="F_{n,r}(x)")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--r", type=_non_negative, default=0)
    p.add_argument("--x", type=_rational, required=True, help="rational, e.g. 5/7 or --x=-1/2")
    add_format(p)

    p = sub.add_parser("ordered-bell", help="ordered Bell numbers for n = 0..n-max")
    p.add_argument("--n-max", type=_non_negative, required=True)
    add_format(p)

    p = sub.add_parser("verify", help="run every cross-path identity check")
    p.add_argument("--n-max", type=_non_negative, default=40)
    p.add_argument("--r-max", "--r", dest="r_max", type=_non_negative, default=8)
    p.add_argument("--egf-order", type=_non_negative, default=32)
    p.add_argument(
        "--s",
        type=_rational,
        action="append",
        default=None,
        help="repeatable; defaults to -1, 1/2, 2 (write negatives as --s=-3/7)",
    )
    return parser


def main(
    argv: Sequence[str] | None = None,
    *,
    stdout: TextIO | None = None,
    triangle_builder: TriangleBuilder = triangle_build,
) -> int:
    """Entry point.  ``triangle_builder`` lets tests inject a faulty triangle into ``verify``."""
    out = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        cfg = VerifyConfig(
            max_n=args.n_max,
            max_r=args.r_max,
            egf_order=args.egf_order,
            s_values=tuple(args.s) if args.s else DEFAULT_S_VALUES,
            triangle_builder=triangle_builder,
        )
        results = run_verification(cfg)
        for line in format_report(results):
            out.write(line + "\n")
        return 0 if all(r.ok for r in results) else 1

    if args.command == "bernoulli":
        records = cmd_bernoulli(args.n_max, args.r)
    elif args.command == "stirling":
        if args.n_max < args.r:
            parser.error(f"stirling needs --n-max >= --r (got {args.n_max} < {args.r})")
        records = cmd_stirling(args.n_max, args.r, args.k)
    elif args.command == "fubini":
        records = [cmd_fubini(args.n, args.r, args.x)]
    else:
        records = cmd_ordered_bell(args.n_max)
    write_records(records, args.format, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
