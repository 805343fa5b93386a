"""Command-line front end.

Flags take ``n`` (half the weight); output prints the weight ``2n``.  So
``evenzeta value --n 3 --k 2`` prints ``E(6,2)``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import suites
from .exact_arith import PiValue
from .oracle import DEFAULT_LIMIT
from .routes import EXACT_METHODS, METHODS, coefficient_of, e_exact, e_numeric, e_table

FIELDS = ("weight", "depth", "pi_power", "coeff_num", "coeff_den", "float_value", "method")
FLOAT_DIGITS = 20
# denominator bound when turning an oracle float into a rational coefficient
ORACLE_MAX_DEN = 10**12


class UsageError(Exception):
    pass


def exact_record(n: int, k: int, value: PiValue, method: str) -> dict:
    c = coefficient_of(value, n)
    return {
        "weight": 2 * n,
        "depth": k,
        "pi_power": 2 * n,
        "coeff_num": str(c.numerator),
        "coeff_den": str(c.denominator),
        "float_value": value.to_decimal_string(FLOAT_DIGITS),
        "method": method,
    }


def oracle_record(n: int, k: int, L: int, extrapolate: bool | None) -> dict:
    est = e_numeric(n, k, L, extrapolate)
    pi_power = PiValue.monomial(1, n).to_float()
    c = Fraction(est.value / pi_power).limit_denominator(ORACLE_MAX_DEN)
    return {
        "weight": 2 * n,
        "depth": k,
        "pi_power": 2 * n,
        "coeff_num": str(c.numerator),
        "coeff_den": str(c.denominator),
        "float_value": repr(est.value),
        "method": "oracle",
    }


def record_string(rec: dict) -> str:
    """Exact string form of a record, ``a/b*pi^m``."""
    value = PiValue.monomial(Fraction(int(rec["coeff_num"]), int(rec["coeff_den"])), rec["pi_power"] // 2)
    return str(value)


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        payload = records[0] if len(records) == 1 else records
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue().rstrip("\n")
    lines = []
    for rec in records:
        text = record_string(rec)
        if rec["method"] == "oracle":
            text = f"{rec['float_value']} (oracle)"
        if rec["method"] == "row_sum":
            lines.append(f"sum E({rec['weight']},*) = {text}")
        elif len(records) == 1:
            lines.append(text)
        else:
            lines.append(f"E({rec['weight']},{rec['depth']}) = {text}")
    return "\n".join(lines)


def cmd_value(args) -> int:
    n, k = args.n, args.k
    if n < 1 or k < 1 or k > n:
        raise UsageError(f"need 1 <= k <= n, got n={n}, k={k}")
    if args.method == "oracle":
        rec = oracle_record(n, k, args.limit, False if args.no_extrapolate else None)
    else:
        try:
            rec = exact_record(n, k, e_exact(n, k, args.method), args.method)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    print(render([rec], args.format))
    return 0


def cmd_table(args) -> int:
    if args.max < 1:
        raise UsageError(f"--max must be >= 1, got {args.max}")
    if args.method not in EXACT_METHODS:
        raise UsageError(f"table needs an exact method, got {args.method!r}")
    records = []
    try:
        for n, k, value in e_table(args.max, args.method):
            if k == 0:
                rec = exact_record(n, 0, value, "row_sum")
            else:
                rec = exact_record(n, k, value, args.method)
            records.append(rec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(render(records, args.format))
    return 0


def _suite_kwargs(name: str, args) -> dict:
    extrapolate = False if args.no_extrapolate else None
    if name in ("cross-route", "bernoulli-identity", "gessel-viennot"):
        return {} if args.max is None else {"n_max" if name != "gessel-viennot" else "k_max": args.max}
    if name in ("gfun", "pq-recurrence"):
        return {} if args.max is None else {"k_max": args.max}
    if name in ("infprod", "sfi", "nexp", "newton", "symfunc-zt"):
        return {} if args.max_weight is None else {"max_weight": args.max_weight}
    if name == "oracle":
        kw = {"L": args.limit, "extrapolate": extrapolate}
        if args.max is not None:
            kw["n_max"] = args.max
        return kw
    kw = {"L": args.limit, "extrapolate": extrapolate}
    if args.max is not None:
        kw["weights"] = tuple(range(6, 2 * args.max + 1, 2))
    return kw


def cmd_verify(args) -> int:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        try:
            report = suites.SUITES[name](**_suite_kwargs(name, args))
        except ValueError as exc:
            raise UsageError(f"{name}: {exc}") from None
        for entry in report.checked:
            params = " ".join(f"{key}={entry[key]}" for key in ("n", "k", "r", "i", "check", "identity") if key in entry)
            print(f"{'ok  ' if entry['passed'] else 'FAIL'} {name} {params}".rstrip())
            if not entry["passed"]:
                print(f"     {json.dumps(entry, default=str)}")
        print(report.summary())
        failed = failed or not report.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenzeta",
        description="Sums E(2n,k) of multiple zeta values with even arguments. "
        "Flags take n; output shows the weight 2n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    value = sub.add_parser("value", help="print E(2n,k) by one route")
    value.add_argument("--n", type=int, required=True, help="half the weight")
    value.add_argument("--k", type=int, required=True, help="depth")
    value.add_argument("--method", choices=METHODS, default="theorem1")
    value.add_argument("--format", choices=("human", "json", "csv"), default="human")
    value.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="oracle summation bound L")
    value.add_argument("--no-extrapolate", action="store_true")
    value.set_defaults(func=cmd_value)

    table = sub.add_parser("table", help="E(2n,k) for all k <= n <= max, with row sums")
    table.add_argument("--max", type=int, default=6, help="largest n")
    table.add_argument("--method", choices=EXACT_METHODS, default="theorem1")
    table.add_argument("--format", choices=("human", "json", "csv"), default="human")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run identity checks")
    verify.add_argument("--suite", choices=tuple(suites.SUITES) + ("all",), default="all")
    verify.add_argument("--max", type=int, default=None, help="bound on n (or k) for the suite")
    verify.add_argument("--max-weight", type=int, default=None, help="weight bound for symmetric-function suites")
    verify.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="oracle summation bound L")
    verify.add_argument("--no-extrapolate", action="store_true")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"evenzeta: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
