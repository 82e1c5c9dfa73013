"""Command-line interface.

Subcommands:
  sum              exact S(a, b) as a fraction and a decimal
  decompose        full term table of a Petersson-Knopp decomposition
  verify-counting  cross-check sweep of the three multiplicity counts
  scan             deviation scan over a range of b, with CSV/JSON reports
  example          the built-in worked example (b=31537789, n=12)

Exit codes: 0 success, 1 invalid arguments, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, experiments, knopp
from .dedekind import dedekind_fast
from .experiments import format_decimal, format_fixed

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad arguments; remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _c_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="fareysum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum", help="print S(a, b) exactly and as a decimal")
    p_sum.add_argument("a", type=int)
    p_sum.add_argument("b", type=_positive)

    p_dec = sub.add_parser("decompose", help="print the (r, j) term table for S(a, b)")
    p_dec.add_argument("a", type=int)
    p_dec.add_argument("b", type=_positive)
    p_dec.add_argument("c", type=int)
    p_dec.add_argument("d", type=_positive)
    p_dec.add_argument("n", type=_positive)
    p_dec.add_argument("--require-theorem1", action="store_true")
    p_dec.add_argument("--json", action="store_true", help="emit the table as JSON")

    p_ver = sub.add_parser("verify-counting", help="run the counting cross-check sweep")
    p_ver.add_argument("--max-n", type=_positive, default=counting.SWEEP_MAX_N_DEFAULT)
    p_ver.add_argument("--max-d", type=_positive, default=counting.SWEEP_MAX_D_DEFAULT)
    p_ver.add_argument("--csv", metavar="PATH", help="also write every check row as CSV")
    p_ver.add_argument("--jobs", type=_positive, default=1)

    p_scan = sub.add_parser("scan", help="scan b values and aggregate deviation statistics")
    p_scan.add_argument("--n", type=_positive, required=True)
    p_scan.add_argument("--d", type=_positive, required=True)
    p_scan.add_argument("--c", type=_c_list, required=True, metavar="LIST")
    p_scan.add_argument("--b-start", type=_positive, required=True)
    p_scan.add_argument("--b-count", type=int, required=True)
    p_scan.add_argument("--random", action="store_true", help="draw b uniformly from [b_start, 10*b_start)")
    p_scan.add_argument("--seed", type=int, default=0, metavar="U64")
    p_scan.add_argument("--csv", metavar="PATH")
    p_scan.add_argument("--json", metavar="PATH")
    p_scan.add_argument("--jobs", type=_positive, default=1)

    sub.add_parser("example", help="reproduce the built-in worked example")
    return parser


def _cmd_sum(args) -> int:
    value = 12 * dedekind_fast(args.a, args.b)
    print(f"S({args.a}, {args.b}) = {value} ~ {format_decimal(value)}")
    return EXIT_OK


def _term_rows(dec) -> list[dict]:
    rows = []
    for t in dec.terms:
        deviation = None if t.expected == 0 else abs(t.sum_value / t.expected - 1)
        rows.append(
            {
                "r": t.r,
                "j": t.j,
                "k": t.k,
                "m": t.m,
                "a_prime": t.reduced[0],
                "b_prime": t.reduced[1],
                "c_prime": t.reduced[2],
                "d_prime": t.reduced[3],
                "sum_value": format_decimal(t.sum_value),
                "expected": format_decimal(t.expected),
                "deviation": None if deviation is None else format_decimal(deviation),
            }
        )
    return rows


def _cmd_decompose(args) -> int:
    dec = knopp.decompose(args.a, args.b, args.c, args.d, args.n, args.require_theorem1)
    rows = _term_rows(dec)
    if args.json:
        print(json.dumps({
            "n": dec.n, "a": dec.a, "b": dec.b, "c": dec.c, "d": dec.d, "q": dec.q,
            "base_sum": format_decimal(dec.base_sum),
            "base_expected": format_decimal(dec.base_expected),
            "terms": rows,
        }, indent=2))
        return EXIT_OK
    print(f"S({dec.a}, {dec.b}) = {format_decimal(dec.base_sum)}   "
          f"E = {format_decimal(dec.base_expected)}   q = {dec.q}   sigma-terms: {len(dec.terms)}")
    header = f"{'r':>5} {'j':>5} {'k':>5} {'m':>5} {'a_prime':>12} {'b_prime':>14} {'c_prime':>8} {'d_prime':>8} {'S[r,j]':>18} {'E[r,j]':>18} {'deviation':>14}"
    print(header)
    for row in rows:
        dev = row["deviation"] if row["deviation"] is not None else "-"
        print(f"{row['r']:>5} {row['j']:>5} {row['k']:>5} {row['m']:>5} "
              f"{row['a_prime']:>12} {row['b_prime']:>14} {row['c_prime']:>8} {row['d_prime']:>8} "
              f"{row['sum_value']:>18} {row['expected']:>18} {dev:>14}")
    return EXIT_OK


def _cmd_verify_counting(args) -> int:
    report = counting.verify_theorem2(args.max_n, args.max_d, jobs=args.jobs)
    if args.csv:
        counting.write_sweep_csv(args.csv, counting.sweep_rows(args.max_n, args.max_d))
        print(f"wrote {args.csv}")
    print(f"checked {report.rows_checked} (n, m, d, c) cells "
          f"up to n={report.max_n}, d={report.max_d}: "
          f"{len(report.violations)} violation(s)")
    for row in report.violations[:20]:
        print(f"  VIOLATION n={row.n} m={row.m} d={row.d} c={row.c}: "
              f"brute={row.brute} formula={row.formula} n/m={row.closed_form}")
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_scan(args) -> int:
    config = experiments.ExperimentConfig(
        n=args.n,
        d=args.d,
        c_list=args.c,
        b_start=args.b_start,
        b_count=args.b_count,
        b_mode=experiments.B_MODE_RANDOM if args.random else experiments.B_MODE_CONSECUTIVE,
        rng_seed=args.seed,
    )
    report = experiments.run_scan(config, jobs=args.jobs)
    if args.csv:
        experiments.write_scan_csv(report, args.csv)
        print(f"wrote {args.csv}")
    if args.json:
        experiments.write_scan_json(report, args.json)
        print(f"wrote {args.json}")
    print(f"{'c':>4} {'retained':>9} {'ruled_out':>10} "
          f"{'M1>=' + str(float(config.t1_hi)):>10} {'M1<' + str(float(config.t1_lo)):>10} "
          f"{'M2>=' + str(float(config.t2_hi)):>10} {'M2<' + str(float(config.t2_lo)):>10}")
    for agg in report.aggregates:
        pcts = [
            agg.percent(agg.m1_ge_t1_hi),
            agg.percent(agg.m1_lt_t1_lo),
            agg.percent(agg.m2_ge_t2_hi),
            agg.percent(agg.m2_lt_t2_lo),
        ]
        rendered = ["-" if p is None else format_fixed(p, 1) + "%" for p in pcts]
        print(f"{agg.c:>4} {agg.retained:>9} {agg.ruled_out:>10} "
              f"{rendered[0]:>10} {rendered[1]:>10} {rendered[2]:>10} {rendered[3]:>10}")
    return EXIT_OK


def _cmd_example(args) -> int:
    report = experiments.run_example()
    dec = report.decomposition
    print(f"b = {dec.b}, c = {dec.c}, d = {dec.d}, a = {dec.a}, n = {dec.n}, q = {dec.q}")
    print(f"S(a, b) = {dec.base_sum} ~ {format_decimal(dec.base_sum)}")
    print(f"E(a, b) = {dec.base_expected} ~ {format_decimal(dec.base_expected)}")
    print(f"terms: {len(dec.terms)}")
    print(f"{'r':>4} {'j':>4} {'m':>4} {'deviation':>16}")
    for r, j, m, value in report.deviations:
        print(f"{r:>4} {j:>4} {m:>4} {format_decimal(value, 6):>16}")
    r, j = report.max_at
    print(f"max deviation ~ {format_decimal(report.max_deviation, 6)} at (r={r}, j={j})")
    print(f"mean deviation ~ {format_decimal(report.mean_deviation, 6)}")
    return EXIT_OK


_COMMANDS = {
    "sum": _cmd_sum,
    "decompose": _cmd_decompose,
    "verify-counting": _cmd_verify_counting,
    "scan": _cmd_scan,
    "example": _cmd_example,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"fareysum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
