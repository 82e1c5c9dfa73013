"""Worked-example and table reproductions.

A scan walks a range of moduli b, picks a neighbour a just below the
admissible window's upper edge for each (b, c), decomposes, and aggregates
the mean relative deviations

    M1 = (1 / sigma(n)) * sum over all terms of |S[r,j]/E[r,j] - 1|
    M2 = (1 / n)        * sum over the m = 1 terms of the same

against configurable thresholds.  All record values stay exact rationals;
rounding happens only when a report is rendered, so two runs of the same
config produce byte-identical CSV and JSON.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt

from .farey import satisfies_theorem1_premises
from .knopp import Decomposition, decompose, deviation_profile
from .numtheory import sigma

GENERATOR_ID = "splitmix64"

B_MODE_CONSECUTIVE = "consecutive"
B_MODE_RANDOM = "random"

RULED_OUT_NONE = "none"
RULED_OUT_GCD = "gcd_failed"
RULED_OUT_PREMISES = "premises_failed"

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Seeded 64-bit generator (splitmix64) for reproducible b draws."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi), rejection-sampled to avoid modulo bias."""
        span = hi - lo
        if span < 1:
            raise ValueError("empty range")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + u % span


def format_decimal(value: Fraction, sig_digits: int = 12) -> str:
    """Decimal rendering of an exact rational, round-half-even."""
    if sig_digits < 1:
        raise ValueError("sig_digits must be >= 1")
    with localcontext() as ctx:
        ctx.prec = sig_digits
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def format_fixed(value: Fraction, places: int) -> str:
    """Fixed-point rendering with exact round-half-even at `places` decimals."""
    scaled = value * 10 ** places
    q, r = divmod(scaled.numerator, scaled.denominator)
    double = 2 * r
    if double > scaled.denominator or (double == scaled.denominator and q % 2):
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    if places == 0:
        return f"{sign}{q}"
    return f"{sign}{q // 10 ** places}.{q % 10 ** places:0{places}d}"


@dataclass(frozen=True)
class ExperimentConfig:
    """Scan parameters; thresholds default to the table rows (0.05/0.01, 0.1/0.01)."""

    n: int
    d: int
    c_list: tuple[int, ...]
    b_start: int
    b_count: int
    b_mode: str = B_MODE_CONSECUTIVE
    rng_seed: int = 0
    t1_hi: Fraction = Fraction(5, 100)
    t1_lo: Fraction = Fraction(1, 100)
    t2_hi: Fraction = Fraction(10, 100)
    t2_lo: Fraction = Fraction(1, 100)

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise ValueError("n and d must be positive integers")
        if self.b_start < 1 or self.b_count < 0:
            raise ValueError("b_start must be >= 1 and b_count >= 0")
        if self.b_mode not in (B_MODE_CONSECUTIVE, B_MODE_RANDOM):
            raise ValueError(f"unknown b_mode: {self.b_mode!r}")
        if not self.c_list:
            raise ValueError("c_list must not be empty")
        for c in self.c_list:
            if not 0 <= c < self.d or gcd(c, self.d) != 1:
                raise ValueError(f"c = {c} must lie in [0, {self.d}) and be prime to d")
        for t in (self.t1_hi, self.t1_lo, self.t2_hi, self.t2_lo):
            if t <= 0:
                raise ValueError("thresholds must be positive")
        object.__setattr__(self, "c_list", tuple(self.c_list))


@dataclass(frozen=True)
class ScanRecord:
    """Outcome for one (b, c) cell; a, m1, m2 are absent when ruled out."""

    b: int
    c: int
    a: int | None
    m1: Fraction | None
    m2: Fraction | None
    ruled_out_reason: str


@dataclass(frozen=True)
class ScanAggregate:
    """Per-c tallies over retained records."""

    c: int
    retained: int
    ruled_out: int
    m1_ge_t1_hi: int
    m1_lt_t1_lo: int
    m2_ge_t2_hi: int
    m2_lt_t2_lo: int

    def percent(self, count: int) -> Fraction | None:
        """count / retained as an exact percentage; None for an empty cell."""
        if self.retained == 0:
            return None
        return Fraction(100 * count, self.retained)


@dataclass(frozen=True)
class ScanReport:
    """All records in (c, b) order plus per-c aggregates, with the config echoed."""

    config: ExperimentConfig
    generator: str
    records: tuple[ScanRecord, ...]
    aggregates: tuple[ScanAggregate, ...]


def select_neighbour(b: int, c: int, d: int, n: int) -> tuple[int | None, str]:
    """The scan's a-choice: floor(b*c/d + alpha/n) minus 1, else minus 2.

    The floor is exact: b*c/d + alpha/n = (b c n d + sqrt(b d)) / (n d^2),
    and replacing sqrt(b d) by isqrt(b d) cannot move the floor across an
    integer.  Returns (a, "none"), or (None, reason) when both candidates
    fail the coprimality or premise checks.
    """
    if b < 1 or d < 1 or n < 1:
        raise ValueError("b, d, n must be positive integers")
    f = (b * c * n * d + isqrt(b * d)) // (n * d * d)
    saw_coprime = False
    for a in (f - 1, f - 2):
        if gcd(a, b) != 1:
            continue
        saw_coprime = True
        if satisfies_theorem1_premises(b, c, d, a, n):
            return a, RULED_OUT_NONE
    return None, (RULED_OUT_PREMISES if saw_coprime else RULED_OUT_GCD)


def mean_deviations(dec: Decomposition) -> tuple[Fraction, Fraction]:
    """(M1, M2): mean deviation over all sigma(n) terms / over the n terms with m = 1."""
    devs = deviation_profile(dec)
    ones = [v for (_, _, m, v) in devs if m == 1]
    if len(ones) != dec.n:
        raise ValueError(
            f"{len(ones)} terms have m = 1, expected exactly n = {dec.n}"
        )
    m1 = sum((v for (_, _, _, v) in devs), Fraction(0)) / sigma(dec.n)
    m2 = sum(ones, Fraction(0)) / dec.n
    return m1, m2


def scan_b_values(config: ExperimentConfig) -> list[int]:
    """The moduli a scan visits; random mode draws b_count values uniformly
    from [b_start, 10 * b_start), i.e. the same order of magnitude."""
    if config.b_mode == B_MODE_CONSECUTIVE:
        return list(range(config.b_start, config.b_start + config.b_count))
    rng = SplitMix64(config.rng_seed)
    return [
        rng.randrange(config.b_start, 10 * config.b_start)
        for _ in range(config.b_count)
    ]


def _scan_cell(args: tuple[ExperimentConfig, int, int]) -> ScanRecord:
    config, c, b = args
    a, reason = select_neighbour(b, c, config.d, config.n)
    if a is None:
        return ScanRecord(b, c, None, None, None, reason)
    dec = decompose(a, b, c, config.d, config.n, require_theorem1=True)
    m1, m2 = mean_deviations(dec)
    return ScanRecord(b, c, a, m1, m2, RULED_OUT_NONE)


def _aggregate(config: ExperimentConfig, records: tuple[ScanRecord, ...]) -> tuple[ScanAggregate, ...]:
    out = []
    for c in config.c_list:
        rows = [rec for rec in records if rec.c == c]
        kept = [rec for rec in rows if rec.ruled_out_reason == RULED_OUT_NONE]
        out.append(
            ScanAggregate(
                c=c,
                retained=len(kept),
                ruled_out=len(rows) - len(kept),
                m1_ge_t1_hi=sum(1 for r in kept if r.m1 >= config.t1_hi),
                m1_lt_t1_lo=sum(1 for r in kept if r.m1 < config.t1_lo),
                m2_ge_t2_hi=sum(1 for r in kept if r.m2 >= config.t2_hi),
                m2_lt_t2_lo=sum(1 for r in kept if r.m2 < config.t2_lo),
            )
        )
    return tuple(out)


def run_scan(config: ExperimentConfig, jobs: int = 1) -> ScanReport:
    """Scan every (c, b) cell; records and aggregates come out in (c, b)
    order whatever the execution schedule, so reports are deterministic."""
    bs = scan_b_values(config)
    cells = [(config, c, b) for c in config.c_list for b in bs]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(cells) // (8 * jobs))
            records = tuple(pool.map(_scan_cell, cells, chunksize=chunk))
    else:
        records = tuple(_scan_cell(cell) for cell in cells)
    return ScanReport(config, GENERATOR_ID, records, _aggregate(config, records))


SCAN_CSV_HEADER = "b,c,a,ruled_out,m1,m2"


def scan_csv_lines(report: ScanReport) -> list[str]:
    """CSV lines: header, records in (c, b) order, then `#agg,` footer rows
    (c, retained, ruled_out, then the four percentages at one decimal)."""
    lines = [SCAN_CSV_HEADER]
    for rec in report.records:
        a = "" if rec.a is None else str(rec.a)
        m1 = "" if rec.m1 is None else format_decimal(rec.m1)
        m2 = "" if rec.m2 is None else format_decimal(rec.m2)
        lines.append(f"{rec.b},{rec.c},{a},{rec.ruled_out_reason},{m1},{m2}")
    for agg in report.aggregates:
        pcts = [
            agg.percent(agg.m1_ge_t1_hi),
            agg.percent(agg.m1_lt_t1_lo),
            agg.percent(agg.m2_ge_t2_hi),
            agg.percent(agg.m2_lt_t2_lo),
        ]
        rendered = ["" if p is None else format_fixed(p, 1) for p in pcts]
        lines.append(
            f"#agg,{agg.c},{agg.retained},{agg.ruled_out}," + ",".join(rendered)
        )
    return lines


def write_scan_csv(report: ScanReport, path: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(scan_csv_lines(report)) + "\n")


def scan_report_to_dict(report: ScanReport) -> dict:
    """JSON-ready view; exact rationals are rendered to 12 significant digits."""
    config = report.config
    return {
        "config": {
            "n": config.n,
            "d": config.d,
            "c_list": list(config.c_list),
            "b_start": config.b_start,
            "b_count": config.b_count,
            "b_mode": config.b_mode,
            "rng_seed": config.rng_seed,
            "thresholds": {
                "t1_hi": format_decimal(config.t1_hi),
                "t1_lo": format_decimal(config.t1_lo),
                "t2_hi": format_decimal(config.t2_hi),
                "t2_lo": format_decimal(config.t2_lo),
            },
            "generator": report.generator,
        },
        "records": [
            {
                "b": rec.b,
                "c": rec.c,
                "a": rec.a,
                "m1": None if rec.m1 is None else format_decimal(rec.m1),
                "m2": None if rec.m2 is None else format_decimal(rec.m2),
                "ruled_out_reason": rec.ruled_out_reason,
            }
            for rec in report.records
        ],
        "aggregates": [
            {
                "c": agg.c,
                "retained": agg.retained,
                "ruled_out": agg.ruled_out,
                "m1_ge_t1_hi": agg.m1_ge_t1_hi,
                "m1_lt_t1_lo": agg.m1_lt_t1_lo,
                "m2_ge_t2_hi": agg.m2_ge_t2_hi,
                "m2_lt_t2_lo": agg.m2_lt_t2_lo,
                "pct_m1_ge_t1_hi": _pct_str(agg, agg.m1_ge_t1_hi),
                "pct_m1_lt_t1_lo": _pct_str(agg, agg.m1_lt_t1_lo),
                "pct_m2_ge_t2_hi": _pct_str(agg, agg.m2_ge_t2_hi),
                "pct_m2_lt_t2_lo": _pct_str(agg, agg.m2_lt_t2_lo),
            }
            for agg in report.aggregates
        ],
    }


def _pct_str(agg: ScanAggregate, count: int) -> str | None:
    p = agg.percent(count)
    return None if p is None else format_fixed(p, 1)


def write_scan_json(report: ScanReport, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(scan_report_to_dict(report), fh, indent=2, sort_keys=True)
        fh.write("\n")


EXAMPLE_B = 31537789
EXAMPLE_C = 1
EXAMPLE_D = 9
EXAMPLE_A = 3504214
EXAMPLE_N = 12


@dataclass(frozen=True)
class ExampleReport:
    """The fully expanded worked example (b=31537789, c=1, d=9, a=3504214, n=12)."""

    decomposition: Decomposition
    deviations: list[tuple[int, int, int, Fraction]]
    max_deviation: Fraction
    max_at: tuple[int, int]
    mean_deviation: Fraction

    @property
    def sum_value(self) -> Fraction:
        return self.decomposition.base_sum

    @property
    def expected(self) -> Fraction:
        return self.decomposition.base_expected


def run_example() -> ExampleReport:
    """Decompose the worked example and collect its deviation statistics."""
    dec = decompose(EXAMPLE_A, EXAMPLE_B, EXAMPLE_C, EXAMPLE_D, EXAMPLE_N, require_theorem1=True)
    devs = deviation_profile(dec)
    r, j, _, value = max(devs, key=lambda t: t[3])
    mean = sum((v for (_, _, _, v) in devs), Fraction(0)) / len(devs)
    return ExampleReport(dec, devs, value, (r, j), mean)
