"""Counting the multiplicities m(r, j) = gcd((n/r) c + j d, r d).

A(n, m) is the number of pairs (r, j) with r | n, 0 <= j < r whose
multiplicity equals m.  Three independent routes are kept side by side:
direct enumeration, the divisor-sum formula

    A(n, m) = sum over m' | r | n', (n/r, d) = delta of
              (r/m')_{d'} phi((r/m')_{d'}^perp)

with delta = (m, d), n' = n/delta, m' = m/delta, d' = d/delta, and the
closed form n/m.  The sweep cross-checks all three over configurable
bounds; its report serializes as CSV.
"""

from __future__ import annotations

import csv
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .numtheory import d_part, divisors, euler_phi

BRUTE_LIMIT = 10 ** 4
SWEEP_MAX_N_DEFAULT = 200
SWEEP_MAX_D_DEFAULT = 50


@dataclass(frozen=True)
class CountingQuery:
    """Parameters (n, m, c, d) of one multiplicity count, with m | n."""

    n: int
    m: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise ValueError("n and d must be positive integers")
        if self.m < 1 or self.n % self.m != 0:
            raise ValueError(f"m = {self.m} must be a positive divisor of n = {self.n}")
        g = gcd(self.c, self.d)
        if g != 1:
            raise ValueError(f"c/d must be reduced: gcd({self.c}, {self.d}) = {g}")
        if not 0 <= self.c < self.d:
            raise ValueError(f"c = {self.c} must lie in [0, d = {self.d})")


@dataclass(frozen=True)
class CountingResult:
    """The same count by all three routes; they must agree."""

    brute_force: int
    lemma2_formula: int
    closed_form: int


def lemma1_count(r: int, d: int, s: int) -> int:
    """#{k mod r : gcd(s + k d, r) = 1} = (r)_d phi((r)_d^perp), gcd(s, d) = 1."""
    if r < 1 or d < 1:
        raise ValueError("r and d must be positive integers")
    g = gcd(s, d)
    if g != 1:
        raise ValueError(f"s must be prime to d: gcd({s}, {d}) = {g}")
    part = d_part(r, d)
    return part * euler_phi(r // part)


def multiplicity_histogram(n: int, c: int, d: int) -> Counter:
    """Tally of m(r, j) over all r | n, 0 <= j < r (sigma(n) pairs in total)."""
    counts: Counter = Counter()
    for r in divisors(n):
        base = (n // r) * c
        rd = r * d
        counts.update(gcd(base + j * d, rd) for j in range(r))
    return counts


def count_A_brute(query: CountingQuery) -> int:
    """A(n, m) by direct enumeration of all sigma(n) pairs (r, j)."""
    if query.n > BRUTE_LIMIT:
        raise ValueError(f"enumeration refused: n = {query.n} exceeds {BRUTE_LIMIT}")
    return multiplicity_histogram(query.n, query.c, query.d)[query.m]


def count_A_formula(query: CountingQuery) -> int:
    """A(n, m) by the divisor-sum formula (independent of c)."""
    n, m, d = query.n, query.m, query.d
    delta = gcd(m, d)
    n1, m1, d1 = n // delta, m // delta, d // delta
    total = 0
    for r in divisors(n1):
        if r % m1 == 0 and gcd(n // r, d) == delta:
            rm = r // m1
            part = d_part(rm, d1)
            total += part * euler_phi(rm // part)
    return total


def counting_result(query: CountingQuery) -> CountingResult:
    """All three counts for one query."""
    return CountingResult(
        brute_force=count_A_brute(query),
        lemma2_formula=count_A_formula(query),
        closed_form=query.n // query.m,
    )


def verify_lemma3(n1: int, n2: int, m: int, c: int, d: int) -> bool:
    """Multiplicativity: A(n1 n2, m) = A(n1, (m, n1)) A(n2, (m, n2))."""
    if n1 < 1 or n2 < 1:
        raise ValueError("n1 and n2 must be positive integers")
    g = gcd(n1, n2)
    if g != 1:
        raise ValueError(f"n1 and n2 must be coprime: gcd = {g}")
    whole = count_A_formula(CountingQuery(n1 * n2, m, c, d))
    part1 = count_A_formula(CountingQuery(n1, gcd(m, n1), c, d))
    part2 = count_A_formula(CountingQuery(n2, gcd(m, n2), c, d))
    return whole == part1 * part2


@dataclass(frozen=True)
class SweepRow:
    """One (n, m, d, c) check of brute force vs formula vs n/m."""

    n: int
    m: int
    d: int
    c: int
    brute: int
    formula: int
    closed_form: int
    ok: bool


@dataclass(frozen=True)
class SweepReport:
    """Outcome of a full cross-check sweep; `violations` is expected empty."""

    max_n: int
    max_d: int
    rows_checked: int
    violations: tuple[SweepRow, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _coprime_range(d: int) -> list[int]:
    return [c for c in range(d) if gcd(c, d) == 1]


def _sweep_cells(n: int, max_d: int) -> Iterator[tuple[int, int, int, int, int, int]]:
    """(m, d, c, brute, formula, closed_form) for one n, in (d, c, m) order."""
    divs = divisors(n)
    for d in range(1, max_d + 1):
        cs = _coprime_range(d)
        # the formula does not depend on c, so compute it once per (n, d, m)
        formulas = {m: count_A_formula(CountingQuery(n, m, cs[0], d)) for m in divs}
        for c in cs:
            hist = multiplicity_histogram(n, c, d)
            for m in divs:
                yield m, d, c, hist[m], formulas[m], n // m


def sweep_rows(max_n: int, max_d: int) -> Iterator[SweepRow]:
    """Every check row, ordered by (n, d, c, m)."""
    for n in range(1, max_n + 1):
        for m, d, c, brute, formula, closed in _sweep_cells(n, max_d):
            yield SweepRow(n, m, d, c, brute, formula, closed, brute == formula == closed)


def _sweep_worker(args: tuple[int, int]) -> tuple[int, list[SweepRow]]:
    n, max_d = args
    checked = 0
    bad = []
    for m, d, c, brute, formula, closed in _sweep_cells(n, max_d):
        checked += 1
        if not brute == formula == closed:
            bad.append(SweepRow(n, m, d, c, brute, formula, closed, False))
    return checked, bad


def verify_theorem2(
    max_n: int = SWEEP_MAX_N_DEFAULT,
    max_d: int = SWEEP_MAX_D_DEFAULT,
    jobs: int = 1,
) -> SweepReport:
    """Cross-check brute = formula = n/m over all n <= max_n, m | n, d <= max_d,
    c in [0, d) prime to d.  Violations are collected in (n, d, c, m) order.
    """
    if max_n < 1 or max_d < 1:
        raise ValueError("sweep bounds must be positive")
    checked = 0
    violations: list[SweepRow] = []
    tasks = [(n, max_d) for n in range(1, max_n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_sweep_worker, tasks, chunksize=8)
            for count, bad in results:
                checked += count
                violations.extend(bad)
    else:
        for task in tasks:
            count, bad = _sweep_worker(task)
            checked += count
            violations.extend(bad)
    return SweepReport(max_n, max_d, checked, tuple(violations))


SWEEP_CSV_HEADER = ("n", "m", "d", "c", "brute", "formula", "closed_form", "ok")


def write_sweep_csv(path: str, rows: Iterable[SweepRow]) -> int:
    """Stream sweep rows to CSV; returns the number of rows written."""
    written = 0
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_CSV_HEADER)
        for row in rows:
            writer.writerow(
                [row.n, row.m, row.d, row.c, row.brute, row.formula, row.closed_form, int(row.ok)]
            )
            written += 1
    return written
