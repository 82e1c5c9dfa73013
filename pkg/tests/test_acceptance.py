"""Acceptance suite: one test per pinned criterion, one PASS/FAIL line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines
while the suite executes.  Two sub-checks fail by design of the pinned
targets themselves and are documented where they fail:

  * criterion 3 pins S(3504214, 31537789) to 25537.432, but the exact value
    is 25573.432... (two digits transposed in the target; both evaluators
    and the direct-summation oracle agree on the exact value);
  * criterion 6 pins the first 500-b window above 10^9 to 97.9 +/- 2.0 for
    the M1 < 0.01 share, but that deterministic window sits at 93.1 while
    the full 10000-b run reproduces 97.9 exactly.
"""

import random
import time
from fractions import Fraction
from functools import lru_cache
from math import gcd

from conftest import draw_context
from fareysum.counting import verify_theorem2
from fareysum.dedekind import dedekind_fast, dedekind_naive
from fareysum.experiments import (
    B_MODE_RANDOM,
    RULED_OUT_NONE,
    ExperimentConfig,
    run_example,
    run_scan,
    write_scan_csv,
    write_scan_json,
)
from fareysum.farey import farey_context, is_farey_neighbour
from fareysum.knopp import decompose, three_term_residual, verify_identity


def _report(num: int, ok: bool, detail: str) -> bool:
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'}: {detail}", flush=True)
    return ok


@lru_cache(maxsize=1)
def _identity_corpus():
    """500 randomized decompositions: a, b <= 1e5, gcd(a, b) = 1, n <= 24."""
    rng = random.Random(20250809)
    out = []
    while len(out) < 500:
        b = rng.randint(1, 10 ** 5)
        a = rng.randint(1, 10 ** 5)
        if gcd(a, b) != 1:
            continue
        d = rng.randint(1, 12)
        c = rng.randint(0, d - 1)
        if gcd(c, d) != 1 or a * d == b * c:
            continue
        n = rng.randint(1, 24)
        out.append(decompose(a, b, c, d, n))
    return tuple(out)


def test_criterion_1_oracle_equivalence():
    t0 = time.time()
    mismatches = 0
    for b in range(2, 301):
        for a in range(1, b):
            if dedekind_fast(a, b) != dedekind_naive(a, b):
                mismatches += 1
    elapsed = time.time() - t0
    ok = mismatches == 0 and elapsed < 10
    assert _report(
        1, ok, f"fast == naive on all pairs up to b=300, exact; "
               f"mismatches={mismatches}, {elapsed:.1f}s (budget 10s)"
    )


def test_criterion_2_knopp_identity():
    t0 = time.time()
    bad = sum(1 for dec in _identity_corpus() if not verify_identity(dec))
    elapsed = time.time() - t0
    ok = bad == 0 and elapsed < 30
    assert _report(
        2, ok, f"sum of terms equals sigma(n)*S(a,b) exactly on 500 randomized "
               f"decompositions; failures={bad}, {elapsed:.1f}s (budget 30s)"
    )


def test_criterion_3_example_regression():
    t0 = time.time()
    report = run_example()
    elapsed = time.time() - t0
    checks = [
        ("S within 0.001 of 25537.432", abs(float(report.sum_value) - 25537.432) <= 0.001),
        ("E within 0.001 of 25578.093", abs(float(report.expected) - 25578.093) <= 0.001),
        ("term count 28", len(report.decomposition.terms) == 28),
        ("max deviation 0.04659 +/- 0.00001 at (6, 1)",
         abs(float(report.max_deviation) - 0.04659) <= 0.00001 and report.max_at == (6, 1)),
        ("mean deviation 0.0060 +/- 0.0001", abs(float(report.mean_deviation) - 0.0060) <= 0.0001),
        ("under 1s", elapsed < 1),
    ]
    failed = [name for name, good in checks if not good]
    _report(3, not failed, f"worked-example regression; failed sub-checks: {failed or 'none'}")
    assert not failed, (
        f"failed: {failed}; exact S(3504214, 31537789) = {float(report.sum_value):.3f} "
        f"(the 25537.432 target transposes two digits of the exact value, which the "
        f"direct-summation oracle confirms as 25573.432)"
    )


def test_criterion_4_counting_sweep():
    t0 = time.time()
    report = verify_theorem2(200, 50)
    elapsed = time.time() - t0
    ok = report.ok and elapsed < 60
    assert _report(
        4, ok, f"brute = formula = n/m over {report.rows_checked} cells "
               f"(n<=200, d<=50); violations={len(report.violations)}, "
               f"{elapsed:.1f}s (budget 60s)"
    )


def test_criterion_5_q_prime_relation():
    bad = 0
    for dec in _identity_corpus():
        for t in dec.terms:
            if t.k * t.m * t.q_prime != dec.n * dec.q:
                bad += 1
    assert _report(
        5, bad == 0, f"k*m*q' = n*q exactly for every term of the identity corpus; "
                     f"failures={bad}"
    )


def test_criterion_6_table_reproduction():
    t0 = time.time()
    results = []
    for b_start in (10 ** 8 + 1, 10 ** 9 + 1):
        cfg = ExperimentConfig(n=12, d=9, c_list=(1,), b_start=b_start, b_count=500)
        agg = run_scan(cfg).aggregates[0]
        results.append(
            {
                "m1_lt": float(agg.percent(agg.m1_lt_t1_lo)),
                "m1_ge": float(agg.percent(agg.m1_ge_t1_hi)),
                "m2_lt": float(agg.percent(agg.m2_lt_t2_lo)),
            }
        )
    elapsed = time.time() - t0
    low, high = results
    checks = [
        ("1e8 M1<0.01 within 3.0 of 93.4", abs(low["m1_lt"] - 93.4) <= 3.0),
        ("1e8 M1>=0.05 within 1.5 of 1.2", abs(low["m1_ge"] - 1.2) <= 1.5),
        ("1e8 M2<0.01 within 5.0 of 73.6", abs(low["m2_lt"] - 73.6) <= 5.0),
        ("1e9 M1<0.01 within 2.0 of 97.9", abs(high["m1_lt"] - 97.9) <= 2.0),
        ("under 5min", elapsed < 300),
    ]
    failed = [name for name, good in checks if not good]
    _report(
        6, not failed,
        f"desk-scale tables: 1e8 gives {low['m1_lt']:.2f}/{low['m1_ge']:.2f}/{low['m2_lt']:.2f}, "
        f"1e9 gives M1<0.01 = {high['m1_lt']:.2f}; {elapsed:.1f}s; failed: {failed or 'none'}",
    )
    assert not failed, (
        f"failed: {failed}; the first 500-b window above 1e9 deterministically holds "
        f"{high['m1_lt']:.2f}% M1<0.01 for the floor-minus-1-then-minus-2 choice "
        f"(sliding 500-b windows range 92-100; the full 10000-b run gives 97.90)"
    )


def test_criterion_7_three_term_residual():
    t0 = time.time()
    rng = random.Random(7070)
    bad = 0
    for _ in range(200):
        b, c, d, a = draw_context(rng, 100, 10 ** 5)
        ctx = farey_context(b, c, d, a)
        residual = three_term_residual(ctx)
        in_bound = abs(residual) < ctx.q
        matched = any(12 * dedekind_fast(u, ctx.q) == residual for u in range(ctx.q))
        if not (in_bound and matched):
            bad += 1
    elapsed = time.time() - t0
    ok = bad == 0 and elapsed < 30
    assert _report(
        7, ok, f"|residual| < q and residual in {{S(u, q)}} for 200 random contexts "
               f"(b <= 1e5); failures={bad}, {elapsed:.1f}s (budget 30s)"
    )


def test_criterion_8_theorem1_conclusions():
    t0 = time.time()
    rng = random.Random(8080)
    bad = 0
    for _ in range(200):
        n = rng.randint(1, 12)
        b, c, d, a = draw_context(rng, 10 ** 5, 10 ** 8, n=n, d_hi=4)
        dec = decompose(a, b, c, d, n, require_theorem1=True)
        for t in dec.terms:
            ap, bp, cp, dp = t.reduced
            if not is_farey_neighbour(bp, cp, dp, ap):
                bad += 1
            if not t.sum_value > 0:
                bad += 1
            if t.expected != Fraction(t.m * t.m, n) * dec.base_expected:
                bad += 1
    elapsed = time.time() - t0
    ok = bad == 0 and elapsed < 60
    assert _report(
        8, ok, f"every term of 200 premise-passing decompositions is a neighbour "
               f"with positive sum and expected = m^2/n * E; failures={bad}, "
               f"{elapsed:.1f}s (budget 60s)"
    )


def test_criterion_9_determinism(tmp_path):
    cfg = ExperimentConfig(
        n=12, d=9, c_list=(1, 2), b_start=10 ** 7 + 19, b_count=40,
        b_mode=B_MODE_RANDOM, rng_seed=20250809,
    )
    outputs = []
    for tag in ("one", "two"):
        report = run_scan(cfg)
        csv_path = tmp_path / f"{tag}.csv"
        json_path = tmp_path / f"{tag}.json"
        write_scan_csv(report, str(csv_path))
        write_scan_json(report, str(json_path))
        outputs.append((csv_path.read_bytes(), json_path.read_bytes()))
    identical = outputs[0] == outputs[1]
    retained = sum(1 for r in report.records if r.ruled_out_reason == RULED_OUT_NONE)
    assert _report(
        9, identical, f"two scans with the identical config produced byte-identical "
                      f"CSV and JSON ({retained} retained records)"
    )
