"""The Petersson-Knopp decomposition of a normalized Dedekind sum.

For every n >= 1 the identity

    sum over r | n, 0 <= j < r of  S((n/r) a + j b, r b)  =  sigma(n) S(a, b)

holds unconditionally.  Relative to Farey data (c, d), each term carries the
gcds k = ((n/r) a + j b, r b) and m = ((n/r) c + j d, r d), a reduced
quadruple (a', b', c', d') with q' = a'd' - b'c' = n q / (k m), and the
expected value (m^2 / n) E(a, b).  Under the exact premises checked by
`farey.satisfies_theorem1_premises`, every reduced quadruple is itself a
Farey neighbour and every term is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dedekind import dedekind_fast
from .farey import FareyContext, PremiseError, theorem1_premise_failure
from .numtheory import divisors, sigma

N_LIMIT = 10 ** 4


@dataclass(frozen=True)
class KnoppTerm:
    """One (r, j) term of a decomposition."""

    r: int
    j: int
    k: int  # gcd((n/r) a + j b, r b)
    m: int  # gcd((n/r) c + j d, r d)
    reduced: tuple[int, int, int, int]  # (a', b', c', d')
    sum_value: Fraction  # S[r, j]
    expected: Fraction  # E[r, j] = (m^2 / n) E(a, b)
    q_prime: int  # a'd' - b'c'


@dataclass(frozen=True)
class Decomposition:
    """All sigma(n) terms of S(a, b) relative to the Farey data (c, d)."""

    n: int
    a: int
    b: int
    c: int
    d: int
    q: int  # ad - bc
    base_sum: Fraction  # S(a, b)
    base_expected: Fraction  # E(a, b) = b / (d q)
    terms: tuple[KnoppTerm, ...]  # ordered by (r ascending, j ascending)


def decompose(
    a: int, b: int, c: int, d: int, n: int, require_theorem1: bool = False
) -> Decomposition:
    """Materialize every (r, j) term eagerly, in (r, j) lexicographic order.

    The identity needs nothing beyond b, d >= 1, gcd(c, d) = 1 and ad != bc,
    so arbitrary bases are accepted; `require_theorem1` opts in to the exact
    premise check and raises PremiseError naming the failing inequality.
    Each term is a pure function of (a, b, c, d, n, r, j), so the list is
    deterministic however the terms are evaluated.
    """
    if b < 1 or d < 1:
        raise ValueError("b and d must be positive integers")
    if not 1 <= n <= N_LIMIT:
        raise ValueError(f"n must lie in [1, {N_LIMIT}], got {n}")
    g = gcd(c, d)
    if g != 1:
        raise ValueError(f"c/d must be reduced: gcd({c}, {d}) = {g}")
    q = a * d - b * c
    if q == 0:
        raise ValueError("degenerate base: ad = bc")
    if require_theorem1:
        failure = theorem1_premise_failure(b, c, d, a, n)
        if failure is not None:
            raise PremiseError(failure)
    base_sum = 12 * dedekind_fast(a, b)
    base_expected = Fraction(b, d * q)
    terms = []
    for r in divisors(n):
        nr = n // r
        for j in range(r):
            num_a = nr * a + j * b
            num_c = nr * c + j * d
            rb = r * b
            rd = r * d
            k = gcd(num_a, rb)
            m = gcd(num_c, rd)
            reduced = (num_a // k, rb // k, num_c // m, rd // m)
            sum_value = 12 * dedekind_fast(num_a, rb)
            expected = Fraction(m * m, n) * base_expected
            q_prime = reduced[0] * reduced[3] - reduced[1] * reduced[2]
            terms.append(KnoppTerm(r, j, k, m, reduced, sum_value, expected, q_prime))
    return Decomposition(n, a, b, c, d, q, base_sum, base_expected, tuple(terms))


def decompose_context(
    ctx: FareyContext, n: int, require_theorem1: bool = False
) -> Decomposition:
    """Decompose a validated neighbour context."""
    return decompose(ctx.a, ctx.b, ctx.c, ctx.d, n, require_theorem1)


def identity_discrepancy(dec: Decomposition) -> Fraction:
    """sum of S[r, j] minus sigma(n) S(a, b); zero exactly when the identity holds."""
    total = sum((t.sum_value for t in dec.terms), Fraction(0))
    return total - sigma(dec.n) * dec.base_sum


def verify_identity(dec: Decomposition) -> bool:
    """Exact check of the decomposition identity (true for any correct build)."""
    return identity_discrepancy(dec) == 0


def deviation_profile(dec: Decomposition) -> list[tuple[int, int, int, Fraction]]:
    """Per-term (r, j, m, |S[r,j]/E[r,j] - 1|), in the decomposition's order."""
    out = []
    for t in dec.terms:
        if t.expected == 0:
            raise ValueError(f"expected value is zero at (r={t.r}, j={t.j})")
        out.append((t.r, t.j, t.m, abs(t.sum_value / t.expected - 1)))
    return out


def three_term_residual(ctx: FareyContext) -> Fraction:
    """S(a,b) - b/(dq) - S(c,d) - d/(bq) - q/(db) + 3.

    By the three-term relation this equals S(t, q) for some integer t
    determined by the context, so the caller may rely on |result| < q.
    """
    b, c, d, a, q = ctx.b, ctx.c, ctx.d, ctx.a, ctx.q
    s_ab = 12 * dedekind_fast(a, b)
    s_cd = 12 * dedekind_fast(c, d)
    return (
        s_ab
        - Fraction(b, d * q)
        - s_cd
        - Fraction(d, b * q)
        - Fraction(q, d * b)
        + 3
    )
