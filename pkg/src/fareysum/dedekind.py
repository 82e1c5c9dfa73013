"""Dedekind sums, evaluated exactly.

s(a, b) is the classical sawtooth-product sum over k = 1..b, and
S(a, b) = 12 s(a, b) is the normalized form used everywhere else in the
package.  The direct summation is kept as a test oracle with an O(b) cost
cap; the fast path runs the two-term reciprocity down a Euclidean chain in
O(log b) exact rational steps and agrees with the oracle bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

NAIVE_LIMIT_DEFAULT = 10 ** 6


def sawtooth(t: Fraction | int) -> Fraction:
    """((t)): t - floor(t) - 1/2 for non-integer t, and 0 for integer t."""
    t = Fraction(t)
    if t.denominator == 1:
        return Fraction(0)
    return t - (t.numerator // t.denominator) - Fraction(1, 2)


def dedekind_naive(a: int, b: int, limit: int = NAIVE_LIMIT_DEFAULT) -> Fraction:
    """s(a, b) by direct summation; refuses b beyond `limit`.

    For b not dividing x, ((x/b)) = (2(x mod b) - b) / (2b), so the whole
    sum is an integer over the common denominator 4b^2.
    """
    if b < 1:
        raise ValueError("b must be a positive integer")
    if b > limit:
        raise ValueError(f"direct summation refused: b={b} exceeds limit={limit}")
    total = 0
    m = 0  # a*k mod b, updated incrementally
    for k in range(1, b):
        m = (m + a) % b
        if m:
            total += (2 * k - b) * (2 * m - b)
    return Fraction(total, 4 * b * b)


def dedekind_fast(a: int, b: int) -> Fraction:
    """s(a, b) in O(log b) exact rational operations.

    Imprimitive input reduces first via s(ag, bg) = s(a, b); the Euclidean
    chain then applies s(a, b) = -s(b mod a, a) - 1/4 + (a^2 + b^2 + 1)/(12ab),
    which preserves gcd(a, b) = 1 down to the base case s(0, 1) = 0.
    """
    if b < 1:
        raise ValueError("b must be a positive integer")
    a %= b
    if a == 0:
        return Fraction(0)
    g = gcd(a, b)
    a, b = a // g, b // g
    total = Fraction(0)
    sign = 1
    while a > 0:
        total += Fraction(sign * (a * a + b * b + 1 - 3 * a * b), 12 * a * b)
        sign = -sign
        a, b = b % a, a
    return total


@dataclass(frozen=True)
class DedekindValue:
    """A normalized Dedekind sum S(a, b) = 12 s(a, b) with its arguments."""

    value: Fraction
    a: int
    b: int


def normalized(a: int, b: int) -> DedekindValue:
    """S(a, b) as an exact rational, via the fast path."""
    return DedekindValue(12 * dedekind_fast(a, b), a, b)
