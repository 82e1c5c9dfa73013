"""Exact integer arithmetic and elementary multiplicative number theory.

Every value here is an int, a Fraction, or a tuple of those; floating point
never participates in a decision anywhere in the package.  Rational values
are `fractions.Fraction`, which keeps numerator and denominator in lowest
terms with a positive denominator after every operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Exact rational value type used throughout the package.
ExactRational = Fraction

# Trial-division wheel past 2 and 3: candidates 5, 7, 11, 13, ... step 2, 4, 2, 4, ...
_WHEEL = (2, 4)


def gcd(x: int, y: int) -> int:
    """Greatest common divisor of |x| and |y|; gcd(0, 0) == 0."""
    return math.gcd(x, y)


def isqrt(x: int) -> int:
    """Exact floor square root: isqrt(x)**2 <= x < (isqrt(x) + 1)**2."""
    if x < 0:
        raise ValueError("isqrt is undefined for negative integers")
    return math.isqrt(x)


def v_p(t: int, p: int) -> int:
    """p-exponent of t: the largest e such that p**e divides t (t != 0)."""
    if t == 0:
        raise ValueError("v_p(0) is undefined")
    if p < 2:
        raise ValueError("p must be a prime (>= 2)")
    t = abs(t)
    e = 0
    while t % p == 0:
        t //= p
        e += 1
    return e


@dataclass(frozen=True)
class FactoredNat:
    """A positive integer together with its prime factorization.

    `factors` lists (prime, exponent) pairs with strictly increasing primes
    and exponents >= 1; the product of prime**exponent equals `value`.
    """

    value: int
    factors: tuple[tuple[int, int], ...]


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> FactoredNat:
    """Factor n >= 1 by trial division (intended for n up to ~10**6)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    m = n
    factors = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    p, step = 5, 0
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += _WHEEL[step]
        step ^= 1
    if m > 1:
        factors.append((m, 1))
    return FactoredNat(n, tuple(factors))


def d_part(r: int, d: int) -> int:
    """Largest divisor of r composed only of primes that also divide d.

    Iterated gcd peeling: each pass moves every shared prime's full power
    out of r, so no factorization is needed.
    """
    if r < 1 or d < 1:
        raise ValueError("d_part expects positive integers")
    out = 1
    g = math.gcd(r, d)
    while g > 1:
        out *= g
        r //= g
        g = math.gcd(r, g)
    return out


def d_free_part(r: int, d: int) -> int:
    """Complementary divisor of d_part: the largest divisor of r coprime to d."""
    return r // d_part(r, d)


def euler_phi(n: int) -> int:
    """Euler's totient function."""
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def sigma(n: int) -> int:
    """Sum of the positive divisors of n."""
    total = 1
    for p, e in factorize(n).factors:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [q * p ** k for q in divs for k in range(e + 1)]
    return sorted(divs)
