"""Farey points and Farey neighbours, decided by exact integer predicates.

alpha = sqrt(b / d^3) is never materialized as a number.  Every condition
involving it is rewritten as a polynomial inequality in b, d, n, q by
isolating the radical and squaring (with the sign precondition checked
first), so boundary cases are classified exactly.  With q = ad - bc:

    q/d <= alpha - 1      <=>  d (q + d)^2 <= b
    q/d <= alpha/n - 1    <=>  n^2 (q + d)^2 d <= b
    alpha >= n^(3/2) + n  <=>  L >= 0 and L^2 >= 4 d^6 n^5,
                               where L = b - d^3 n^2 (n + 1)

Only right-half neighbours (q > 0, hence S(a, b) > 0) are supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt


class PremiseError(ValueError):
    """A required exact inequality does not hold."""


def _validate_point(b: int, c: int, d: int) -> None:
    if d < 1:
        raise ValueError("d must be a positive integer")
    if b < 1:
        raise ValueError("b must be a positive integer")
    g = gcd(c, d)
    if g != 1:
        raise ValueError(f"c/d must be reduced: gcd({c}, {d}) = {g}")
    if d ** 3 >= b:
        raise ValueError(f"Farey order out of range: d^3 = {d ** 3} >= b = {b}")


@dataclass(frozen=True)
class FareyPoint:
    """The Farey point b*c/d for a reduced fraction c/d of order < b^(1/3)."""

    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.b < 4:
            raise ValueError("b must be >= 4")
        _validate_point(self.b, self.c, self.d)
        if not 0 <= self.c < self.d:
            raise ValueError(f"c = {self.c} must lie in [0, d = {self.d})")


@dataclass(frozen=True)
class FareyContext:
    """A Farey neighbour a of the point b*c/d, with q = ad - bc > 0."""

    point: FareyPoint
    a: int
    q: int

    @property
    def b(self) -> int:
        return self.point.b

    @property
    def c(self) -> int:
        return self.point.c

    @property
    def d(self) -> int:
        return self.point.d


def farey_context(b: int, c: int, d: int, a: int) -> FareyContext:
    """Build a validated neighbour context, normalizing c into [0, d).

    Shifting c by t*d moves the Farey point by t*b, so a shifts by the same
    multiple of b (harmless by periodicity of S); q is unchanged.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    t = c // d
    c -= t * d
    a -= t * b
    point = FareyPoint(b, c, d)
    g = gcd(a, b)
    if g != 1:
        raise ValueError(f"a must be prime to b: gcd({a}, {b}) = {g}")
    q = a * d - b * c
    if q <= 0:
        raise ValueError(f"a is not right of the Farey point: q = ad - bc = {q}")
    if d * (q + d) ** 2 > b:
        raise ValueError(
            f"a is outside the right half-interval: d(q+d)^2 = {d * (q + d) ** 2} > b = {b}"
        )
    return FareyContext(point, a, q)


def is_farey_neighbour(b: int, c: int, d: int, a: int) -> bool:
    """Exact test of 0 < a - b*c/d <= alpha - 1, i.e. q > 0 and d(q+d)^2 <= b.

    c is not required to lie in [0, d): reduced quadruples arising from
    decompositions may carry c >= d, and the predicate is unaffected.
    """
    _validate_point(b, c, d)
    g = gcd(a, b)
    if g != 1:
        raise ValueError(f"a must be prime to b: gcd({a}, {b}) = {g}")
    q = a * d - b * c
    return q > 0 and d * (q + d) ** 2 <= b


def expected_value(ctx: FareyContext) -> Fraction:
    """E(a, b) = b / (d q), the predicted size of S(a, b); always positive."""
    return Fraction(ctx.b, ctx.d * ctx.q)


def theorem1_premise_failure(b: int, c: int, d: int, a: int, n: int) -> str | None:
    """Name of the first failing premise inequality, or None if all hold."""
    _validate_point(b, c, d)
    if n < 1:
        raise ValueError("n must be a positive integer")
    g = gcd(a, b)
    if g != 1:
        raise ValueError(f"a must be prime to b: gcd({a}, {b}) = {g}")
    lhs = b - d ** 3 * n * n * (n + 1)
    if lhs < 0 or lhs * lhs < 4 * d ** 6 * n ** 5:
        return (
            "alpha lower bound fails: need b - d^3 n^2 (n+1) >= 0 and "
            f"(b - d^3 n^2 (n+1))^2 >= 4 d^6 n^5 (b={b}, d={d}, n={n})"
        )
    q = a * d - b * c
    if q <= 0:
        return f"strict positivity fails: q = ad - bc = {q} <= 0"
    if n * n * (q + d) ** 2 * d > b:
        return (
            "admissible window fails: n^2 (q+d)^2 d = "
            f"{n * n * (q + d) ** 2 * d} > b = {b} (q={q})"
        )
    return None


def satisfies_theorem1_premises(b: int, c: int, d: int, a: int, n: int) -> bool:
    """Exact test of alpha >= n^(3/2) + n together with 0 < q/d <= alpha/n - 1."""
    return theorem1_premise_failure(b, c, d, a, n) is None


def max_neighbour_distance(b: int, d: int, n: int = 1) -> int:
    """Largest q with n^2 (q+d)^2 d <= b, or 0 if no positive q qualifies.

    In q/d units this is the admissible window width alpha/n - 1 rounded
    down to a multiple of 1/d.
    """
    if b < 1 or d < 1 or n < 1:
        raise ValueError("b, d, n must be positive integers")
    q = isqrt(b // (n * n * d)) - d
    return max(q, 0)
