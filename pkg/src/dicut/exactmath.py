"""Rational brackets for irrational powers.

Guarantees like ``w**0.6 / 24`` are irrational in general. We certify them
with dyadic rationals ``g`` checked by exact integer-power comparisons, e.g.
``g**5 <= w**3`` proves ``g <= w**(3/5)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .graph_core import to_rational

BISECTION_STEPS = 64

Number = Union[int, Fraction, str]


def _bracket(x: Fraction, p: int, q: int, steps: int) -> tuple[Fraction, Fraction]:
    if x < 0:
        raise ValueError(f"power of a negative number: {x}")
    if p <= 0 or q <= 0:
        raise ValueError("exponent p/q must be positive")
    target = x ** p
    lo, hi = Fraction(0), max(Fraction(1), x)
    # x**(p/q) <= max(1, x) whenever p <= q; widen otherwise
    while hi ** q < target:
        hi *= 2
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mid ** q <= target:
            lo = mid
        else:
            hi = mid
    return lo, hi


def power_lower(x: Number, p: int, q: int, steps: int = BISECTION_STEPS) -> Fraction:
    """Dyadic g with g**q <= x**p, i.e. g <= x**(p/q), within 2**-steps of it."""
    x = to_rational(x)
    lo, _ = _bracket(x, p, q, steps)
    return lo


def power_upper(x: Number, p: int, q: int, steps: int = BISECTION_STEPS) -> Fraction:
    """Dyadic g with g**q >= x**p, i.e. g >= x**(p/q)."""
    x = to_rational(x)
    lo, hi = _bracket(x, p, q, steps)
    return lo if lo ** q == x ** p else hi


def pow_three_fifths_lower(w: Number) -> Fraction:
    return power_lower(w, 3, 5)


def sqrt_lower(x: Number) -> Fraction:
    return power_lower(x, 1, 2)


def sqrt_upper(x: Number) -> Fraction:
    return power_upper(x, 1, 2)


def at_least_power(a: Number, x: Number, p: int, q: int) -> bool:
    """Exact test of ``a >= x**(p/q)`` for a, x >= 0."""
    a, x = to_rational(a), to_rational(x)
    if a < 0:
        return False
    return a ** q >= x ** p
