"""Exact integer arithmetic helpers.

Everything in the bound/sieve pipeline is integer-valued; square roots
only ever appear inside comparisons or floors, so they are resolved with
``math.isqrt`` and sign-aware squaring instead of floating point.
"""

from __future__ import annotations

from math import isqrt

__all__ = [
    "is_square",
    "lt_sqrt",
    "le_sqrt",
    "floor_sub_sqrt_half",
    "floor_add_sqrt_div",
]


def is_square(d: int) -> bool:
    if d < 0:
        return False
    r = isqrt(d)
    return r * r == d


def lt_sqrt(a: int, d: int) -> bool:
    """Exact test ``a < sqrt(d)`` for integer a and d >= 0."""
    if d < 0:
        raise ValueError("negative radicand")
    return a < 0 or a * a < d


def le_sqrt(a: int, d: int) -> bool:
    """Exact test ``a <= sqrt(d)`` for integer a and d >= 0."""
    if d < 0:
        raise ValueError("negative radicand")
    return a <= 0 or a * a <= d


def floor_sub_sqrt_half(x: int, d: int) -> int:
    """Exact ``floor((x - sqrt(d)) / 2)`` for integers x and d >= 0.

    When d is not a perfect square, ``x - sqrt(d)`` lies strictly between
    the consecutive integers ``x - isqrt(d) - 1`` and ``x - isqrt(d)``, and
    halving an open unit interval with integer endpoints cannot cross an
    integer, so flooring the lower endpoint is exact.
    """
    if d < 0:
        raise ValueError("negative radicand")
    r = isqrt(d)
    if r * r == d:
        return (x - r) >> 1
    return (x - r - 1) >> 1


def floor_add_sqrt_div(a: int, d: int, b: int) -> int:
    """Exact ``floor((a + sqrt(d)) / b)`` for integers a, d >= 0, b > 0.

    Same open-interval argument as :func:`floor_sub_sqrt_half`: no multiple
    of b can sit strictly between ``a + isqrt(d)`` and ``a + isqrt(d) + 1``.
    """
    if d < 0 or b <= 0:
        raise ValueError("need d >= 0 and b > 0")
    return (a + isqrt(d)) // b
