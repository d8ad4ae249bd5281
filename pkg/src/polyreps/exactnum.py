"""Exact integer/rational helpers and elementary arithmetic functions.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and Fraction keeps itself in lowest terms with
a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import isqrt

ExactInteger = int
ExactRational = Fraction


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def _check_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order (trial division)."""
    _check_int("n", n)
    if n <= 0:
        raise DomainError(f"divisors() needs n >= 1, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sigma(n: int) -> int:
    """Sum of the positive divisors of ``n``."""
    return sum(divisors(n))


def binomial(n: int, k: int) -> int:
    _check_int("n", n)
    _check_int("k", k)
    if n < 0 or k < 0:
        raise DomainError(f"binomial() needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def factorial(n: int) -> int:
    _check_int("n", n)
    if n < 0:
        raise DomainError(f"factorial() needs n >= 0, got {n}")
    return math.factorial(n)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, isqrt(p) + 1))


def is_odd_prime(p: int) -> bool:
    return p != 2 and is_prime(p)


def format_exact(x: int | Fraction) -> str:
    """Canonical string: ``"p/q"`` in lowest terms, ``"p"`` when q = 1."""
    if isinstance(x, Fraction):
        return str(x)
    return str(int(x))


def parse_exact(text: str) -> Fraction:
    return Fraction(text.strip())
