"""Divisor-sum sides of the identities and their specialized corollary forms."""

from __future__ import annotations

from fractions import Fraction

from .exactnum import DomainError, divisors, is_odd_prime, sigma


def _check_mv(m: int, v: int) -> None:
    if v < 2:
        raise DomainError(f"v must be >= 2, got {v}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")


def delta1(m: int, v: int) -> int:
    _check_mv(m, v)
    if v == 2:
        return 2 if m % 2 == 1 else 0
    return 1 if m % v in (1, v - 1) else 0


def delta2(m: int, v: int) -> int:
    _check_mv(m, v)
    return 1 if m % v == 0 else 0


def _sign(d: int) -> int:
    return -1 if d % 2 else 1


def divisor_lhs(n: int, s: int) -> Fraction:
    """sum_{d|n} (1/d) ((-1)^d delta1(n/d, s-2) + delta2(n/d, s-2))."""
    if s < 4:
        raise DomainError(f"divisor_lhs needs s >= 4, got {s}")
    v = s - 2
    total = Fraction(0)
    for d in divisors(n):
        m = n // d
        weight = _sign(d) * delta1(m, v) + delta2(m, v)
        if weight:
            total += Fraction(weight, d)
    return total


def jha_square_lhs(n: int) -> Fraction:
    """sum over odd d | n of 2(-1)^n / d."""
    return sum((Fraction(2 * _sign(n), d) for d in divisors(n) if d % 2), Fraction(0))


def jha_triangular_lhs(n: int) -> Fraction:
    """sum over d | n of (1 + 2(-1)^d) / d."""
    return sum((Fraction(1 + 2 * _sign(d), d) for d in divisors(n)), Fraction(0))


def pentagonal_lhs(n: int) -> Fraction:
    """The s = 5 corollary written with explicit residue classes of n/d mod 3."""
    total = Fraction(0)
    for d in divisors(n):
        r = (n // d) % 3
        if r in (1, 2):
            total += Fraction(_sign(d), d)
        else:
            total += Fraction(1, d)
    return total


def check_prime_pair(n: int, p: int) -> None:
    if not is_odd_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    if n < 1 or n % p:
        raise DomainError(f"p = {p} does not divide n = {n}")
    if n % (p * p) == 0:
        raise DomainError(f"p^2 = {p * p} divides n = {n}")


def prime_corollary_rhs_value(n: int, p: int) -> Fraction:
    """sigma(n)/n - 2/p if n/p = +-1 mod p, else sigma(n)/n - 1/p."""
    check_prime_pair(n, p)
    base = Fraction(sigma(n), n)
    if (n // p) % p in (1, p - 1):
        return base - Fraction(2, p)
    return base - Fraction(1, p)


def reciprocal_divisor_sum_except(n: int, p: int) -> Fraction:
    """sum_{d|n, d != p} 1/d, evaluated term by term."""
    return sum((Fraction(1, d) for d in divisors(n) if d != p), Fraction(0))
