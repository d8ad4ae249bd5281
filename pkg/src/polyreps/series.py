"""Dense truncated formal power series with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import DomainError, format_exact


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool) or not isinstance(c, int):
        # floats would silently lose exactness
        raise TypeError(f"series coefficients must be int or Fraction, got {type(c).__name__}")
    return Fraction(c)


def _scaled_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = math.lcm(den, c.denominator)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class TruncatedSeries:
    """A power series modulo q^(N+1), stored as the coefficient list c[0..N].

    Instances are immutable.  Binary operations truncate to the smaller of
    the two orders.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_to_fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise DomainError(f"truncation order must be >= 0, got {order}")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise DomainError("a truncated series needs at least one coefficient")
        self._coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([0], order)

    @classmethod
    def monomial(cls, coeff, exponent: int, order: int) -> TruncatedSeries:
        cs = [0] * (order + 1)
        if exponent <= order:
            cs[exponent] = coeff
        return cls(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, i):
        return self._coeffs[i]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[format_exact(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self._coeffs):
            c = format_exact(c)
            if i == 0:
                terms.append(c)
            elif i == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{i}")
        return " + ".join(terms) + f" (mod q^{self.order + 1})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-c for c in self._coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(self._coeffs[i] + other._coeffs[i] for i in range(n + 1))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def scale(self, c) -> TruncatedSeries:
        c = _to_fraction(c)
        return TruncatedSeries(c * x for x in self._coeffs)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, j: int) -> TruncatedSeries:
        return power(self, j)

    def log(self) -> TruncatedSeries:
        return log(self)

    def exp(self) -> TruncatedSeries:
        return exp(self)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(order(a), order(b)).

    Both operands are cleared to a common integer denominator first, so the
    O(N^2) inner loop runs on Python ints; one Fraction per output
    coefficient is built at the end.
    """
    n = min(a.order, b.order)
    xs, da = _scaled_ints(a.coeffs[: n + 1])
    ys, db = _scaled_ints(b.coeffs[: n + 1])
    # walk the sparser operand in the outer loop
    if sum(1 for x in xs if x) > sum(1 for y in ys if y):
        xs, ys = ys, xs
    out = [0] * (n + 1)
    for i, x in enumerate(xs):
        if not x:
            continue
        for k in range(n + 1 - i):
            y = ys[k]
            if y:
                out[i + k] += x * y
    den = da * db
    if den == 1:
        return TruncatedSeries(out)
    return TruncatedSeries(Fraction(c, den) for c in out)


def power(a: TruncatedSeries, j: int) -> TruncatedSeries:
    """a**j by repeated multiplication; a**0 is the series 1."""
    if isinstance(j, bool) or not isinstance(j, int) or j < 0:
        raise DomainError(f"exponent must be a nonnegative integer, got {j!r}")
    result = TruncatedSeries.one(a.order)
    for _ in range(j):
        result = mul(result, a)
    return result


def log(a: TruncatedSeries) -> TruncatedSeries:
    """Logarithm of a series with constant term 1.

    Uses n*L_n = n*a_n - sum_{m=1}^{n-1} m*L_m*a_{n-m}.
    """
    if a[0] != 1:
        raise DomainError(f"log needs constant term 1, got {format_exact(a[0])}")
    n_max = a.order
    cs = a.coeffs
    out = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = n * cs[n]
        for m in range(1, n):
            if out[m] and cs[n - m]:
                acc -= m * out[m] * cs[n - m]
        out[n] = acc / n
    return TruncatedSeries(out)


def exp(a: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with constant term 0, from E' = a' E."""
    if a[0] != 0:
        raise DomainError(f"exp needs constant term 0, got {format_exact(a[0])}")
    n_max = a.order
    cs = a.coeffs
    out = [Fraction(0)] * (n_max + 1)
    out[0] = Fraction(1)
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for m in range(1, n + 1):
            if cs[m] and out[n - m]:
                acc += m * cs[m] * out[n - m]
        out[n] = acc / n
    return TruncatedSeries(out)
