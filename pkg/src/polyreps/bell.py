"""Partial Bell polynomials at the Taylor coefficients of G_s, and the
logarithmic polynomials built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import DomainError, binomial, factorial
from .polygonal import PolygonalSpec, theta_series


@dataclass(frozen=True)
class TaylorCoeffs:
    """g[m] = G_s^{(m)}(0) = m! * (q^m coefficient of G_s), m = 0..n_max."""

    spec: PolygonalSpec
    g: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.g) - 1

    def args(self, n: int) -> tuple[int, ...]:
        """(g_1, ..., g_n), the argument list for B_{n,k}."""
        if n > self.n_max:
            raise DomainError(f"Taylor coefficients only computed up to {self.n_max}, need {n}")
        return self.g[1 : n + 1]


def taylor_coeffs(spec: PolygonalSpec, n_max: int) -> TaylorCoeffs:
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    theta = theta_series(spec, n_max)
    return TaylorCoeffs(spec, tuple(factorial(m) * int(c) for m, c in enumerate(theta)))


class BellTable:
    """Memoized B_{n,k}(x_1, x_2, ...) for one fixed argument list.

    Uses B_{n,k} = sum_{m=1}^{n-k+1} C(n-1, m-1) x_m B_{n-m,k-1}.
    """

    def __init__(self, x: Sequence):
        self.x = tuple(Fraction(c) for c in x)
        self._memo: dict[tuple[int, int], Fraction] = {}

    def __call__(self, n: int, k: int) -> Fraction:
        if n < 0 or k < 0:
            raise DomainError(f"B_(n,k) needs n, k >= 0, got ({n}, {k})")
        if k == 0:
            return Fraction(1 if n == 0 else 0)
        if n < k:
            return Fraction(0)
        if len(self.x) < n - k + 1:
            raise DomainError(f"B_({n},{k}) needs {n - k + 1} arguments, got {len(self.x)}")
        return self._eval(n, k)

    def _eval(self, n: int, k: int) -> Fraction:
        key = (n, k)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if k == 0:
            value = Fraction(1 if n == 0 else 0)
        elif n < k:
            value = Fraction(0)
        else:
            # evaluate smaller k first to keep recursion depth at O(k)
            value = Fraction(0)
            x = self.x
            for m in range(1, n - k + 2):
                if x[m - 1]:
                    value += binomial(n - 1, m - 1) * x[m - 1] * self._eval(n - m, k - 1)
        self._memo[key] = value
        return value


def bell_partial(n: int, k: int, x: Sequence) -> Fraction:
    return BellTable(x)(n, k)


def log_polynomial(n: int, g: TaylorCoeffs | Sequence, table: BellTable | None = None) -> Fraction:
    """L_n = sum_{k=1}^n (-1)^k (k-1)! B_{n,k}(g_1, ..., g_n).

    With this sign, L_n / n! is the *negated* q^n coefficient of log G_s,
    which is exactly the divisor sum on the other side of the identity.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if table is None:
        x = g.args(n) if isinstance(g, TaylorCoeffs) else tuple(g)[:n]
        table = BellTable(x)
    total = Fraction(0)
    for k in range(1, n + 1):
        b = table(n, k)
        if b:
            total += (-1) ** k * factorial(k - 1) * b
    return total
