"""Generalized s-gonal numbers and their theta generating functions."""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import DomainError
from .series import TruncatedSeries, mul


@dataclass(frozen=True, order=True)
class PolygonalSpec:
    s: int

    def __post_init__(self):
        if isinstance(self.s, bool) or not isinstance(self.s, int):
            raise DomainError(f"s must be an integer, got {self.s!r}")
        if self.s < 3:
            raise DomainError(f"s must be >= 3, got {self.s}")

    @property
    def v(self) -> int:
        """The modulus s - 2 used by the residue indicators."""
        return self.s - 2

    def require_theorem_range(self) -> None:
        if self.s < 4:
            raise DomainError(f"this operation needs s >= 4, got s = {self.s}")


def as_spec(s: int | PolygonalSpec) -> PolygonalSpec:
    return s if isinstance(s, PolygonalSpec) else PolygonalSpec(s)


def polygonal_number(spec: PolygonalSpec, n: int) -> int:
    """((s-2) n^2 - (s-4) n) / 2 for any integer n."""
    s = spec.s
    twice = (s - 2) * n * n - (s - 4) * n
    return twice // 2


def index_range(spec: PolygonalSpec, bound: int) -> tuple[int, int]:
    """Smallest [lo, hi] holding every index n with F_s(n) <= bound.

    F_s is nondecreasing in |n| on each side of 0, so we step outward until
    the value exceeds the bound.
    """
    if bound < 0:
        raise DomainError(f"bound must be >= 0, got {bound}")
    hi = 0
    while polygonal_number(spec, hi + 1) <= bound:
        hi += 1
    lo = 0
    while polygonal_number(spec, lo - 1) <= bound:
        lo -= 1
    return lo, hi


def polygonal_indices(spec: PolygonalSpec, bound: int) -> list[tuple[int, int]]:
    """(index, value) pairs with value <= bound, ordered by index."""
    lo, hi = index_range(spec, bound)
    pairs = [(n, polygonal_number(spec, n)) for n in range(lo, hi + 1)]
    return [(n, f) for n, f in pairs if f <= bound]


def polygonal_values(spec: PolygonalSpec, limit: int) -> list[int]:
    """Sorted distinct generalized s-gonal numbers not exceeding limit."""
    return sorted({f for _, f in polygonal_indices(spec, limit)})


def theta_series(spec: PolygonalSpec, order: int) -> TruncatedSeries:
    """G_s(q) = sum over n in Z of q^F_s(n), truncated at q^order.

    For s = 3 every triangular number is hit by two indices, so the
    coefficients are doubled (including the constant term).
    """
    if order < 0:
        raise DomainError(f"truncation order must be >= 0, got {order}")
    coeffs = [0] * (order + 1)
    for _, f in polygonal_indices(spec, order):
        coeffs[f] += 1
    return TruncatedSeries(coeffs)


def _two_term(sign: int, exponent: int, order: int) -> TruncatedSeries:
    cs = [0] * (order + 1)
    cs[0] = 1
    cs[exponent] += sign
    return TruncatedSeries(cs)


def triple_product_series(spec: PolygonalSpec, order: int) -> TruncatedSeries:
    """Expand prod_{j>=0} (1+q^{vj+1})(1+q^{vj+v-1})(1-q^{v(j+1)}), v = s-2.

    Factors whose exponent exceeds ``order`` are 1 modulo q^(order+1) and are
    skipped; the loop stops once all three exponents are out of range.
    """
    if spec.s < 4:
        raise DomainError("the product expansion is only set up for s >= 4")
    if order < 0:
        raise DomainError(f"truncation order must be >= 0, got {order}")
    v = spec.v
    result = TruncatedSeries.one(order)
    j = 0
    while True:
        factors = [(1, v * j + 1), (1, v * j + v - 1), (-1, v * (j + 1))]
        live = [(sign, e) for sign, e in factors if e <= order]
        if not live:
            break
        for sign, e in live:
            result = mul(_two_term(sign, e, order), result)
        j += 1
    return result
