"""Representation counts t_{s,j}(n): ordered j-tuples of integer indices
whose generalized s-gonal values sum to n, i.e. the q^n coefficient of
G_s(q)^j.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .exactnum import DomainError
from .polygonal import PolygonalSpec, polygonal_indices, theta_series
from .series import TruncatedSeries, mul

BRUTEFORCE_MAX_J = 5
BRUTEFORCE_MAX_N = 60


@dataclass(frozen=True)
class RepTable:
    spec: PolygonalSpec
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def j_max(self) -> int:
        return len(self.rows) - 1

    def covers(self, j_max: int, n_max: int) -> bool:
        return j_max <= self.j_max and n_max <= self.n_max

    def count(self, j: int, n: int) -> int:
        if j < 0 or n < 0:
            raise DomainError(f"j and n must be nonnegative, got j={j}, n={n}")
        if not self.covers(j, n):
            raise DomainError(
                f"table for s={self.spec.s} covers j <= {self.j_max}, n <= {self.n_max}; "
                f"asked for j={j}, n={n}"
            )
        return self.rows[j][n]


def build_table(spec: PolygonalSpec, j_max: int, n_max: int) -> RepTable:
    """rows[j] = coefficients of G_s^j mod q^(n_max+1), for j = 0..j_max."""
    if j_max < 0 or n_max < 0:
        raise DomainError(f"j_max and n_max must be >= 0, got {j_max}, {n_max}")
    theta = theta_series(spec, n_max)
    current = TruncatedSeries.one(n_max)
    rows = [tuple(int(c) for c in current)]
    for _ in range(j_max):
        current = mul(current, theta)
        rows.append(tuple(int(c) for c in current))
    return RepTable(spec, n_max, tuple(rows))


_cache: dict[int, RepTable] = {}
_cache_lock = threading.Lock()


def table_for(spec: PolygonalSpec, j_max: int, n_max: int) -> RepTable:
    """Memoized table per s, grown to cover the largest request seen so far."""
    with _cache_lock:
        table = _cache.get(spec.s)
        if table is not None and table.covers(j_max, n_max):
            return table
        if table is not None:
            j_max = max(j_max, table.j_max)
            n_max = max(n_max, table.n_max)
        table = build_table(spec, j_max, n_max)
        _cache[spec.s] = table
        return table


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def rep_count(spec: PolygonalSpec, j: int, n: int) -> int:
    if j < 0 or n < 0:
        raise DomainError(f"j and n must be nonnegative, got j={j}, n={n}")
    return table_for(spec, j, n).count(j, n)


def rep_count_bruteforce(
    spec: PolygonalSpec,
    j: int,
    n: int,
    max_j: int = BRUTEFORCE_MAX_J,
    max_n: int = BRUTEFORCE_MAX_N,
) -> int:
    """Count index tuples directly by recursive enumeration.

    Deliberately small-scale: refuses j > max_j or n > max_n.
    """
    if j < 0 or n < 0:
        raise DomainError(f"j and n must be nonnegative, got j={j}, n={n}")
    if j > max_j or n > max_n:
        raise DomainError(f"brute force limited to j <= {max_j}, n <= {max_n}; got j={j}, n={n}")
    values = sorted(f for _, f in polygonal_indices(spec, n))

    def count(slots: int, remaining: int) -> int:
        if slots == 0:
            return 1 if remaining == 0 else 0
        total = 0
        for f in values:
            if f > remaining:
                break
            total += count(slots - 1, remaining - f)
        return total

    return count(j, n)
