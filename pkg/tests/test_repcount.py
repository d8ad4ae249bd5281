import itertools

import pytest

from polyreps.exactnum import DomainError
from polyreps.polygonal import PolygonalSpec, theta_series
from polyreps.repcount import (
    build_table,
    clear_cache,
    rep_count,
    rep_count_bruteforce,
    table_for,
)


def product_count(s, j, n):
    """Count j-tuples from itertools.product over a fixed index window."""
    spec_vals = [((s - 2) * x * x - (s - 4) * x) // 2 for x in range(-12, 13)]
    return sum(1 for t in itertools.product(spec_vals, repeat=j) if sum(t) == n)


@pytest.mark.parametrize("s, j, n, expected", [(4, 1, 1, 2), (4, 2, 2, 4), (4, 0, 0, 1), (7, 5, 0, 1)])
def test_rep_count_examples(s, j, n, expected):
    assert rep_count(PolygonalSpec(s), j, n) == expected


@pytest.mark.parametrize("s, j, n, expected", [(5, 1, 5, 1), (6, 2, 4, 2), (4, 3, 0, 1)])
def test_bruteforce_examples(s, j, n, expected):
    assert rep_count_bruteforce(PolygonalSpec(s), j, n) == expected


def test_bruteforce_matches_product_enumeration():
    for s in (4, 5, 6):
        for j in (1, 2, 3):
            for n in range(0, 13):
                assert rep_count_bruteforce(PolygonalSpec(s), j, n) == product_count(s, j, n)


def test_bruteforce_refuses_large():
    with pytest.raises(DomainError):
        rep_count_bruteforce(PolygonalSpec(4), 6, 3)
    with pytest.raises(DomainError):
        rep_count_bruteforce(PolygonalSpec(4), 2, 61)


def test_build_table_examples():
    t = build_table(PolygonalSpec(4), 2, 2)
    assert t.rows[0] == (1, 0, 0)
    assert t.rows[2] == (1, 4, 4)
    assert list(t.rows[1]) == [int(c) for c in theta_series(PolygonalSpec(4), 2)]


@pytest.mark.parametrize("s", [4, 5, 6, 8])
def test_series_matches_bruteforce(s):
    spec = PolygonalSpec(s)
    for j in range(0, 5):
        for n in range(0, 31):
            assert rep_count(spec, j, n) == rep_count_bruteforce(spec, j, n)


def test_row_recurrence_and_nonnegativity():
    t = build_table(PolygonalSpec(5), 6, 25)
    for j in range(1, 7):
        conv = [sum(t.rows[j - 1][a] * t.rows[1][n - a] for a in range(n + 1)) for n in range(26)]
        assert list(t.rows[j]) == conv
        assert all(c >= 0 for c in t.rows[j])


def test_table_cache_grows():
    clear_cache()
    spec = PolygonalSpec(9)
    small = table_for(spec, 2, 5)
    assert table_for(spec, 1, 3) is small
    big = table_for(spec, 4, 10)
    assert big.covers(4, 10)
    assert big.rows[2][:6] == small.rows[2]


def test_count_outside_table():
    t = build_table(PolygonalSpec(4), 1, 3)
    with pytest.raises(DomainError):
        t.count(2, 1)
