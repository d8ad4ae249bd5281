import pytest
from hypothesis import given, strategies as st

from polyreps.exactnum import DomainError
from polyreps.polygonal import (
    PolygonalSpec,
    index_range,
    polygonal_number,
    polygonal_values,
    theta_series,
    triple_product_series,
)
from polyreps.series import TruncatedSeries


def naive_product(s, order):
    """Expand the infinite product with plain dict polynomials (no series code)."""
    v = s - 2
    poly = {0: 1}
    exps = []
    for j in range(order + 1):
        exps += [(1, v * j + 1), (1, v * j + v - 1), (-1, v * (j + 1))]
    for sign, e in exps:
        if e > order:
            continue
        nxt = dict(poly)
        for k, c in poly.items():
            if k + e <= order:
                nxt[k + e] = nxt.get(k + e, 0) + sign * c
        poly = nxt
    return [poly.get(i, 0) for i in range(order + 1)]


def test_spec_validation():
    with pytest.raises(DomainError):
        PolygonalSpec(2)
    assert PolygonalSpec(7).v == 5


@pytest.mark.parametrize("s, n, expected", [(4, 3, 9), (5, -2, 7), (6, -1, 3), (3, 4, 10), (8, -1, 5)])
def test_polygonal_number_examples(s, n, expected):
    assert polygonal_number(PolygonalSpec(s), n) == expected


@given(st.integers(3, 40))
def test_small_index_values(s):
    spec = PolygonalSpec(s)
    assert polygonal_number(spec, 0) == 0
    assert polygonal_number(spec, 1) == 1
    assert polygonal_number(spec, -1) == s - 3


@given(st.integers(3, 30), st.integers(-200, 200))
def test_values_nonnegative_integers(s, n):
    f = polygonal_number(PolygonalSpec(s), n)
    assert f >= 0
    assert 2 * f == (s - 2) * n * n - (s - 4) * n


@pytest.mark.parametrize("s, bound, expected", [(4, 9, (-3, 3)), (5, 7, (-2, 2)), (3, 0, (-1, 0))])
def test_index_range_examples(s, bound, expected):
    assert index_range(PolygonalSpec(s), bound) == expected


@given(st.integers(3, 20), st.integers(0, 300))
def test_index_range_is_tight(s, bound):
    spec = PolygonalSpec(s)
    lo, hi = index_range(spec, bound)
    assert polygonal_number(spec, lo - 1) > bound
    assert polygonal_number(spec, hi + 1) > bound
    # every index within a wide window with value <= bound lies in [lo, hi]
    inside = [n for n in range(-60, 61) if polygonal_number(spec, n) <= bound]
    assert min(inside) >= lo and max(inside) <= hi


def test_theta_examples():
    assert theta_series(PolygonalSpec(4), 4) == TruncatedSeries([1, 2, 0, 0, 2])
    assert theta_series(PolygonalSpec(6), 6) == TruncatedSeries([1, 1, 0, 1, 0, 0, 1])
    assert theta_series(PolygonalSpec(3), 1) == TruncatedSeries([2, 2])


@pytest.mark.parametrize("s", range(3, 13))
def test_theta_coefficients(s):
    g = theta_series(PolygonalSpec(s), 60)
    assert all(c.denominator == 1 and c >= 0 for c in g)
    assert g[0] == (2 if s == 3 else 1)
    if s >= 4:
        assert g[1] == (2 if s == 4 else 1)


def test_triple_product_examples():
    assert triple_product_series(PolygonalSpec(4), 4) == theta_series(PolygonalSpec(4), 4)
    assert list(triple_product_series(PolygonalSpec(5), 10)) == naive_product(5, 10)
    assert triple_product_series(PolygonalSpec(5), 10) == theta_series(PolygonalSpec(5), 10)
    for s in (4, 7, 11):
        assert triple_product_series(PolygonalSpec(s), 0) == TruncatedSeries([1])


def test_triple_product_rejects_s3():
    with pytest.raises(DomainError):
        triple_product_series(PolygonalSpec(3), 5)


@pytest.mark.parametrize("s", range(4, 13))
def test_triple_product_equals_theta(s):
    spec = PolygonalSpec(s)
    assert list(triple_product_series(spec, 50)) == naive_product(s, 50)
    assert triple_product_series(spec, 50) == theta_series(spec, 50)


def test_polygonal_values_pentagonal():
    assert polygonal_values(PolygonalSpec(5), 40) == [0, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40]
