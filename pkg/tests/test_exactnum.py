from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyreps.exactnum import (
    DomainError,
    binomial,
    divisors,
    factorial,
    format_exact,
    is_odd_prime,
    parse_exact,
    sigma,
)


def trial_division(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def pascal_rows(n_max):
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


@pytest.mark.parametrize("n, expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (7, [1, 7])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


@pytest.mark.parametrize("bad", [0, -3])
def test_divisors_domain(bad):
    with pytest.raises(DomainError):
        divisors(bad)
    with pytest.raises(DomainError):
        sigma(bad)


def test_divisors_and_sigma_against_enumeration():
    for n in range(1, 501):
        ds = trial_division(n)
        assert divisors(n) == ds
        assert sigma(n) == sum(ds)


def test_sigma_examples():
    assert sigma(1) == 1
    assert sigma(12) == 28
    for p in (2, 3, 5, 7, 11, 13, 97):
        assert sigma(p) == p + 1


def test_binomial_examples():
    assert binomial(9, 0) == 1
    assert binomial(5, 2) == pascal_rows(5)[5][2] == 10
    assert binomial(3, 5) == 0
    with pytest.raises(DomainError):
        binomial(-1, 0)
    with pytest.raises(DomainError):
        binomial(4, -2)


def test_pascal_recurrence():
    rows = pascal_rows(60)
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
            assert binomial(n, k) == rows[n][k]


def test_large_values_exact():
    c = binomial(500, 250)
    assert c == binomial(499, 249) + binomial(499, 250)
    assert c % 2 == 0 and c.bit_length() > 490
    assert factorial(60) == factorial(59) * 60


def test_odd_primes():
    assert [p for p in range(20) if is_odd_prime(p)] == [3, 5, 7, 11, 13, 17, 19]


def test_serialization():
    assert format_exact(Fraction(6, 4)) == "3/2"
    assert format_exact(Fraction(-4, 2)) == "-2"
    assert format_exact(7) == "7"
    assert parse_exact("-26/9") == Fraction(-26, 9)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a


@given(rationals)
def test_normal_form(a):
    assert a.denominator > 0
    assert Fraction(a.numerator, a.denominator) == a
    assert parse_exact(format_exact(a)) == a
    assert format_exact(parse_exact(format_exact(a))) == format_exact(a)
