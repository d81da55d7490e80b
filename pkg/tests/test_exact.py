from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigsum import binomial, frac, gcd, sawtooth

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=997
)


def test_sawtooth_integers_vanish():
    for k in range(-5, 6):
        assert sawtooth(Fraction(k)) == 0
        assert sawtooth(k) == 0


@pytest.mark.parametrize(
    "x, expected",
    [
        (Fraction(1, 4), Fraction(-1, 4)),
        (Fraction(3, 4), Fraction(1, 4)),
        (Fraction(-1, 4), Fraction(1, 4)),
        (Fraction(7, 3), Fraction(-1, 6)),
        (Fraction(1, 2), Fraction(0)),
    ],
)
def test_sawtooth_values(x, expected):
    assert sawtooth(x) == expected


@given(rationals)
def test_sawtooth_odd(x):
    assert sawtooth(-x) == -sawtooth(x)


@given(rationals, st.integers(min_value=-5, max_value=5))
def test_sawtooth_periodic(x, k):
    assert sawtooth(x + k) == sawtooth(x)


@given(rationals)
def test_sawtooth_range(x):
    assert Fraction(-1, 2) < sawtooth(x) < Fraction(1, 2)


@given(rationals)
def test_frac_in_unit_interval(x):
    f = frac(x)
    assert 0 <= f < 1
    assert (x - f).denominator == 1


def test_frac_values():
    assert frac(Fraction(7, 3)) == Fraction(1, 3)
    assert frac(Fraction(-1, 4)) == Fraction(3, 4)
    assert frac(3) == 0


@given(st.integers(min_value=0, max_value=60), st.integers(min_value=-3, max_value=63))
def test_binomial_pascal(n, k):
    assert binomial(n + 1, k) == binomial(n, k) + binomial(n, k - 1)


def test_binomial_edges():
    assert binomial(5, 0) == 1
    assert binomial(5, 5) == 1
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_gcd():
    assert gcd(12, 18) == 6
    assert gcd(7, 0) == 7
    assert gcd(1, 1) == 1
