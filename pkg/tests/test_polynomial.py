from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from shefferlab.errors import NotDivisibleByX
from shefferlab.polynomial import Polynomial, falling_factorial

rationals = st.builds(F, st.integers(-9, 9), st.integers(1, 9))
polys = st.lists(rationals, max_size=7).map(Polynomial)


def test_trailing_zeros_stripped():
    p = Polynomial([1, 2, 0, 0])
    assert p.coeffs == (F(1), F(2))
    assert p.degree == 1
    assert Polynomial([0, 0]).degree is None
    assert Polynomial().is_zero()


def test_arithmetic_and_evaluation():
    x = Polynomial.x()
    p = (x + 1) ** 2
    assert p == Polynomial([1, 2, 1])
    assert p(F(1, 2)) == F(9, 4)
    assert p - p == Polynomial()
    assert p.leading_coefficient() == 1


def test_derivative_and_shift():
    p = Polynomial([0, 0, 0, 1])
    assert p.derivative() == Polynomial([0, 0, 3])
    assert p.derivative(4).is_zero()
    assert p.shift(1) == Polynomial([1, 3, 3, 1])


def test_div_x():
    assert Polynomial([0, 2, 3]).div_x() == Polynomial([2, 3])
    with pytest.raises(NotDivisibleByX):
        Polynomial([1, 2]).div_x()


def test_falling_factorial_matches_oracle():
    for n in range(8):
        assert list(falling_factorial(n).coeffs) == oracles.falling(n)


@settings(max_examples=40, deadline=None)
@given(polys, rationals, rationals)
def test_shift_evaluates_at_offset(p, c, y):
    assert p.shift(c)(y) == p(y + c)


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_product_matches_oracle(p, q):
    assert list((p * q).coeffs) == oracles.poly_mul(list(p.coeffs), list(q.coeffs))
