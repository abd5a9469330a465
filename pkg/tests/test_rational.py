from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shefferlab.errors import BadRational
from shefferlab.rational import as_rational, format_rational, parse_rational


@pytest.mark.parametrize(
    "text, value",
    [("3", F(3)), ("-3/2", F(-3, 2)), ("6/4", F(3, 2)), (" 1 / 2 ", F(1, 2)), ("+7", F(7)), ("0/5", F(0))],
)
def test_parse(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "a", "1/", "/2", "1/0", "1/-2", "1//2"])
def test_parse_rejects(text):
    with pytest.raises(BadRational):
        parse_rational(text)


def test_bad_rational_is_a_value_error():
    with pytest.raises(ValueError):
        parse_rational("x")


def test_format_canonical():
    assert format_rational(F(-6, 4)) == "-3/2"
    assert format_rational(F(5)) == "5"
    assert format_rational(F(0)) == "0"


def test_as_rational():
    assert as_rational(2) == F(2)
    assert as_rational("2/3") == F(2, 3)
    with pytest.raises(TypeError):
        as_rational(True)
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_format_parse_roundtrip(p, q):
    x = F(p, q)
    assert parse_rational(format_rational(x)) == x
