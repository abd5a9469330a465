"""Exact rationals.

``fractions.Fraction`` already keeps numerator and denominator in lowest
terms with a positive denominator, so it is used directly as the coefficient
type.  This module only adds parsing and the canonical text form.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .errors import BadRational

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (integers only, no decimals)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise BadRational(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise BadRational(f"zero denominator: {text!r}")
    return Fraction(num, den)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(q: Fraction) -> str:
    """Canonical text: ``"-3/2"``, ``"5"``, ``"0"``."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
