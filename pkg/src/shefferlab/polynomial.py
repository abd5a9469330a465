"""Dense univariate polynomials in x with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

from .errors import NotDivisibleByX
from .rational import RationalLike, as_rational, format_rational

_ZERO = Fraction(0)


def _strip(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True, init=False)
class Polynomial:
    """``coeffs[k]`` is the coefficient of ``x^k``; trailing zeros are never stored."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _strip([as_rational(c) for c in coeffs]))

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls([c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> Polynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> Optional[int]:
        """``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            return Polynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> Polynomial:
        cs = self.coeffs
        for _ in range(k):
            cs = tuple(i * cs[i] for i in range(1, len(cs)))
        return Polynomial(cs)

    def shift(self, c: RationalLike) -> Polynomial:
        """``p(x + c)``."""
        c = as_rational(c)
        if c == 0 or self.is_zero():
            return self
        n = len(self.coeffs)
        out = [_ZERO] * n
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            cp = Fraction(1)
            for j in range(k, -1, -1):
                # term binom(k, j) x^j c^(k-j)
                out[j] += a * comb(k, j) * cp
                cp *= c
        return Polynomial(out)

    def mul_x(self) -> Polynomial:
        return Polynomial((_ZERO,) + self.coeffs) if self.coeffs else self

    def div_x(self) -> Polynomial:
        if self.coeff(0) != 0:
            raise NotDivisibleByX("polynomial has a nonzero constant term")
        return Polynomial(self.coeffs[1:])

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        return f"Polynomial([{', '.join(self.to_strings())}])"


def falling_factorial(n: int) -> Polynomial:
    """``(x)_n = x (x-1) ... (x-n+1)``."""
    p = Polynomial.constant(1)
    for k in range(n):
        p = p * Polynomial([-k, 1])
    return p
