"""Truncated formal power series over the rationals.

A :class:`PowerSeries` stores the coefficients of ``t^0 .. t^N`` where ``N``
is its truncation order.  Binary operations return a result at the smaller
of the two orders; nothing is ever silently re-extended.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence, Union

from .errors import (
    BadConstantTerm,
    CompositionRequiresDelta,
    NotInvertible,
    ReversionRequiresDelta,
    TruncationExhausted,
    ValuationMismatch,
)
from .rational import RationalLike, as_rational, format_rational

#: Valuation of the zero series.
INFINITE_VALUATION = math.inf

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a power series needs at least one coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike], order: Optional[int] = None) -> PowerSeries:
        """Build a series; ``order`` pads with zeros or truncates."""
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = cs[: order + 1] + [_ZERO] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        if k > self.order:
            raise TruncationExhausted(f"coefficient t^{k} beyond order {self.order}")
        return self.coeffs[k]

    def valuation(self) -> Union[int, float]:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return INFINITE_VALUATION

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_invertible(self) -> bool:
        return self.coeffs[0] != 0

    def is_delta(self) -> bool:
        return self.coeffs[0] == 0 and self.order >= 1 and self.coeffs[1] != 0

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise TruncationExhausted(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            return ps_linear(self, other, _ONE, _ONE)
        return self + constant(other, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            return ps_linear(self, other, _ONE, -_ONE)
        return self - constant(other, self.order)

    def __rsub__(self, other):
        return constant(other, self.order) - self

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PowerSeries:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers; use ps_transcend('pow', ...)")
        result = constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: RationalLike) -> PowerSeries:
        c = as_rational(c)
        return PowerSeries(tuple(c * a for a in self.coeffs))

    def __repr__(self):
        terms = ", ".join(format_rational(c) for c in self.coeffs)
        return f"PowerSeries([{terms}])"


# --- constructors ---------------------------------------------------------


def constant(c: RationalLike, order: int) -> PowerSeries:
    return PowerSeries.from_coeffs([c], order)


def zero(order: int) -> PowerSeries:
    return constant(0, order)


def monomial(k: int, order: int, c: RationalLike = 1) -> PowerSeries:
    """``c * t^k`` (the zero series if ``k > order``)."""
    cs = [_ZERO] * (order + 1)
    if k <= order:
        cs[k] = as_rational(c)
    return PowerSeries(tuple(cs))


def exp_series(a: RationalLike, order: int) -> PowerSeries:
    """``e^{a t}``."""
    a = as_rational(a)
    cs = [_ONE]
    for k in range(1, order + 1):
        cs.append(cs[-1] * a / k)
    return PowerSeries(tuple(cs))


def log1p_series(order: int) -> PowerSeries:
    """``ln(1 + t)``."""
    cs = [_ZERO] + [Fraction((-1) ** (k - 1), k) for k in range(1, order + 1)]
    return PowerSeries(tuple(cs))


def binomial_series(a: RationalLike, order: int) -> PowerSeries:
    """``(1 + t)^a`` from generalized binomial coefficients."""
    a = as_rational(a)
    cs = [_ONE]
    for k in range(1, order + 1):
        cs.append(cs[-1] * (a - k + 1) / k)
    return PowerSeries(tuple(cs))


# --- ring operations --------------------------------------------------------


def ps_linear(f: PowerSeries, g: PowerSeries, alpha: RationalLike, beta: RationalLike) -> PowerSeries:
    """``alpha*f + beta*g`` at the smaller of the two orders."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    n = min(f.order, g.order)
    return PowerSeries(tuple(alpha * f.coeffs[k] + beta * g.coeffs[k] for k in range(n + 1)))


def ps_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = []
    for k in range(n + 1):
        acc = _ZERO
        for i in range(k + 1):
            if a[i] and b[k - i]:
                acc += a[i] * b[k - i]
        out.append(acc)
    return PowerSeries(tuple(out))


def ps_derive(f: PowerSeries) -> PowerSeries:
    if f.order == 0:
        raise TruncationExhausted("derivative of an order-0 series has no coefficients left")
    return PowerSeries(tuple(k * f.coeffs[k] for k in range(1, f.order + 1)))


def ps_invert(f: PowerSeries) -> PowerSeries:
    """Multiplicative inverse, solved degree by degree."""
    c0 = f.coeffs[0]
    if c0 == 0:
        raise NotInvertible("constant term is zero")
    a = f.coeffs
    inv0 = 1 / c0
    h = [inv0]
    for k in range(1, f.order + 1):
        acc = _ZERO
        for i in range(1, k + 1):
            if a[i]:
                acc += a[i] * h[k - i]
        h.append(-acc * inv0)
    return PowerSeries(tuple(h))


def ps_shift_divide(f: PowerSeries, g: PowerSeries, k: int) -> PowerSeries:
    """``f / g`` where both carry a factor ``t^k`` (``g`` exactly ``t^k``)."""
    if g.valuation() != k:
        raise ValuationMismatch(f"denominator valuation {g.valuation()} != {k}")
    if f.valuation() < k:
        raise ValuationMismatch(f"numerator valuation {f.valuation()} < {k}")
    n = min(f.order, g.order) - k
    if n < 0:
        raise TruncationExhausted("nothing left after removing the common t-power")
    num = PowerSeries(f.coeffs[k : k + n + 1])
    den = PowerSeries(g.coeffs[k : k + n + 1])
    return ps_mul(num, ps_invert(den))


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(t))`` by Horner's rule; ``g`` must have no constant term."""
    if g.coeffs[0] != 0:
        raise CompositionRequiresDelta("inner series has a nonzero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = constant(f.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        acc = ps_mul(acc, g)
        acc = PowerSeries((acc.coeffs[0] + f.coeffs[k],) + acc.coeffs[1:])
    return acc


def ps_reversion(f: PowerSeries) -> PowerSeries:
    """Compositional inverse of a delta series.

    Reference algorithm: with ``h_1 .. h_{n-1}`` known, the coefficient of
    ``t^n`` in ``f(h)`` is ``f_1 h_n`` plus terms in lower ``h``; solve for
    ``h_n`` so that it vanishes.
    """
    if f.valuation() != 1:
        raise ReversionRequiresDelta(f"valuation {f.valuation()} is not 1")
    N = f.order
    a = f.coeffs
    inv1 = 1 / a[1]
    h = [_ZERO, inv1]
    for n in range(2, N + 1):
        hs = PowerSeries(tuple(h) + (_ZERO,))  # h_n provisionally 0
        comp = ps_compose(PowerSeries(a[: n + 1]), hs)
        h.append(-comp.coeffs[n] * inv1)
    return PowerSeries.from_coeffs(h, N)


def ps_transcend(
    mode: Literal["exp", "log", "pow"],
    f: PowerSeries,
    a: Optional[RationalLike] = None,
) -> PowerSeries:
    """Formal ``exp(f)``, ``log(f)`` or ``f**a`` with exact coefficients."""
    N = f.order
    c = f.coeffs
    if mode == "exp":
        if c[0] != 0:
            raise BadConstantTerm("exp needs a zero constant term")
        # n h_n = sum_{k=1}^n k f_k h_{n-k}
        h = [_ONE]
        for n in range(1, N + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                if c[k]:
                    acc += k * c[k] * h[n - k]
            h.append(acc / n)
        return PowerSeries(tuple(h))
    if mode == "log":
        if c[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        if N == 0:
            return zero(0)
        quotient = ps_mul(ps_derive(f), ps_invert(f.truncate(N - 1)))
        return PowerSeries((_ZERO,) + tuple(quotient.coeffs[k] / (k + 1) for k in range(N)))
    if mode == "pow":
        if c[0] != 1:
            raise BadConstantTerm("pow needs constant term 1")
        if a is None:
            raise BadConstantTerm("pow needs an exponent")
        a = as_rational(a)
        # f h' = a f' h  =>  n h_n = sum_{k=1}^n (a k - (n - k)) f_k h_{n-k}
        h = [_ONE]
        for n in range(1, N + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                if c[k]:
                    acc += (a * k - (n - k)) * c[k] * h[n - k]
            h.append(acc / n)
        return PowerSeries(tuple(h))
    raise ValueError(f"unknown mode {mode!r}")


def ps_product(factors: Sequence[PowerSeries], order: int) -> PowerSeries:
    """Product of a list of series; the empty product is 1 at ``order``."""
    acc = constant(1, order)
    for fac in factors:
        acc = ps_mul(acc, fac)
    return acc
