"""Umbral calculus on Q[x].

A series ``f(t)`` plays two roles here.  As a linear functional it acts by
``<t^k | x^n> = n! delta_{n,k}``; as an operator it acts by ``t^k p = p^(k)``.
Sheffer sequences for a pair ``(g, f)`` are built from these two actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (
    NotInvertible,
    ReversionRequiresDelta,
    TruncationExhausted,
    ValuationMismatch,
)
from .polynomial import Polynomial, falling_factorial
from .rational import RationalLike, as_rational
from .series import (
    PowerSeries,
    constant,
    ps_compose,
    ps_derive,
    ps_invert,
    ps_mul,
    ps_reversion,
    ps_shift_divide,
    ps_transcend,
)

__all__ = [
    "LinearFunctional",
    "Polynomial",
    "ShefferPair",
    "associated_sequence",
    "connection_constants",
    "falling_factorial",
    "functional_apply",
    "operator_apply",
    "sheffer_recurrence_step",
    "sheffer_sequence",
    "sheffer_values_at",
    "transfer_formula",
]


@dataclass(frozen=True)
class LinearFunctional:
    series: PowerSeries

    def __call__(self, p: Polynomial) -> Fraction:
        return functional_apply(self, p)


@dataclass(frozen=True)
class ShefferPair:
    """``g`` invertible, ``f`` a delta series."""

    g: PowerSeries
    f: PowerSeries

    def __post_init__(self):
        if self.g.coeffs[0] == 0:
            raise NotInvertible("g must have a nonzero constant term")
        if self.f.valuation() != 1:
            raise ReversionRequiresDelta("f must be a delta series")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)


def functional_apply(F: LinearFunctional | PowerSeries, p: Polynomial) -> Fraction:
    """``<F | p> = sum_n n! [t^n]F [x^n]p``."""
    series = F.series if isinstance(F, LinearFunctional) else F
    if p.degree is not None and p.degree > series.order:
        raise TruncationExhausted(f"degree {p.degree} exceeds functional order {series.order}")
    acc = Fraction(0)
    fact = 1
    for n, c in enumerate(p.coeffs):
        if n:
            fact *= n
        if c:
            acc += fact * series.coeffs[n] * c
    return acc


def operator_apply(f: PowerSeries, p: Polynomial) -> Polynomial:
    """``f(t) p(x) = sum_k [t^k]f * p^(k)(x)``."""
    if p.is_zero():
        return p
    if p.degree > f.order:
        raise TruncationExhausted(f"operator of order {f.order} on a degree-{p.degree} polynomial")
    out = Polynomial()
    deriv = p
    for k in range(p.degree + 1):
        if f.coeffs[k]:
            out = out + deriv * f.coeffs[k]
        deriv = deriv.derivative()
    return out


def _conjugate_series(pair: ShefferPair) -> tuple[PowerSeries, PowerSeries]:
    """``(1 / g(fbar), fbar)``."""
    fbar = ps_reversion(pair.f.truncate(pair.order))
    return ps_invert(ps_compose(pair.g, fbar)), fbar


def sheffer_sequence(pair: ShefferPair, n_max: int) -> list[Polynomial]:
    """``s_0 .. s_{n_max}`` via ``[x^j] s_n = n!/j! [t^n] (g(fbar)^{-1} fbar^j)``."""
    if pair.order < n_max:
        raise TruncationExhausted(f"pair order {pair.order} < n_max {n_max}")
    pair = ShefferPair(pair.g.truncate(max(n_max, 1)), pair.f.truncate(max(n_max, 1)))
    base, fbar = _conjugate_series(pair)
    rows = [[Fraction(0)] * (n + 1) for n in range(n_max + 1)]
    term = base
    for j in range(n_max + 1):
        jf = factorial(j)
        for n in range(j, n_max + 1):
            rows[n][j] = Fraction(factorial(n), jf) * term.coeffs[n]
        term = ps_mul(term, fbar)
    return [Polynomial(r) for r in rows]


def sheffer_values_at(pair: ShefferPair, y: RationalLike, n_max: int) -> list[Fraction]:
    """``s_k(y)`` read off the generating function ``g(fbar)^{-1} e^{y fbar}``."""
    if pair.order < n_max:
        raise TruncationExhausted(f"pair order {pair.order} < n_max {n_max}")
    y = as_rational(y)
    pair = ShefferPair(pair.g.truncate(max(n_max, 1)), pair.f.truncate(max(n_max, 1)))
    base, fbar = _conjugate_series(pair)
    gen = ps_mul(base, ps_transcend("exp", fbar.scale(y)))
    return [factorial(k) * gen.coeffs[k] for k in range(n_max + 1)]


def sheffer_recurrence_step(pair: ShefferPair, s_n: Polynomial, n: int) -> Polynomial:
    """``s_{n+1} = (x - g'/g) (1/f') s_n``."""
    N = pair.order
    if N < n + 1:
        raise TruncationExhausted(f"pair order {N} too small for step {n} -> {n + 1}")
    g, f = pair.g.truncate(N), pair.f.truncate(N)
    log_deriv = ps_mul(ps_derive(g), ps_invert(g.truncate(N - 1)))
    q = operator_apply(ps_invert(ps_derive(f)), s_n)
    return q.mul_x() - operator_apply(log_deriv, q)


def associated_sequence(pair: ShefferPair, n_max: int) -> list[Polynomial]:
    """``p_n = g(t) s_n``, the Sheffer sequence for ``(1, f)``."""
    return [operator_apply(pair.g, s) for s in sheffer_sequence(pair, n_max)]


def connection_constants(source: ShefferPair, target: ShefferPair, n_max: int) -> list[list[Fraction]]:
    """Dense lower-triangular ``C`` with ``s_n = sum_m C[n][m] r_m``.

    ``source`` is ``(g, f)`` and ``target`` is ``(h, l)``;
    ``C[n][m] = (1/m!) <h(fbar)/g(fbar) * l(fbar)^m | x^n>``.
    """
    N = min(source.order, target.order)
    if N < n_max:
        raise TruncationExhausted(f"shared order {N} < n_max {n_max}")
    # a delta series needs order >= 1 even when n_max = 0
    k = max(n_max, 1)
    g, f = source.g.truncate(k), source.f.truncate(k)
    h, l = target.g.truncate(k), target.f.truncate(k)
    fbar = ps_reversion(f)
    base = ps_mul(ps_compose(h, fbar), ps_invert(ps_compose(g, fbar)))
    lf = ps_compose(l, fbar)
    C = [[Fraction(0)] * (n_max + 1) for _ in range(n_max + 1)]
    term = base
    for m in range(n_max + 1):
        mf = factorial(m)
        for n in range(m, n_max + 1):
            C[n][m] = Fraction(factorial(n), mf) * term.coeffs[n]
        term = ps_mul(term, lf)
    return C


def transfer_formula(f: PowerSeries, g: PowerSeries, n: int, p_n: Polynomial) -> Polynomial:
    """Turn ``p_n ~ (1, f)`` into ``q_n ~ (1, g)`` via ``x (f/g)^n x^{-1} p_n``."""
    if n < 1:
        raise ValueError("transfer formula needs n >= 1")
    if f.valuation() != 1:
        raise ValuationMismatch(f"f has valuation {f.valuation()}, expected 1")
    ratio = ps_shift_divide(f, g, 1)
    return operator_apply(ratio**n, p_n.div_x()).mul_x()


def monomial_pair(order: int) -> ShefferPair:
    """``(1, t)``, whose Sheffer sequence is ``x^n``."""
    return ShefferPair(constant(1, order), PowerSeries.from_coeffs([0, 1], order))
