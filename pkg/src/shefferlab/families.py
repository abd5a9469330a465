"""Named number and polynomial families, each defined by a generating function.

Every family is exposed three ways: the generating series at ``x = 0``
(``family_series``), the numbers ``n! [t^n]`` of that series
(``family_numbers``), and the symbolic polynomials ``s_n(x)``
(``family_polynomials``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional, Sequence

from .errors import BadFamilyParams
from .polynomial import Polynomial, falling_factorial
from .rational import RationalLike, as_rational
from .series import (
    PowerSeries,
    binomial_series,
    constant,
    exp_series,
    log1p_series,
    monomial,
    ps_invert,
    ps_mul,
    ps_product,
    ps_shift_divide,
    ps_transcend,
)
from .umbral import ShefferPair, sheffer_sequence


class FamilyId(str, enum.Enum):
    DAEHEE_FIRST_BARNES = "daehee_first_barnes"
    DAEHEE_SECOND_BARNES = "daehee_second_barnes"
    DAEHEE_FIRST_ORDER_R = "daehee_first_order_r"
    DAEHEE_SECOND_ORDER_R = "daehee_second_order_r"
    BARNES_BERNOULLI = "barnes_bernoulli"
    BERNOULLI_NUMBER = "bernoulli_number"
    BERNOULLI_POLY_ORDER_S = "bernoulli_poly_order_s"
    CAUCHY_CLASSICAL = "cauchy_classical"
    CAUCHY_ORDER_S = "cauchy_order_s"
    FROBENIUS_EULER_ORDER_S = "frobenius_euler_order_s"
    STIRLING1 = "stirling1"
    FALLING_FACTORIAL = "falling_factorial"


#: Families that only have numbers, not polynomials in x.
NUMBER_FAMILIES = frozenset(
    {
        FamilyId.BERNOULLI_NUMBER,
        FamilyId.CAUCHY_CLASSICAL,
        FamilyId.CAUCHY_ORDER_S,
        FamilyId.STIRLING1,
    }
)

_NEEDS_A = {
    FamilyId.DAEHEE_FIRST_BARNES,
    FamilyId.DAEHEE_SECOND_BARNES,
    FamilyId.BARNES_BERNOULLI,
}
_NEEDS_S = {
    FamilyId.BERNOULLI_POLY_ORDER_S,
    FamilyId.CAUCHY_ORDER_S,
    FamilyId.FROBENIUS_EULER_ORDER_S,
    FamilyId.STIRLING1,
}
_NEEDS_R = {FamilyId.DAEHEE_FIRST_ORDER_R, FamilyId.DAEHEE_SECOND_ORDER_R}


@dataclass(frozen=True)
class FamilyParams:
    """Family parameters; only the ones a family uses are checked.

    ``s`` doubles as the column index ``m`` for ``stirling1``.
    """

    a: tuple[Fraction, ...] = ()
    lam: Optional[Fraction] = None
    s: Optional[int] = None
    r: Optional[int] = None

    @classmethod
    def make(
        cls,
        a: Sequence[RationalLike] = (),
        lam: Optional[RationalLike] = None,
        s: Optional[int] = None,
        r: Optional[int] = None,
    ) -> FamilyParams:
        return cls(
            a=tuple(as_rational(x) for x in a),
            lam=None if lam is None else as_rational(lam),
            s=s,
            r=r,
        )


def _check(fid: FamilyId, params: FamilyParams) -> None:
    if fid in _NEEDS_A:
        if not params.a:
            raise BadFamilyParams(f"{fid.value} needs a nonempty parameter list a")
        if any(x == 0 for x in params.a):
            raise BadFamilyParams("every a_j must be nonzero")
    if fid in _NEEDS_S:
        if params.s is None or params.s < 1:
            raise BadFamilyParams(f"{fid.value} needs an integer s >= 1")
    if fid in _NEEDS_R:
        if params.r is None or params.r < 1:
            raise BadFamilyParams(f"{fid.value} needs an integer r >= 1")
    if fid is FamilyId.FROBENIUS_EULER_ORDER_S:
        if params.lam is None:
            raise BadFamilyParams("frobenius_euler_order_s needs lambda")
        if params.lam == 1:
            raise BadFamilyParams("lambda must differ from 1")


def _coerce(fid) -> FamilyId:
    try:
        return FamilyId(fid)
    except ValueError:
        raise BadFamilyParams(f"unknown family {fid!r}") from None


# --- generating-function ingredients ----------------------------------------


def _one_plus_t(order: int) -> PowerSeries:
    return PowerSeries.from_coeffs([1, 1], order)


def _daehee_factor(a: Fraction, order: int, second: bool) -> PowerSeries:
    """``ln(1+t) / ((1+t)^a - 1)``, times ``(1+t)^a`` for the second kind."""
    n1 = order + 1
    pw = ps_transcend("pow", _one_plus_t(n1), a)
    num = log1p_series(n1)
    if second:
        num = ps_mul(num, pw)
    return ps_shift_divide(num, pw - 1, 1)


def _mercator_quotient(order: int) -> PowerSeries:
    """``ln(1+t) / t``."""
    return ps_shift_divide(log1p_series(order + 1), monomial(1, order + 1), 1)


def _bernoulli_factor(a: Fraction, order: int) -> PowerSeries:
    """``t / (e^{a t} - 1)``."""
    return ps_shift_divide(monomial(1, order + 1), exp_series(a, order + 1) - 1, 1)


def _cauchy_factor(order: int) -> PowerSeries:
    """``t / ln(1+t)``."""
    return ps_shift_divide(monomial(1, order + 1), log1p_series(order + 1), 1)


@lru_cache(maxsize=None)
def family_series(fid, params: FamilyParams = FamilyParams(), order: int = 8) -> PowerSeries:
    """Generating series at ``x = 0``; ``n! [t^n]`` is the n-th family number."""
    fid = _coerce(fid)
    _check(fid, params)
    N = order
    if fid is FamilyId.DAEHEE_FIRST_BARNES:
        return ps_product([_daehee_factor(a, N, False) for a in params.a], N)
    if fid is FamilyId.DAEHEE_SECOND_BARNES:
        return ps_product([_daehee_factor(a, N, True) for a in params.a], N)
    if fid is FamilyId.DAEHEE_FIRST_ORDER_R:
        return _mercator_quotient(N) ** params.r
    if fid is FamilyId.DAEHEE_SECOND_ORDER_R:
        return ps_mul(_one_plus_t(N), _mercator_quotient(N)) ** params.r
    if fid is FamilyId.BARNES_BERNOULLI:
        return ps_product([_bernoulli_factor(a, N) for a in params.a], N)
    if fid is FamilyId.BERNOULLI_NUMBER:
        return _bernoulli_factor(Fraction(1), N)
    if fid is FamilyId.BERNOULLI_POLY_ORDER_S:
        return _bernoulli_factor(Fraction(1), N) ** params.s
    if fid is FamilyId.CAUCHY_CLASSICAL:
        return _cauchy_factor(N)
    if fid is FamilyId.CAUCHY_ORDER_S:
        return _cauchy_factor(N) ** params.s
    if fid is FamilyId.FROBENIUS_EULER_ORDER_S:
        lam = params.lam
        base = ps_invert((exp_series(1, N) - lam).scale(1 / (1 - lam)))
        return base**params.s
    if fid is FamilyId.STIRLING1:
        return (log1p_series(N) ** params.s).scale(Fraction(1, factorial(params.s)))
    if fid is FamilyId.FALLING_FACTORIAL:
        return constant(1, N)
    raise BadFamilyParams(f"unhandled family {fid}")  # pragma: no cover


def sheffer_pair(fid, params: FamilyParams, order: int) -> ShefferPair:
    """The ``(g, f)`` pair whose Sheffer sequence is the family's polynomials."""
    fid = _coerce(fid)
    _check(fid, params)
    if fid in NUMBER_FAMILIES:
        raise BadFamilyParams(f"{fid.value} is a number family")
    N = order
    n1 = N + 1
    t = monomial(1, N)
    e_minus_1 = exp_series(1, N) - 1

    def exp_quotient(a: Fraction) -> PowerSeries:
        # (e^{a t} - 1) / t
        return ps_shift_divide(exp_series(a, n1) - 1, monomial(1, n1), 1)

    if fid is FamilyId.DAEHEE_FIRST_BARNES:
        return ShefferPair(ps_product([exp_quotient(a) for a in params.a], N), e_minus_1)
    if fid is FamilyId.DAEHEE_SECOND_BARNES:
        g = ps_product([ps_mul(exp_quotient(a), exp_series(-a, N)) for a in params.a], N)
        return ShefferPair(g, e_minus_1)
    if fid is FamilyId.DAEHEE_FIRST_ORDER_R:
        return ShefferPair(exp_quotient(Fraction(1)) ** params.r, e_minus_1)
    if fid is FamilyId.DAEHEE_SECOND_ORDER_R:
        return ShefferPair(ps_mul(exp_quotient(Fraction(1)), exp_series(-1, N)) ** params.r, e_minus_1)
    if fid is FamilyId.BARNES_BERNOULLI:
        return ShefferPair(ps_product([exp_quotient(a) for a in params.a], N), t)
    if fid is FamilyId.BERNOULLI_POLY_ORDER_S:
        return ShefferPair(exp_quotient(Fraction(1)) ** params.s, t)
    if fid is FamilyId.FROBENIUS_EULER_ORDER_S:
        lam = params.lam
        return ShefferPair((exp_series(1, N) - lam).scale(1 / (1 - lam)) ** params.s, t)
    if fid is FamilyId.FALLING_FACTORIAL:
        return ShefferPair(constant(1, N), e_minus_1)
    raise BadFamilyParams(f"unhandled family {fid}")  # pragma: no cover


def _expand_against_binomial(G: PowerSeries, n_max: int) -> list[Polynomial]:
    """Coefficients of ``G(t) (1+t)^x``, using ``(1+t)^x = sum_m (x)_m t^m / m!``."""
    numbers = [factorial(k) * G.coeffs[k] for k in range(n_max + 1)]
    falling = [falling_factorial(m) for m in range(n_max + 1)]
    out = []
    for n in range(n_max + 1):
        p = Polynomial()
        for m in range(n + 1):
            p = p + falling[m] * (comb(n, m) * numbers[n - m])
        out.append(p)
    return out


@lru_cache(maxsize=None)
def _polynomials_cached(fid: FamilyId, params: FamilyParams, n_max: int, order: int) -> tuple[Polynomial, ...]:
    if fid in (FamilyId.DAEHEE_FIRST_ORDER_R, FamilyId.DAEHEE_SECOND_ORDER_R):
        # read straight off G(t) (1+t)^x rather than through the Sheffer pair
        return tuple(_expand_against_binomial(family_series(fid, params, order), n_max))
    return tuple(sheffer_sequence(sheffer_pair(fid, params, order), n_max))


def family_polynomials(fid, params: FamilyParams = FamilyParams(), n_max: int = 8, order: Optional[int] = None) -> list[Polynomial]:
    """``s_0 .. s_{n_max}`` symbolic in x."""
    fid = _coerce(fid)
    _check(fid, params)
    if fid in NUMBER_FAMILIES:
        raise BadFamilyParams(f"{fid.value} is a number family, not a polynomial family")
    if order is None:
        order = max(n_max, 1)
    return list(_polynomials_cached(fid, params, n_max, order))


def family_numbers(fid, params: FamilyParams = FamilyParams(), n_max: int = 8, order: Optional[int] = None) -> list[Fraction]:
    """``[s_n(0)]`` for ``n <= n_max``."""
    series = family_series(fid, params, n_max if order is None else order)
    return [factorial(n) * series.coeffs[n] for n in range(n_max + 1)]


@lru_cache(maxsize=None)
def _stirling1_table(n_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [[1]]
    for n in range(n_max):
        prev = rows[-1] + [0]
        row = [0] * (n + 2)
        for m in range(n + 2):
            row[m] = (prev[m - 1] if m >= 1 else 0) - n * prev[m]
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def stirling1(n: int, m: int) -> Fraction:
    """Signed Stirling numbers of the first kind: ``(x)_n = sum_m S_1(n,m) x^m``."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return Fraction(0)
    # grow the cache in blocks so repeated calls reuse one table
    size = max(16, 1 << n.bit_length())
    return Fraction(_stirling1_table(size)[n][m])
