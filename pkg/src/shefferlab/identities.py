"""Exact checkers for the Barnes-type Daehee identities.

Each checker builds both sides of one displayed identity as polynomials in
``x`` and compares them exactly.  Polynomials on the left come from the
Sheffer-pair route (``families.family_polynomials``); the Daehee *numbers*
used inside right-hand sides come from the generating functions directly
(``families.family_numbers``), so every passing check also ties the two
presentations of each family together.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Optional, Sequence

from .errors import BadInstance
from .families import FamilyId, FamilyParams, family_numbers, family_polynomials, stirling1
from .polynomial import Polynomial, falling_factorial
from .rational import RationalLike, as_rational


class TheoremId(str, enum.Enum):
    EXPLICIT_100A = "explicit_100a"
    EXPLICIT_100B = "explicit_100b"
    EXPLICIT_100C = "explicit_100c"
    EXPLICIT_100A_HAT = "explicit_100a_hat"
    EXPLICIT_100B_HAT = "explicit_100b_hat"
    EXPLICIT_100C_HAT = "explicit_100c_hat"
    SHEFFER_20 = "sheffer_20"
    SHEFFER_21 = "sheffer_21"
    DIFFERENCE_25A = "difference_25a"
    DIFFERENCE_25B = "difference_25b"
    RECURRENCE_30 = "recurrence_30"
    RECURRENCE_31 = "recurrence_31"
    DIFFERENTIATION_500A = "differentiation_500a"
    DIFFERENTIATION_500B = "differentiation_500b"
    CAUCHY_40 = "cauchy_40"
    CAUCHY_42 = "cauchy_42"
    STIRLING_50A = "stirling_50a"
    STIRLING_50B = "stirling_50b"
    FALLING_60 = "falling_60"
    FALLING_61 = "falling_61"
    FROBENIUS_80 = "frobenius_80"
    FROBENIUS_81 = "frobenius_81"
    BERNOULLI_90 = "bernoulli_90"
    BERNOULLI_91 = "bernoulli_91"


ALL_THEOREMS: tuple[TheoremId, ...] = tuple(TheoremId)

_SECOND_KIND = {
    TheoremId.EXPLICIT_100A_HAT,
    TheoremId.EXPLICIT_100B_HAT,
    TheoremId.EXPLICIT_100C_HAT,
    TheoremId.SHEFFER_21,
    TheoremId.DIFFERENCE_25B,
    TheoremId.RECURRENCE_31,
    TheoremId.DIFFERENTIATION_500B,
    TheoremId.CAUCHY_42,
    TheoremId.STIRLING_50B,
    TheoremId.FALLING_61,
    TheoremId.FROBENIUS_81,
    TheoremId.BERNOULLI_91,
}
_NEEDS_N1 = {
    TheoremId.DIFFERENCE_25A,
    TheoremId.DIFFERENCE_25B,
    TheoremId.RECURRENCE_30,
    TheoremId.RECURRENCE_31,
    TheoremId.DIFFERENTIATION_500A,
    TheoremId.DIFFERENTIATION_500B,
    TheoremId.CAUCHY_40,
    TheoremId.CAUCHY_42,
}
_STIRLING = {TheoremId.STIRLING_50A, TheoremId.STIRLING_50B}
_FROBENIUS = {TheoremId.FROBENIUS_80, TheoremId.FROBENIUS_81}
_HIGHER_BERNOULLI = {TheoremId.BERNOULLI_90, TheoremId.BERNOULLI_91}


def min_n(theorem: TheoremId) -> int:
    """Smallest ``n`` the theorem is stated for."""
    if theorem in _STIRLING:
        return 2
    if theorem in _NEEDS_N1:
        return 1
    return 0


@dataclass(frozen=True)
class IdentityInstance:
    theorem: TheoremId
    n: int
    a: tuple[Fraction, ...]
    m: Optional[int] = None
    lam: Optional[Fraction] = None
    s: Optional[int] = None

    @classmethod
    def make(
        cls,
        theorem,
        n: int,
        a: Sequence[RationalLike],
        m: Optional[int] = None,
        lam: Optional[RationalLike] = None,
        s: Optional[int] = None,
    ) -> IdentityInstance:
        try:
            theorem = TheoremId(theorem)
        except ValueError:
            raise BadInstance(f"unknown theorem {theorem!r}") from None
        return cls(
            theorem=theorem,
            n=n,
            a=tuple(as_rational(x) for x in a),
            m=m,
            lam=None if lam is None else as_rational(lam),
            s=s,
        )

    def validate(self) -> None:
        th = self.theorem
        if not self.a or any(x == 0 for x in self.a):
            raise BadInstance("a must be a nonempty list of nonzero rationals")
        if self.n < min_n(th):
            raise BadInstance(f"{th.value} needs n >= {min_n(th)}, got {self.n}")
        if th in _STIRLING:
            if self.m is None or not (1 <= self.m <= self.n - 1):
                raise BadInstance(f"{th.value} needs n-1 >= m >= 1, got n={self.n}, m={self.m}")
        if th in _FROBENIUS:
            if self.lam is None or self.lam == 1:
                raise BadInstance(f"{th.value} needs lambda != 1")
        if th in _FROBENIUS or th in _HIGHER_BERNOULLI:
            if self.s is None or self.s < 1:
                raise BadInstance(f"{th.value} needs s >= 1")


@dataclass(frozen=True)
class SideCheck:
    """One exact comparison; two-variable identities produce one per ``y`` point."""

    label: str
    lhs: Polynomial
    rhs: Polynomial

    @property
    def witness(self) -> Polynomial:
        return self.lhs - self.rhs

    @property
    def passed(self) -> bool:
        return self.witness.is_zero()


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one instance.

    ``lhs``, ``rhs`` and ``witness`` refer to the first failing comparison,
    or to the first comparison when everything passes, so ``passed`` holds
    exactly when ``witness`` is zero.
    """

    instance: IdentityInstance
    checks: tuple[SideCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def _focus(self) -> SideCheck:
        for c in self.checks:
            if not c.passed:
                return c
        return self.checks[0]

    @property
    def lhs(self) -> Polynomial:
        return self._focus().lhs

    @property
    def rhs(self) -> Polynomial:
        return self._focus().rhs

    @property
    def witness(self) -> Polynomial:
        return self._focus().witness


# --- family accessors ----------------------------------------------------------


class _Ctx:
    """Family lookups for one instance at a fixed working order."""

    def __init__(self, instance: IdentityInstance, order: int):
        self.inst = instance
        self.order = order
        self.kind = FamilyId.DAEHEE_SECOND_BARNES if instance.theorem in _SECOND_KIND else FamilyId.DAEHEE_FIRST_BARNES
        self.a = instance.a
        self.r = len(instance.a)
        self.A = sum(instance.a, Fraction(0))

    def _size(self, need: int) -> int:
        if need > self.order:
            raise BadInstance(f"working order {self.order} too small, need {need}")
        return self.order

    def poly(self, k: int, a: Optional[tuple[Fraction, ...]] = None) -> Polynomial:
        """``D_k(x|a)`` (or the hat version) from the Sheffer pair."""
        a = self.a if a is None else a
        n = self._size(k)
        return family_polynomials(self.kind, FamilyParams(a=a), n, n)[k]

    def number(self, k: int) -> Fraction:
        """``D_k(a)`` from the generating function."""
        n = self._size(k)
        return family_numbers(self.kind, FamilyParams(a=self.a), n, n)[k]

    def barnes_bernoulli(self, k: int) -> Polynomial:
        n = self._size(k)
        return family_polynomials(FamilyId.BARNES_BERNOULLI, FamilyParams(a=self.a), n, n)[k]

    def frobenius(self, k: int) -> Polynomial:
        n = self._size(k)
        params = FamilyParams(lam=self.inst.lam, s=self.inst.s)
        return family_polynomials(FamilyId.FROBENIUS_EULER_ORDER_S, params, n, n)[k]

    def higher_bernoulli(self, k: int) -> Polynomial:
        n = self._size(k)
        return family_polynomials(FamilyId.BERNOULLI_POLY_ORDER_S, FamilyParams(s=self.inst.s), n, n)[k]


@lru_cache(maxsize=None)
def _bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    return tuple(family_numbers(FamilyId.BERNOULLI_NUMBER, FamilyParams(), n_max))


@lru_cache(maxsize=None)
def _cauchy_numbers(n_max: int) -> tuple[Fraction, ...]:
    return tuple(family_numbers(FamilyId.CAUCHY_CLASSICAL, FamilyParams(), n_max))


@lru_cache(maxsize=None)
def _cauchy_order_s(s: int, n_max: int) -> tuple[Fraction, ...]:
    return tuple(family_numbers(FamilyId.CAUCHY_ORDER_S, FamilyParams(s=s), n_max))


def _x_minus_1_powers(n: int) -> list[Polynomial]:
    base = Polynomial([-1, 1])
    out = [Polynomial.constant(1)]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


def _const(c: Fraction) -> Polynomial:
    return Polynomial.constant(c)


def _falling(n: int, y: Fraction) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= y - k
    return out


# --- checkers -------------------------------------------------------------------
# Each returns a list of (label, lhs, rhs).

Sides = list[tuple[str, Polynomial, Polynomial]]


def _explicit_a(c: _Ctx) -> Sides:
    n = c.inst.n
    shift = c.A if c.kind is FamilyId.DAEHEE_SECOND_BARNES else Fraction(0)
    rhs = Polynomial()
    for m in range(n + 1):
        rhs = rhs + c.barnes_bernoulli(m).shift(shift) * stirling1(n, m)
    return [("", c.poly(n), rhs)]


def _explicit_b(c: _Ctx) -> Sides:
    n = c.inst.n
    coeffs = []
    for j in range(n + 1):
        coeffs.append(sum((comb(n, l) * stirling1(l, j) * c.number(n - l) for l in range(j, n + 1)), Fraction(0)))
    return [("", c.poly(n), Polynomial(coeffs))]


def _explicit_c(c: _Ctx) -> Sides:
    n = c.inst.n
    rhs = Polynomial()
    for m in range(n + 1):
        rhs = rhs + falling_factorial(m) * (comb(n, m) * c.number(n - m))
    return [("", c.poly(n), rhs)]


def _sheffer(c: _Ctx) -> Sides:
    # degree <= n in y on both sides, so n+1 sample points certify the identity
    n = c.inst.n
    out = []
    for yi in range(n + 1):
        y = Fraction(yi)
        lhs = c.poly(n).shift(y)
        rhs = Polynomial()
        for j in range(n + 1):
            rhs = rhs + c.poly(j) * (comb(n, j) * _falling(n - j, y))
        out.append((f"y={yi}", lhs, rhs))
    return out


def _difference(c: _Ctx) -> Sides:
    n = c.inst.n
    lhs = c.poly(n).shift(1) - c.poly(n)
    rhs = c.poly(n - 1) * n
    return [("", lhs, rhs)]


def recurrence_correction(c: _Ctx, m: int) -> Fraction:
    """Bracketed coefficient of ``(x-1)^m`` in the recurrence identities."""
    n = c.inst.n
    B = _bernoulli_numbers(n + 1)
    total = Fraction(0)
    for i in range(m, n + 1):
        for l in range(i, n + 1):
            s1 = stirling1(l, i)
            if not s1:
                continue
            base = Fraction(comb(n, l) * comb(i + 1, m)) * s1 * c.number(n - l) / (i + 1)
            b = B[i + 1 - m]
            if not b:
                continue
            for aj in c.a:
                total += base * b * (-aj) ** (i + 1 - m)
    return total


def _recurrence(c: _Ctx) -> Sides:
    n = c.inst.n
    lead = Polynomial([0, 1])
    if c.kind is FamilyId.DAEHEE_SECOND_BARNES:
        lead = lead + c.A
    rhs = lead * c.poly(n).shift(-1)
    powers = _x_minus_1_powers(n)
    for m in range(n + 1):
        rhs = rhs - powers[m] * recurrence_correction(c, m)
    return [("", c.poly(n + 1), rhs)]


def _differentiation(c: _Ctx) -> Sides:
    n = c.inst.n
    rhs = Polynomial()
    for l in range(n):
        rhs = rhs + c.poly(l) * Fraction((-1) ** (n - l - 1) * factorial(n), factorial(l) * (n - l))
    return [("", c.poly(n).derivative(), rhs)]


def _cauchy(c: _Ctx) -> Sides:
    n = c.inst.n
    cn = _cauchy_numbers(n)
    second = c.kind is FamilyId.DAEHEE_SECOND_BARNES
    lead = Polynomial([0, 1]) + (c.A if second else 0)
    rhs = lead * c.poly(n - 1).shift(-1)
    acc = Polynomial()
    for l in range(n + 1):
        acc = acc + c.poly(n - l).shift(-1) * (comb(n, l) * cn[l])
    rhs = rhs + acc * Fraction(c.r, n)
    acc = Polynomial()
    for aj in c.a:
        ext = c.a + (aj,)
        # first kind evaluates the extended family at x + a_j - 1, second kind at x - 1
        shift = -1 if second else aj - 1
        for l in range(n + 1):
            acc = acc + c.poly(n - l, ext).shift(shift) * (comb(n, l) * aj * cn[l])
    rhs = rhs - acc * Fraction(1, n)
    return [("", c.poly(n), rhs)]


def _stirling(c: _Ctx) -> Sides:
    n, m = c.inst.n, c.inst.m
    cn = _cauchy_numbers(n)
    second = c.kind is FamilyId.DAEHEE_SECOND_BARNES
    d_at_minus_1 = [c.poly(k)(-1) for k in range(n + 1)]

    def ext_value(k: int, aj: Fraction) -> Fraction:
        point = Fraction(-1) if second else aj - 1
        return c.poly(k, c.a + (aj,))(point)

    lhs = sum((comb(n, l) * stirling1(n - l, m) * c.number(l) for l in range(n - m + 1)), Fraction(0))
    head = sum(
        (comb(n - 1, l) * stirling1(n - l - 1, m - 1) * d_at_minus_1[l] for l in range(n - m + 1)),
        Fraction(0),
    )
    tail = Fraction(0)
    if second:
        tail = sum(
            (comb(n - 1, l) * stirling1(n - l - 1, m) * c.A * d_at_minus_1[l] for l in range(n - m)),
            Fraction(0),
        )

    def middle(reversed_form: bool) -> Fraction:
        total = Fraction(0)
        for l in range(n - m):
            inner = Fraction(0)
            for i in range(l + 2):
                ci, di = (cn[l + 1 - i], i) if reversed_form else (cn[i], l + 1 - i)
                inner += c.r * comb(l + 1, i) * ci * d_at_minus_1[di]
                for aj in c.a:
                    inner -= comb(l + 1, i) * aj * ci * ext_value(di, aj)
            total += comb(n, l + 1) * stirling1(n - l - 1, m) * inner
        return total / n

    return [
        ("as stated", _const(lhs), _const(head + middle(False) + tail)),
        ("index reversed", _const(lhs), _const(head + middle(True) + tail)),
    ]


def _frobenius(c: _Ctx) -> Sides:
    n, s, lam = c.inst.n, c.inst.s, c.inst.lam
    rhs = Polynomial()
    for m in range(n + 1):
        coef = Fraction(0)
        for j in range(n - m + 1):
            bj = comb(s, j)
            if not bj:
                continue
            scale = bj * _falling(j, Fraction(n)) * (1 - lam) ** (-j)
            for l in range(n - m - j + 1):
                coef += scale * comb(n - j, l) * stirling1(n - j - l, m) * c.number(l)
        rhs = rhs + c.frobenius(m) * coef
    return [("", c.poly(n), rhs)]


def _higher_bernoulli(c: _Ctx) -> Sides:
    n, s = c.inst.n, c.inst.s
    C = _cauchy_order_s(s, n)
    rhs = Polynomial()
    for m in range(n + 1):
        coef = Fraction(0)
        for i in range(n - m + 1):
            for l in range(n - m - i + 1):
                coef += comb(n, i) * comb(n - i, l) * C[i] * stirling1(n - i - l, m) * c.number(l)
        rhs = rhs + c.higher_bernoulli(m) * coef
    return [("", c.poly(n), rhs)]


_CHECKERS: dict[TheoremId, Callable[[_Ctx], Sides]] = {
    TheoremId.EXPLICIT_100A: _explicit_a,
    TheoremId.EXPLICIT_100A_HAT: _explicit_a,
    TheoremId.EXPLICIT_100B: _explicit_b,
    TheoremId.EXPLICIT_100B_HAT: _explicit_b,
    TheoremId.EXPLICIT_100C: _explicit_c,
    TheoremId.EXPLICIT_100C_HAT: _explicit_c,
    TheoremId.FALLING_60: _explicit_c,
    TheoremId.FALLING_61: _explicit_c,
    TheoremId.SHEFFER_20: _sheffer,
    TheoremId.SHEFFER_21: _sheffer,
    TheoremId.DIFFERENCE_25A: _difference,
    TheoremId.DIFFERENCE_25B: _difference,
    TheoremId.RECURRENCE_30: _recurrence,
    TheoremId.RECURRENCE_31: _recurrence,
    TheoremId.DIFFERENTIATION_500A: _differentiation,
    TheoremId.DIFFERENTIATION_500B: _differentiation,
    TheoremId.CAUCHY_40: _cauchy,
    TheoremId.CAUCHY_42: _cauchy,
    TheoremId.STIRLING_50A: _stirling,
    TheoremId.STIRLING_50B: _stirling,
    TheoremId.FROBENIUS_80: _frobenius,
    TheoremId.FROBENIUS_81: _frobenius,
    TheoremId.BERNOULLI_90: _higher_bernoulli,
    TheoremId.BERNOULLI_91: _higher_bernoulli,
}


def required_order(instance: IdentityInstance) -> int:
    """Largest family index an instance touches."""
    return instance.n + 1 if instance.theorem in (TheoremId.RECURRENCE_30, TheoremId.RECURRENCE_31) else instance.n


def identity_sides(instance: IdentityInstance, order: Optional[int] = None) -> Sides:
    """Both sides of every comparison the instance needs, unassembled."""
    instance.validate()
    if order is None:
        order = instance.n + 2
    if order < required_order(instance):
        raise BadInstance(f"working order {order} below required {required_order(instance)}")
    return _CHECKERS[instance.theorem](_Ctx(instance, order))


def report_from_sides(instance: IdentityInstance, sides: Iterable[tuple[str, Polynomial, Polynomial]]) -> IdentityReport:
    return IdentityReport(instance, tuple(SideCheck(label, lhs, rhs) for label, lhs, rhs in sides))


def check_identity(instance: IdentityInstance, order: Optional[int] = None) -> IdentityReport:
    return report_from_sides(instance, identity_sides(instance, order))


# --- suite --------------------------------------------------------------------------

PRESETS: dict[str, tuple[tuple[Fraction, ...], ...]] = {
    "default": (
        (Fraction(1),),
        (Fraction(2),),
        (Fraction(1), Fraction(2)),
        (Fraction(1, 2), Fraction(3)),
        (Fraction(-1), Fraction(1), Fraction(2)),
    ),
    "minimal": ((Fraction(3),),),
}
LAMBDAS: dict[str, tuple[Fraction, ...]] = {
    "default": (Fraction(-1), Fraction(2), Fraction(1, 2)),
    "minimal": (Fraction(-1),),
}
ORDERS_S: dict[str, tuple[int, ...]] = {"default": (1, 2, 3), "minimal": (2,)}


@dataclass(frozen=True)
class Grid:
    theorems: tuple[TheoremId, ...]
    n_max: int
    a_presets: tuple[tuple[Fraction, ...], ...]
    lambdas: tuple[Fraction, ...]
    s_values: tuple[int, ...]
    n_min: int = 0

    @classmethod
    def preset(cls, name: str, theorems: Sequence = ALL_THEOREMS, n_max: int = 8) -> Grid:
        if name not in PRESETS:
            raise BadInstance(f"unknown preset {name!r}")
        return cls(
            theorems=tuple(TheoremId(t) for t in theorems),
            n_max=n_max,
            a_presets=PRESETS[name],
            lambdas=LAMBDAS[name],
            s_values=ORDERS_S[name],
        )

    def instances(self) -> list[IdentityInstance]:
        out = []
        for th in self.theorems:
            for n in range(max(self.n_min, min_n(th)), self.n_max + 1):
                for a in self.a_presets:
                    if th in _STIRLING:
                        out.extend(IdentityInstance(th, n, a, m=m) for m in range(1, n))
                    elif th in _FROBENIUS:
                        out.extend(
                            IdentityInstance(th, n, a, lam=lam, s=s) for lam in self.lambdas for s in self.s_values
                        )
                    elif th in _HIGHER_BERNOULLI:
                        out.extend(IdentityInstance(th, n, a, s=s) for s in self.s_values)
                    else:
                        out.append(IdentityInstance(th, n, a))
        return out


@dataclass
class SuiteResult:
    reports: list[IdentityReport] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for r in self.reports if r.passed)
        return {"total": len(self.reports), "passed": passed, "failed": len(self.reports) - passed}


def verify_suite(grid: Grid, order: Optional[int] = None) -> SuiteResult:
    """Run every instance of ``grid`` in (theorem, n, parameter) order."""
    if not grid.theorems:
        raise BadInstance("grid has no theorems")
    if order is None:
        order = grid.n_max + 2
    instances = grid.instances()
    if not instances:
        raise BadInstance("grid produced no instances")
    return SuiteResult([check_identity(inst, order) for inst in instances])
