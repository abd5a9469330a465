import random
from fractions import Fraction as F
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from corpus import pairs
from shefferlab.errors import NotDivisibleByX, TruncationExhausted, ValuationMismatch
from shefferlab.families import FamilyId, FamilyParams, sheffer_pair
from shefferlab.polynomial import Polynomial, falling_factorial
from shefferlab.series import (
    PowerSeries,
    constant,
    exp_series,
    log1p_series,
    monomial,
    ps_mul,
    ps_shift_divide,
)
from shefferlab.umbral import (
    LinearFunctional,
    ShefferPair,
    associated_sequence,
    connection_constants,
    functional_apply,
    monomial_pair,
    operator_apply,
    sheffer_recurrence_step,
    sheffer_sequence,
    sheffer_values_at,
    transfer_formula,
)

N = 10
CORPUS = pairs(N)
NAMES = sorted(CORPUS)
X = Polynomial.x()


def P(*cs):
    return Polynomial(cs)


def falling_pair(order=N):
    return ShefferPair(constant(1, order), exp_series(1, order) - 1)


def bernoulli_pair(order=N):
    t = monomial(1, order + 1)
    return ShefferPair(ps_shift_divide(exp_series(1, order + 1) - 1, t, 1), monomial(1, order))


def daehee_pair(a, order=N):
    return sheffer_pair(FamilyId.DAEHEE_FIRST_BARNES, FamilyParams.make(a=a), order)


# --- functional_apply ---------------------------------------------------------------


def test_functional_examples():
    assert functional_apply(monomial(2, 4), P(0, 0, 1)) == 2
    assert functional_apply(exp_series(3, 4), P(0, 0, 1)) == 9
    assert LinearFunctional(log1p_series(4))(P(0, 0, 0, 1)) == 2


def test_functional_degree_too_high():
    with pytest.raises(TruncationExhausted):
        functional_apply(monomial(1, 2), P(0, 0, 0, 1))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 9)), max_size=9))
def test_duality_roundtrip(cs):
    p = Polynomial(cs)
    rebuilt = Polynomial([functional_apply(monomial(k, 8), p) / factorial(k) for k in range(9)])
    assert rebuilt == p


# --- operator_apply -------------------------------------------------------------------


def test_operator_examples():
    assert operator_apply(exp_series(1, 4), P(0, 0, 1)) == P(1, 2, 1)
    assert operator_apply(monomial(1, 4), P(0, 0, 0, 1)) == P(0, 0, 3)
    bern = ps_shift_divide(monomial(1, 5), exp_series(1, 5) - 1, 1)
    assert operator_apply(bern, X) == P(F(-1, 2), 1)
    assert operator_apply(bern, X) == Polynomial(oracles.bernoulli_poly(1))


def test_operator_on_zero_polynomial():
    assert operator_apply(exp_series(1, 0), Polynomial()).is_zero()


# --- sheffer_sequence -----------------------------------------------------------------


def test_sequence_examples():
    assert sheffer_sequence(falling_pair(), 3)[3] == P(0, 2, -3, 1)
    assert sheffer_sequence(bernoulli_pair(), 1)[1] == P(F(-1, 2), 1)
    assert sheffer_sequence(daehee_pair([2]), 0)[0] == P(F(1, 2))


def test_sequence_matches_oracles():
    assert [list(p.coeffs) for p in sheffer_sequence(bernoulli_pair(), 8)] == [
        oracles.bernoulli_poly(n) for n in range(9)
    ]
    assert [list(p.coeffs) for p in sheffer_sequence(daehee_pair([1, 2]), 8)] == [
        oracles.daehee_poly([1, 2], n) for n in range(9)
    ]


def test_sequence_needs_enough_order():
    with pytest.raises(TruncationExhausted):
        sheffer_sequence(falling_pair(3), 4)


@pytest.mark.parametrize("name", NAMES)
def test_degree_and_leading_coefficient(name):
    pair = CORPUS[name]
    for n, s in enumerate(sheffer_sequence(pair, N)):
        assert s.degree == n
        # leading coefficient is 1 / (g0 f1^n)
        assert s.leading_coefficient() == 1 / (pair.g[0] * pair.f[1] ** n)


# --- sheffer_recurrence_step ---------------------------------------------------------------


def test_recurrence_examples():
    assert sheffer_recurrence_step(falling_pair(), P(1), 0) == X
    assert sheffer_recurrence_step(daehee_pair([2]), P(F(1, 2)), 0) == P(F(-1, 2), F(1, 2))
    assert sheffer_recurrence_step(bernoulli_pair(), P(F(-1, 2), 1), 1) == P(F(1, 6), -1, 1)


def test_recurrence_needs_order():
    with pytest.raises(TruncationExhausted):
        sheffer_recurrence_step(falling_pair(2), P(0, 2, -3, 1), 3)


@pytest.mark.parametrize("name", NAMES)
def test_path_equivalence(name):
    pair = CORPUS[name]
    seq = sheffer_sequence(pair, 8)
    s = seq[0]
    for n in range(8):
        s = sheffer_recurrence_step(pair, s, n)
        assert s == seq[n + 1]
    for y in (0, 1, F(-2, 3)):
        assert sheffer_values_at(pair, y, 8) == [p(y) for p in seq]


# --- associated_sequence -----------------------------------------------------------------


def test_associated_examples():
    for a in ([2], [1, 2]):
        assert associated_sequence(daehee_pair(a), 5) == [falling_factorial(n) for n in range(6)]
    assert associated_sequence(falling_pair(), 5) == sheffer_sequence(falling_pair(), 5)
    assert associated_sequence(bernoulli_pair(), 5) == [Polynomial.monomial(n) for n in range(6)]


@pytest.mark.parametrize("name", NAMES)
def test_associated_is_sheffer_for_one_f(name):
    pair = CORPUS[name]
    assoc = ShefferPair(constant(1, pair.order), pair.f)
    assert associated_sequence(pair, 6) == sheffer_sequence(assoc, 6)


# --- umbral axioms -----------------------------------------------------------------


@pytest.mark.parametrize("name", NAMES)
def test_orthogonality(name):
    pair = CORPUS[name]
    seq = sheffer_sequence(pair, 6)
    gfk = pair.g
    for k in range(7):
        for n in range(7):
            assert functional_apply(gfk, seq[n]) == (factorial(n) if n == k else 0)
        gfk = ps_mul(gfk, pair.f)


@pytest.mark.parametrize("name", NAMES)
def test_lowering(name):
    pair = CORPUS[name]
    seq = sheffer_sequence(pair, 8)
    for n in range(1, 9):
        assert operator_apply(pair.f, seq[n]) == seq[n - 1] * n
    assert operator_apply(pair.f, seq[0]).is_zero()


@pytest.mark.parametrize("name", NAMES)
def test_binomial_convolution(name):
    pair = CORPUS[name]
    n_max = 6
    s = sheffer_sequence(pair, n_max)
    p = associated_sequence(pair, n_max)
    rng = random.Random(name)
    for _ in range(20):
        u = F(rng.randint(-9, 9), rng.randint(1, 5))
        v = F(rng.randint(-9, 9), rng.randint(1, 5))
        for n in range(n_max + 1):
            assert s[n](u + v) == sum(comb(n, j) * s[j](u) * p[n - j](v) for j in range(n + 1))


# --- connection_constants ---------------------------------------------------------


def _expand(C, targets, n):
    out = Polynomial()
    for m in range(n + 1):
        out = out + targets[m] * C[n][m]
    return out


@pytest.mark.parametrize("name", NAMES)
def test_connection_to_self_is_identity(name):
    pair = CORPUS[name]
    C = connection_constants(pair, pair, 6)
    assert C == [[F(int(n == m)) for m in range(7)] for n in range(7)]


def test_connection_daehee_to_falling_factorial():
    a = [1, 2]
    C = connection_constants(daehee_pair(a), falling_pair(), 7)
    D = [factorial(k) * c for k, c in enumerate(oracles.daehee_gf(a, 7))]
    for n in range(8):
        for m in range(8):
            assert C[n][m] == (comb(n, m) * D[n - m] if m <= n else 0)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_connection_daehee_to_higher_bernoulli(s):
    a = [F(1, 2), 3]
    n_max = 6
    target = sheffer_pair(FamilyId.BERNOULLI_POLY_ORDER_S, FamilyParams(s=s), N)
    C = connection_constants(daehee_pair(a), target, n_max)
    D = [factorial(k) * c for k, c in enumerate(oracles.daehee_gf(a, n_max))]
    cauchy_gf = oracles.power(
        oracles.long_divide([F(1)] + [F(0)] * n_max, oracles.mercator(n_max + 1)[1:], n_max), s, n_max
    )
    Cs = [factorial(i) * c for i, c in enumerate(cauchy_gf)]
    S1 = oracles.stirling1_by_product
    for n in range(n_max + 1):
        for m in range(n + 1):
            expected = sum(
                comb(n, i) * comb(n - i, l) * Cs[i] * S1(n - i - l, m) * D[l]
                for i in range(n - m + 1)
                for l in range(n - m - i + 1)
            )
            assert C[n][m] == expected


@pytest.mark.parametrize("source", NAMES)
@pytest.mark.parametrize("target", ["falling_factorial", "bernoulli_order_3", "frobenius_2_2", "ad_hoc"])
def test_connection_soundness(source, target):
    n_max = 6
    C = connection_constants(CORPUS[source], CORPUS[target], n_max)
    s = sheffer_sequence(CORPUS[source], n_max)
    r = sheffer_sequence(CORPUS[target], n_max)
    for n in range(n_max + 1):
        assert all(C[n][m] == 0 for m in range(n + 1, n_max + 1))
        assert _expand(C, r, n) == s[n]


# --- transfer_formula ---------------------------------------------------------------


def test_transfer_examples():
    t, g = monomial(1, N), exp_series(1, N) - 1
    assert transfer_formula(t, g, 1, X) == X
    assert transfer_formula(t, g, 2, P(0, 0, 1)) == falling_factorial(2)
    assert transfer_formula(t, g, 3, P(0, 0, 0, 1)) == P(0, 2, -3, 1)


def test_transfer_errors():
    t, g = monomial(1, N), exp_series(1, N) - 1
    with pytest.raises(NotDivisibleByX):
        transfer_formula(t, g, 1, P(1, 1))
    with pytest.raises(ValuationMismatch):
        transfer_formula(t, monomial(2, N), 1, X)
    with pytest.raises(ValuationMismatch):
        transfer_formula(monomial(2, N), g, 1, X)


@pytest.mark.parametrize("source", NAMES)
@pytest.mark.parametrize("target", NAMES)
def test_transfer_matches_sequence(source, target):
    f, g = CORPUS[source].f, CORPUS[target].f
    p = sheffer_sequence(ShefferPair(constant(1, N), f), 6)
    q = sheffer_sequence(ShefferPair(constant(1, N), g), 6)
    for n in range(1, 7):
        assert transfer_formula(f, g, n, p[n]) == q[n]


def test_monomial_pair():
    assert sheffer_sequence(monomial_pair(5), 5) == [Polynomial.monomial(n) for n in range(6)]


def test_pair_validation():
    with pytest.raises(Exception):
        ShefferPair(PowerSeries.from_coeffs([0, 1], 3), monomial(1, 3))
    with pytest.raises(Exception):
        ShefferPair(constant(1, 3), monomial(2, 3))
