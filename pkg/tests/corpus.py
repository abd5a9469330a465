"""Sheffer pairs shared by the umbral tests and the acceptance run."""

from fractions import Fraction as F

from shefferlab.families import FamilyId, FamilyParams, sheffer_pair
from shefferlab.series import PowerSeries, constant, exp_series, monomial

ORDER = 10


def _bernoulli_pair(order):
    return sheffer_pair(FamilyId.BERNOULLI_POLY_ORDER_S, FamilyParams(s=1), order)


def pairs(order=ORDER):
    """Name -> ShefferPair, all at ``order``."""
    from shefferlab.umbral import ShefferPair

    out = {
        "falling_factorial": ShefferPair(constant(1, order), exp_series(1, order) - 1),
        "monomials": ShefferPair(constant(1, order), monomial(1, order)),
        "bernoulli": _bernoulli_pair(order),
        "daehee_first_2": sheffer_pair(FamilyId.DAEHEE_FIRST_BARNES, FamilyParams.make(a=[2]), order),
        "daehee_first_1_2": sheffer_pair(FamilyId.DAEHEE_FIRST_BARNES, FamilyParams.make(a=[1, 2]), order),
        "daehee_second_half_3": sheffer_pair(FamilyId.DAEHEE_SECOND_BARNES, FamilyParams.make(a=[F(1, 2), 3]), order),
        "daehee_second_m1_1_2": sheffer_pair(FamilyId.DAEHEE_SECOND_BARNES, FamilyParams.make(a=[-1, 1, 2]), order),
        "frobenius_2_2": sheffer_pair(FamilyId.FROBENIUS_EULER_ORDER_S, FamilyParams.make(lam=2, s=2), order),
        "bernoulli_order_3": sheffer_pair(FamilyId.BERNOULLI_POLY_ORDER_S, FamilyParams(s=3), order),
        "barnes_bernoulli_half_3": sheffer_pair(FamilyId.BARNES_BERNOULLI, FamilyParams.make(a=[F(1, 2), 3]), order),
        "ad_hoc": ShefferPair(
            PowerSeries.from_coeffs([2, 1, F(1, 3), -5], order),
            PowerSeries.from_coeffs([0, 3, F(-1, 2), 2, F(7, 4)], order),
        ),
    }
    return out
