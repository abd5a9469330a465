"""Exact umbral calculus and Barnes-type Daehee identity checking."""

from .errors import (
    BadConstantTerm,
    BadFamilyParams,
    BadInstance,
    BadRational,
    CompositionRequiresDelta,
    NotDivisibleByX,
    NotInvertible,
    ReversionRequiresDelta,
    ShefferLabError,
    TruncationExhausted,
    ValuationMismatch,
)
from .families import FamilyId, FamilyParams, family_numbers, family_polynomials, family_series, stirling1
from .identities import (
    Grid,
    IdentityInstance,
    IdentityReport,
    TheoremId,
    check_identity,
    verify_suite,
)
from .polynomial import Polynomial, falling_factorial
from .rational import Rational, format_rational, parse_rational
from .series import (
    PowerSeries,
    ps_compose,
    ps_derive,
    ps_invert,
    ps_linear,
    ps_mul,
    ps_reversion,
    ps_shift_divide,
    ps_transcend,
)
from .umbral import (
    LinearFunctional,
    ShefferPair,
    associated_sequence,
    connection_constants,
    functional_apply,
    operator_apply,
    sheffer_recurrence_step,
    sheffer_sequence,
    transfer_formula,
)

__version__ = "0.1.0"
