"""Exact setwise arithmetic in reduced finitary power monoids over reduced
valuation submonoids of (Z^2, +): cone membership, the unique normalizing
shift, the induced isomorphism between power monoids, and atom-structure
evidence separating the lex cone from irrational-slope cones."""

from .cones import (
    DEFAULT_MAX_RADIUS,
    Classification,
    Cone,
    ElementKind,
    FactorWitness,
    LexCone,
    SearchExhausted,
    SlopeCone,
    box_members,
    classify,
    difference_witness,
    factor_nontrivial,
    format_cone,
    is_unit,
    parse_cone,
    valuation_check,
)
from .harness import (
    PropertyFailure,
    RejectionBudgetExceeded,
    VerifyReport,
    gen_subset,
    verify,
)
from .lattice import (
    ORIGIN,
    GroupElement,
    ParseError,
    QuadraticIrrational,
    cmp_slope,
    floor_mul,
    format_alpha,
    format_element,
    parse_alpha,
    parse_element,
    sign_quad,
)
from .powersets import (
    IDENTITY,
    FinSubset,
    MultipleShiftsFound,
    NoShiftFound,
    NotInSourceMonoid,
    PostconditionFailed,
    ShiftError,
    ShiftResult,
    candidate_shifts,
    format_subset,
    normalize_shift_bruteforce,
    normalize_shift_inductive,
    parse_subset,
    setwise_product,
    translate,
    transport,
    transport_shift,
)

__version__ = "0.1.0"
