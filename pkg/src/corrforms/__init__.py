"""Exact semi-invariant differential forms for correspondences of the projective line.

A correspondence here is a pair of separable self-maps (sigma1, sigma2) of
the line over Q or F_p; a form omega is semi-invariant when
sigma1^* omega = lambda sigma2^* omega.  The package finds flat primitives
dt/(t-a) and (dt)^2/(t^2 - s t + q), checks exact conductor bounds, sweeps
reductions modulo primes, and recognizes common-power pairs — all in exact
arithmetic (no floats, no factorization into irreducibles).
"""

from .errors import (
    CorrformsError,
    FieldMismatch,
    HypothesisNotMet,
    InputFormatError,
    InseparableMap,
    NormalizationRequired,
    NotPLocalUnit,
    NotSemiInvariant,
    UnsupportedCharacteristic,
    UnsupportedEqualDegrees,
    WildInput,
    WildRamification,
)
from .field import (
    GF,
    QQ,
    FpElement,
    PrimeField,
    RationalField,
    is_prime,
    reduce_mod,
    reduce_unit_mod_p,
)
from .geometry import (
    DifferentialForm,
    Divisor,
    MobiusTransform,
    RationalMap,
    Tameness,
    check_order_identity,
    conductor,
    divisor_of_form,
    is_tame,
    mobius_conjugate,
    pullback,
    pullback_divisor,
    ramification_divisor,
    ramification_places,
)
from .invariance import (
    AffineSumCheck,
    BoundCheck,
    Correspondence,
    GroupReport,
    Weight1Solution,
    Weight2Solution,
    affine_conductor_guard,
    affine_multiplicity_sum,
    find_primitive,
    flat_form_weight1,
    flat_form_weight2,
    genus_conductor_bound,
    ramification_conductor_check,
    semi_invariance_ratio,
    solve_weight1_flat,
    solve_weight2_flat,
)
from .poly import (
    NEG_INFINITY,
    Polynomial,
    SquarefreeDecomposition,
    gcd_monic,
    radical,
    squarefree_decompose,
)
from .ratfunc import RationalFunction
from .sweep import (
    Decomposition,
    SweepEntry,
    SweepReport,
    chebyshev,
    decompose_power_pair,
    multiplicative_pair,
    primes_in_range,
    reduce_mod_p,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSumCheck",
    "BoundCheck",
    "CorrformsError",
    "Correspondence",
    "Decomposition",
    "DifferentialForm",
    "Divisor",
    "FieldMismatch",
    "FpElement",
    "GF",
    "GroupReport",
    "HypothesisNotMet",
    "InputFormatError",
    "InseparableMap",
    "MobiusTransform",
    "NEG_INFINITY",
    "NormalizationRequired",
    "NotPLocalUnit",
    "NotSemiInvariant",
    "Polynomial",
    "PrimeField",
    "QQ",
    "RationalField",
    "RationalFunction",
    "RationalMap",
    "SquarefreeDecomposition",
    "SweepEntry",
    "SweepReport",
    "Tameness",
    "UnsupportedCharacteristic",
    "UnsupportedEqualDegrees",
    "Weight1Solution",
    "Weight2Solution",
    "WildInput",
    "WildRamification",
    "affine_conductor_guard",
    "affine_multiplicity_sum",
    "chebyshev",
    "check_order_identity",
    "conductor",
    "decompose_power_pair",
    "divisor_of_form",
    "find_primitive",
    "flat_form_weight1",
    "flat_form_weight2",
    "gcd_monic",
    "genus_conductor_bound",
    "is_prime",
    "is_tame",
    "mobius_conjugate",
    "multiplicative_pair",
    "primes_in_range",
    "pullback",
    "pullback_divisor",
    "radical",
    "ramification_conductor_check",
    "ramification_divisor",
    "ramification_places",
    "reduce_mod",
    "reduce_mod_p",
    "reduce_unit_mod_p",
    "semi_invariance_ratio",
    "solve_weight1_flat",
    "solve_weight2_flat",
    "squarefree_decompose",
    "sweep",
]
