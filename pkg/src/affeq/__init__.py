"""affeq: exact affine-equivalence computations for Hessian-rank-2 hypersurface graphs."""

from .algebra import (
    DEGREVLEX,
    LEX,
    Monomial,
    MonomialOrder,
    NonvanishingSet,
    NotDivisible,
    NotLinearInVariable,
    Polynomial,
    PossiblyZeroDivision,
    RationalExpression,
    Variable,
    elimination_order,
    jet_var,
    poly,
    rf_equal,
    var,
)

__all__ = [
    "DEGREVLEX",
    "LEX",
    "Monomial",
    "MonomialOrder",
    "NonvanishingSet",
    "NotDivisible",
    "NotLinearInVariable",
    "Polynomial",
    "PossiblyZeroDivision",
    "RationalExpression",
    "Variable",
    "elimination_order",
    "jet_var",
    "poly",
    "rf_equal",
    "var",
]

__version__ = "0.1.0"
