"""Jet eliminations for the A- and D-series invariants and an ADE germ classifier."""

from curve_census.normalform.classify import Kind, NotOnCurve, SingularityType, classify
from curve_census.normalform.invariants import (
    DegenerateCubic,
    DegenerateQuadratic,
    Invariants,
    TruncationTooLow,
    a_invariants,
    beta_cubic,
    d_invariants,
    dual_quantities,
    solve_b,
    solve_h,
)
from curve_census.normalform.laurent import Laurent, generic_jet, render
from curve_census.normalform.series import OrderMismatch, PowerSeries2, ps_compose_x

__all__ = [
    "DegenerateCubic",
    "DegenerateQuadratic",
    "Invariants",
    "Kind",
    "Laurent",
    "NotOnCurve",
    "OrderMismatch",
    "PowerSeries2",
    "SingularityType",
    "TruncationTooLow",
    "a_invariants",
    "beta_cubic",
    "classify",
    "d_invariants",
    "dual_quantities",
    "generic_jet",
    "ps_compose_x",
    "render",
    "solve_b",
    "solve_h",
]
