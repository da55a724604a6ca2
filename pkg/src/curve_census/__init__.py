"""Exact census of plane curves with one prescribed ADE singularity.

Counts are closed-form polynomials in the curve degree ``d`` obtained from a
recursion over the cohomology ring of ``D x PT P^2``; a second route through
Euler classes of transversely cut strata cross-checks them.  The
``normalform`` subpackage re-derives the local invariants the strata are
built from and classifies explicit germs.
"""

from curve_census.algebra import DPoly, NonIntegralDivision
from curve_census.cohomology import Base, CohClass
from curve_census.counts import CountEngine, SingSpec, n_final, n_p

__all__ = [
    "Base",
    "CohClass",
    "CountEngine",
    "DPoly",
    "NonIntegralDivision",
    "SingSpec",
    "n_final",
    "n_p",
]

__version__ = "0.1.0"
