"""Exact symbolic engine for the spherical Shalika function of GL_2n."""

from .cs_formula import (
    PATHS,
    RESOLVED_TWIST,
    ModelContext,
    TwistConvention,
    omega,
    omega_closed,
    omega_gamma_sum,
    omega_hecke,
)
from .exact_arith import LaurentPoly, Monomial, RationalFn, exact_div, rfn_eq

__all__ = [
    "PATHS",
    "RESOLVED_TWIST",
    "LaurentPoly",
    "ModelContext",
    "Monomial",
    "RationalFn",
    "TwistConvention",
    "exact_div",
    "omega",
    "omega_closed",
    "omega_gamma_sum",
    "omega_hecke",
    "rfn_eq",
]
