"""Numerical study of positive radial solutions of the sublinear
elliptic equation with a boundary Hardy potential,

    u'' + (N-1)/r u' + mu/delta(r)^2 u = u^p,   0 < p < 1, mu != 0,

on balls and annuli: certified local solution fragments, global
continuation with dead cores, boundary-exponent classification,
Hardy-constant estimates, and barrier-based existence via monotone
iteration.
"""

from .params import (
    Annulus,
    Ball,
    DeadCoreCoefficients,
    Exponents,
    Problem,
    Regime,
    admissible_regimes,
    deadcore_coefficients,
    exponents,
    indicial_exponents,
    mu_star,
)

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "Ball",
    "DeadCoreCoefficients",
    "Exponents",
    "Problem",
    "Regime",
    "admissible_regimes",
    "deadcore_coefficients",
    "exponents",
    "indicial_exponents",
    "mu_star",
    "__version__",
]
