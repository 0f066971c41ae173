"""Problem definition and every closed-form scalar of the theory.

The equation under study is  u'' + (N-1)/r u' + mu/delta(r)^2 u = u^p
on a ball (0, R) or an annulus (r0, R), with 0 < p < 1, mu != 0 and
delta the distance to the boundary.  This module owns the derived
constants: the indicial exponents beta_-, beta_+ of the harmonic
boundary growth, the critical coupling mu_star, the nonlinear growth
exponent 2/(1-p), and the dead-core expansion coefficients.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, RegimeNonexistentError

__all__ = [
    "Ball",
    "Annulus",
    "Geometry",
    "Problem",
    "Exponents",
    "DeadCoreCoefficients",
    "Regime",
    "indicial_exponents",
    "mu_star",
    "exponents",
    "deadcore_coefficients",
    "deadcore_residual",
    "admissible_regimes",
]


@dataclass(frozen=True)
class Ball:
    R: float

    def __post_init__(self):
        if not self.R > 0:
            raise DomainError(f"ball radius must be positive, got R={self.R}")

    @property
    def bounds(self) -> tuple[float, float]:
        return (0.0, self.R)

    @property
    def min_length(self) -> float:
        return self.R

    def distance(self, r: float) -> float:
        return self.R - r


@dataclass(frozen=True)
class Annulus:
    r0: float
    R: float

    def __post_init__(self):
        if not 0 < self.r0 < self.R:
            raise DomainError(
                f"annulus needs 0 < r0 < R, got r0={self.r0}, R={self.R}"
            )

    @property
    def bounds(self) -> tuple[float, float]:
        return (self.r0, self.R)

    @property
    def min_length(self) -> float:
        return self.R - self.r0

    def distance(self, r: float) -> float:
        return min(r - self.r0, self.R - r)


Geometry = Ball | Annulus


@dataclass(frozen=True)
class Problem:
    """One instance of the equation: coupling mu, exponent p, dimension N
    and the radial geometry.

    mu = 0 is rejected outright (no Hardy term); mu < 1/4 is required by
    most operations and asserted at their call sites, not here.
    """

    mu: float
    p: float
    N: int
    geometry: Geometry

    def __post_init__(self):
        if self.mu == 0:
            raise DomainError("mu must be nonzero")
        if not 0 < self.p < 1:
            raise DomainError(f"p must lie in (0,1), got p={self.p}")
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"N must be an integer >= 1, got N={self.N}")
        object.__setattr__(self, "N", int(self.N))

    def require_subcritical(self):
        """Assert mu < 1/4 (existence of positive boundary harmonics)."""
        if not self.mu < 0.25:
            raise DomainError(
                f"mu={self.mu} >= 1/4: no positive harmonics exist near the boundary"
            )


class Regime(str, enum.Enum):
    """Boundary behavior labels for positive radial solutions."""

    NONLINEAR = "Nonlinear"            # u ~ c' delta^(2/(1-p))
    LINEAR_SINGULAR = "LinearSingular"  # u ~ c1 delta^(beta_-)
    LINEAR_REGULAR = "LinearRegular"    # u ~ c2 delta^(beta_+)
    DEAD_CORE = "DeadCore"              # u == 0 near the boundary
    UNCLASSIFIED = "Unclassified"

    def __str__(self):  # pragma: no cover - cosmetic
        return self.value


def indicial_exponents(mu: float) -> tuple[float, float]:
    """Roots beta_-, beta_+ of beta*(beta-1) + mu = 0.

    These govern the harmonic-like boundary growth delta^beta.  Requires
    mu <= 1/4; beyond it the roots are complex and no positive harmonics
    exist.
    """
    if mu > 0.25:
        raise DomainError(
            f"mu={mu} > 1/4: indicial roots are complex, no positive harmonics exist"
        )
    s = math.sqrt(0.25 - mu)
    return 0.5 - s, 0.5 + s


def mu_star(p: float) -> float:
    """Critical coupling 2(p+1)/(1-p)^2.

    For mu <= -mu_star the nonlinear and linear-regular boundary regimes
    cease to exist.
    """
    if not 0 < p < 1:
        raise DomainError(f"p must lie in (0,1), got p={p}")
    return 2.0 * (p + 1.0) / (1.0 - p) ** 2


@dataclass(frozen=True)
class Exponents:
    """All derived exponents of one (mu, p) pair."""

    beta_minus: float
    beta_plus: float
    mu_star: float
    nonlinear_exp: float   # 2/(1-p)
    order_alpha: float     # min{1, 2 - beta_plus*(1-p)}


def exponents(mu: float, p: float) -> Exponents:
    bm, bp = indicial_exponents(mu)
    ms = mu_star(p)
    nl = 2.0 / (1.0 - p)
    alpha = min(1.0, 2.0 - bp * (1.0 - p))
    return Exponents(beta_minus=bm, beta_plus=bp, mu_star=ms,
                     nonlinear_exp=nl, order_alpha=alpha)


@dataclass(frozen=True)
class DeadCoreCoefficients:
    """Leading coefficients c of the dead-core expansion u = c*d^(2/(1-p)).

    Each coefficient makes the leading term of its balance vanish:
      interior point:  u'' = u^p                 -> c_p
      boundary point:  u'' + mu/d^2 u = u^p      -> c_boundary (mu > -mu_star)
      ball origin:     u'' + (N-1)/r u' = u^p    -> c_origin
    ``c_boundary`` is None when mu <= -mu_star (regime nonexistent);
    ``c_origin`` is None for annuli.
    """

    c_p: float
    c_boundary: float | None
    c_origin: float | None

    def boundary(self) -> float:
        if self.c_boundary is None:
            raise RegimeNonexistentError(
                "nonlinear boundary regime nonexistent: mu <= -mu_star"
            )
        return self.c_boundary

    def origin(self) -> float:
        if self.c_origin is None:
            raise DomainError("origin coefficient is defined only in a ball")
        return self.c_origin


def deadcore_residual(c: float, base: float, p: float) -> float:
    """Leading-order residual of u = c*d^(2/(1-p)) in its balance.

    Substituting the ansatz reduces the equation's leading term to
    (c*base - c^p) * d^(2p/(1-p)); the returned value is that coefficient.
    The admissible c is the positive root, c = base^(1/(p-1)).
    """
    return c * base - c**p


def deadcore_coefficients(problem: Problem) -> DeadCoreCoefficients:
    """Dead-core expansion coefficients for one problem instance.

    Each value is certified by ``deadcore_residual``: the residual
    vanishes at the returned coefficient and changes sign across it.
    """
    p = problem.p
    ms = mu_star(p)
    expo = 1.0 / (p - 1.0)
    c_p = ms**expo
    c_boundary = None
    if problem.mu > -ms:
        c_boundary = (ms + problem.mu) ** expo
    c_origin = None
    if isinstance(problem.geometry, Ball):
        c_origin = (ms + 2.0 * (problem.N - 1) / (1.0 - p)) ** expo
    return DeadCoreCoefficients(c_p=c_p, c_boundary=c_boundary, c_origin=c_origin)


def admissible_regimes(problem: Problem) -> set[Regime]:
    """Boundary regimes that can occur for this problem.

    The linear-singular and dead-core behaviors always exist for
    mu < 1/4, mu != 0; the nonlinear and linear-regular ones only for
    mu > -mu_star (strict: equality is excluded).
    """
    problem.require_subcritical()
    regimes = {Regime.LINEAR_SINGULAR, Regime.DEAD_CORE}
    if problem.mu > -mu_star(problem.p):
        regimes |= {Regime.LINEAR_REGULAR, Regime.NONLINEAR}
    return regimes


def regime_target_exponent(problem: Problem, regime: Regime) -> float:
    """Boundary growth exponent associated with a regime label."""
    ex = exponents(problem.mu, problem.p)
    if regime is Regime.NONLINEAR:
        return ex.nonlinear_exp
    if regime is Regime.LINEAR_SINGULAR:
        return ex.beta_minus
    if regime is Regime.LINEAR_REGULAR:
        return ex.beta_plus
    raise DomainError(f"no target exponent for regime {regime}")
