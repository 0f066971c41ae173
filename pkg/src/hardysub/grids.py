"""Shared numerical plumbing: graded panel quadrature, nonuniform finite
differences, and small fitting helpers.

The integral operators of the local-solution constructions have algebraic
singularities at the anchor point d = 0, so all quadrature here runs on
composite Gauss-Legendre panels graded geometrically toward 0; within a
panel the singular factors are analytic and resolved spectrally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "PanelGrid",
    "fornberg_weights",
    "fd_derivative",
    "log_spaced",
]


@lru_cache(maxsize=None)
def _reference_rule(q: int):
    """GL nodes/weights on [-1,1] plus the spectral cumulative-integration
    matrix S with (S f)_k = integral from -1 to x_k of the degree-(q-1)
    interpolant of f."""
    x, w = np.polynomial.legendre.leggauss(q)
    # Legendre coefficients of the interpolant: c = V^{-1} f.
    V = np.polynomial.legendre.legvander(x, q - 1)
    Vinv = np.linalg.inv(V)
    # Antiderivative of P_j vanishing at -1: (P_{j+1} - P_{j-1})/(2j+1),
    # with P_{-1} term replaced by the constant fixing F(-1)=0.
    A = np.zeros((q + 1, q))
    for j in range(q):
        if j == 0:
            A[1, 0] = 1.0
            A[0, 0] = 1.0  # P_1(-1) = -1 -> +1 constant
        else:
            A[j + 1, j] += 1.0 / (2 * j + 1)
            A[j - 1, j] -= 1.0 / (2 * j + 1)
            # value at -1: P_{j+1}(-1)-P_{j-1}(-1) = 0 for all j>=1
    P = np.polynomial.legendre.legvander(x, q)  # values of P_0..P_q at nodes
    S = P @ A @ Vinv
    return x, w, S


def _graded_breakpoints(length: float, ratio: float, min_rel: float) -> np.ndarray:
    """Panel breakpoints 0 < ... < length, geometric toward 0.

    The innermost breakpoint sits near length*min_rel; the region
    (0, innermost) is handled analytically by the caller via the
    integrand's leading power.
    """
    if not 0 < ratio < 1:
        raise ValueError("grading ratio must lie in (0,1)")
    pts = [length]
    x = length
    while x > length * min_rel:
        x *= ratio
        pts.append(x)
    return np.array(pts[::-1])


@dataclass(frozen=True)
class PanelGrid:
    """Composite GL grid on (0, length] graded toward 0.

    nodes excludes 0; ``panels[i]`` gives the slice of nodes in panel i.
    Cumulative integrals treat the leftover interval (0, nodes[0])
    via a user-supplied leading power of the integrand.
    """

    length: float
    breakpoints: np.ndarray     # shape (P+1,), breakpoints[0] ~ length*min_rel
    nodes: np.ndarray           # all GL nodes, ascending
    weights: np.ndarray         # GL weights scaled to panels
    q: int

    @staticmethod
    def build(length: float, q: int = 16, ratio: float = 0.5,
              min_rel: float = 1e-12) -> "PanelGrid":
        if length <= 0:
            raise ValueError("grid length must be positive")
        bp = _graded_breakpoints(length, ratio, min_rel)
        x, w, _ = _reference_rule(q)
        # panel 0 covers (0, bp[0]]: treat like any other panel; the
        # integrand is evaluated at interior GL nodes so singular
        # endpoints are never touched.
        los = np.concatenate(([0.0], bp[:-1]))
        his = bp
        mids = 0.5 * (los + his)
        half = 0.5 * (his - los)
        nodes = (mids[:, None] + half[:, None] * x[None, :]).ravel()
        weights = (half[:, None] * w[None, :]).ravel()
        return PanelGrid(length=length, breakpoints=bp, nodes=nodes,
                         weights=weights, q=q)

    @property
    def npanels(self) -> int:
        return len(self.breakpoints)

    def cumulative(self, f: np.ndarray) -> np.ndarray:
        """Cumulative integral F(x) = int_0^x f at every node.

        ``f`` holds integrand values at ``self.nodes``.  The contribution
        of each panel interior is spectral; the first panel starts at 0,
        which is fine because its GL nodes avoid the endpoint and the
        interpolant integrates the (integrable) singular behavior at the
        accuracy of the graded layout.
        """
        q = self.q
        _, w, S = _reference_rule(q)
        P = self.npanels
        fv = f.reshape(P, q)
        los = np.concatenate(([0.0], self.breakpoints[:-1]))
        half = 0.5 * (self.breakpoints - los)
        panel_tot = (fv * w[None, :]).sum(axis=1) * half
        offsets = np.concatenate(([0.0], np.cumsum(panel_tot)[:-1]))
        partial = (fv @ S.T) * half[:, None]
        return (offsets[:, None] + partial).ravel()

    def integral(self, f: np.ndarray) -> float:
        return float(np.dot(self.weights, f))


def fornberg_weights(x0: float, x: np.ndarray, m: int) -> np.ndarray:
    """Finite-difference weights for the m-th derivative at x0 on the
    stencil x (Fornberg's recursion). Returns shape (m+1, len(x))."""
    n = len(x)
    c = np.zeros((m + 1, n))
    c1 = 1.0
    c4 = x[0] - x0
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = x[i] - x0
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[k, i] = c1 * (k * c[k - 1, i - 1] - c5 * c[k, i - 1]) / c2
                c[0, i] = -c1 * c5 * c[0, i - 1] / c2
            for k in range(mn, 0, -1):
                c[k, j] = (c4 * c[k, j] - k * c[k - 1, j]) / c3
            c[0, j] = c4 * c[0, j] / c3
        c1 = c2
    return c


def fd_derivative(x: np.ndarray, y: np.ndarray, order: int = 1,
                  stencil: int = 5) -> np.ndarray:
    """Derivative of tabulated data on an arbitrary grid.

    Uses ``stencil``-point Fornberg weights centered where possible and
    one-sided at the ends; the default 5-point stencil gives 4th-order
    first derivatives on smooth data.
    """
    n = len(x)
    if n < stencil:
        stencil = n
    half = stencil // 2
    out = np.empty(n)
    for i in range(n):
        lo = min(max(i - half, 0), n - stencil)
        sl = slice(lo, lo + stencil)
        w = fornberg_weights(x[i], x[sl], order)[order]
        out[i] = np.dot(w, y[sl])
    return out


def log_spaced(lo: float, hi: float, n: int) -> np.ndarray:
    return np.geomspace(lo, hi, n)


def powerlaw_fit(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    """Least-squares fit y ~ coeff * x^expo in log-log coordinates.

    Returns (expo, coeff, rms_residual); all y must be positive.
    """
    lx = np.log(x)
    ly = np.log(y)
    A = np.vstack([lx, np.ones_like(lx)]).T
    sol, *_ = np.linalg.lstsq(A, ly, rcond=None)
    expo, logc = sol
    resid = ly - A @ sol
    rms = float(np.sqrt(np.mean(resid**2)))
    return float(expo), float(np.exp(logc)), rms


def exponent_aware_fit(x: np.ndarray, y: np.ndarray,
                       exps: tuple[float, ...]) -> np.ndarray:
    """Solve/least-squares y = sum_k c_k x^(exps[k]); returns the c_k.

    This is Richardson-style elimination of known contaminant exponents:
    with len(x) == len(exps) it is the exact small Vandermonde solve.
    """
    A = np.column_stack([x**e for e in exps])
    if len(x) == len(exps):
        return np.linalg.solve(A, y)
    sol, *_ = np.linalg.lstsq(A, y, rcond=None)
    return sol
