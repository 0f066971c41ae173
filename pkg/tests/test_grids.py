import numpy as np
import pytest

from hardysub.grids import (
    PanelGrid,
    exponent_aware_fit,
    fd_derivative,
    fornberg_weights,
    powerlaw_fit,
)


class TestPanelGrid:
    def test_integral_of_polynomial(self):
        g = PanelGrid.build(2.0, q=12)
        f = g.nodes**3
        assert g.integral(f) == pytest.approx(2.0**4 / 4, rel=1e-13)

    def test_integral_with_algebraic_singularity(self):
        # int_0^1 s^(-0.6) ds = 1/0.4
        g = PanelGrid.build(1.0, q=16)
        f = g.nodes**-0.6
        assert g.integral(f) == pytest.approx(2.5, rel=1e-9)

    def test_cumulative_matches_antiderivative(self):
        g = PanelGrid.build(1.5, q=16)
        f = np.cos(g.nodes)
        F = g.cumulative(f)
        assert np.max(np.abs(F - np.sin(g.nodes))) < 1e-12

    def test_cumulative_singular_integrand(self):
        # F(x) = int_0^x s^(-1/2) ds = 2 sqrt(x)
        g = PanelGrid.build(1.0, q=16)
        F = g.cumulative(g.nodes**-0.5)
        rel = np.abs(F - 2 * np.sqrt(g.nodes)) / (2 * np.sqrt(g.nodes))
        assert np.max(rel) < 1e-6


class TestFiniteDifferences:
    def test_fornberg_first_derivative_uniform(self):
        x = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
        w = fornberg_weights(0.0, x, 1)[1]
        expected = np.array([1 / 12, -8 / 12, 0.0, 8 / 12, -1 / 12])
        assert np.allclose(w, expected)

    def test_fd_derivative_on_graded_grid(self):
        x = np.geomspace(1e-4, 1.0, 120)
        y = x**3
        dy = fd_derivative(x, y, order=1)
        assert np.max(np.abs(dy - 3 * x**2) / (1 + 3 * x**2)) < 1e-8

    def test_second_derivative(self):
        x = np.geomspace(1e-3, 2.0, 200)
        y = np.exp(x)
        d2 = fd_derivative(x, y, order=2)
        interior = slice(3, -3)
        assert np.max(np.abs(d2[interior] - y[interior]) / y[interior]) < 1e-5


class TestFits:
    def test_powerlaw_exact(self):
        x = np.geomspace(1e-4, 1e-1, 50)
        expo, coeff, rms = powerlaw_fit(x, 3.0 * x**0.75)
        assert expo == pytest.approx(0.75, abs=1e-12)
        assert coeff == pytest.approx(3.0, rel=1e-12)
        assert rms < 1e-13

    def test_exponent_aware_fit_removes_contaminant(self):
        # v = 2 + 5 d^0.4 + 0.5 d: a plain slope estimate diverges, the
        # exponent-aware solve recovers all three coefficients.
        d = np.array([1e-8, 2e-8, 4e-8])
        v = 2.0 + 5.0 * d**0.4 + 0.5 * d
        c = exponent_aware_fit(d, v, (0.0, 0.4, 1.0))
        assert c[0] == pytest.approx(2.0, rel=1e-9)
        assert c[1] == pytest.approx(5.0, rel=1e-6)
        # the linear coefficient is the delicate one
        assert c[2] == pytest.approx(0.5, rel=1e-2)
