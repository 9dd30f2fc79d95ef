import cmath

import mpmath as mp
import numpy as np
import pytest

from halphen_med.errors import DegenerateInitialData, DomainError, PathThroughSingularity
from halphen_med.numerics import PathSpec, fd_derivative
from halphen_med.special import (CHAZY_ABC, FuchsianParams, fuchsian_pair, theta1_prime,
                                 theta_const, theta_derivs, theta_tau_deriv, wronskian)

TAU_GRID = [0.8j, 1j, 1.3j, 0.2 + 0.9j, -0.4 + 1.1j, 0.5 + 1.5j, 1.7j, 0.1 + 2j, -0.3 + 2.5j, 3j]


def brute_theta(kind, tau, terms=200):
    mp.mp.dps = 40
    tau = mp.mpc(tau)
    q = lambda e: mp.exp(1j * mp.pi * tau * e)  # noqa: E731
    if kind == 3:
        return complex(1 + 2 * sum(q(n * n) for n in range(1, terms)))
    if kind == 4:
        return complex(1 + 2 * sum((-1) ** n * q(n * n) for n in range(1, terms)))
    if kind == 2:
        return complex(2 * sum(q((n + mp.mpf(1) / 2) ** 2) for n in range(terms)))
    return complex(2 * sum((-1) ** n * (2 * n + 1) * q((n + mp.mpf(1) / 2) ** 2) for n in range(terms)))


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class TestThetaConst:
    def test_large_imaginary_tau(self):
        assert abs(theta_const(3, 10j) - (1 + 2 * np.exp(-10 * np.pi))) < 1e-15

    def test_theta2_decays(self):
        ys = np.linspace(1, 10, 20)
        vals = [abs(theta_const(2, 1j * y)) for y in ys]
        assert all(b < a for a, b in zip(vals, vals[1:]))
        assert vals[-1] < 1e-3

    @pytest.mark.parametrize("kind", [2, 3, 4])
    def test_against_brute_force_series(self, kind):
        assert rel(theta_const(kind, 1j), brute_theta(kind, 1j)) < 1e-14

    @pytest.mark.parametrize("tau", TAU_GRID)
    @pytest.mark.parametrize("kind", [2, 3, 4])
    def test_against_mpmath_jtheta(self, kind, tau):
        mp.mp.dps = 30
        ref = complex(mp.jtheta(kind, 0, mp.exp(1j * mp.pi * tau)))
        assert rel(theta_const(kind, tau), ref) < 1e-13

    def test_domain(self):
        with pytest.raises(DomainError):
            theta_const(3, 0.5)
        with pytest.raises(DomainError):
            theta_const(3, 1 - 1j)
        with pytest.raises(DomainError):
            theta_const(1, 1j)

    def test_deterministic(self):
        assert theta_const(2, 0.3 + 0.7j) == theta_const(2, 0.3 + 0.7j)
        assert theta1_prime(0.3 + 0.7j) == theta1_prime(0.3 + 0.7j)

    @pytest.mark.parametrize("tau", TAU_GRID)
    def test_jacobi_quartic(self, tau):
        t2, t3, t4 = (theta_const(k, tau) for k in (2, 3, 4))
        assert rel(t2**4 + t4**4, t3**4) < 1e-12


class TestThetaDerivatives:
    @pytest.mark.parametrize("kind", [2, 3, 4])
    def test_matches_fd_at_i(self, kind):
        fd = fd_derivative(lambda t: theta_const(kind, t), 1j)
        assert abs(theta_tau_deriv(kind, 1j) - fd) < 1e-9

    @pytest.mark.parametrize("tau", TAU_GRID)
    @pytest.mark.parametrize("kind", [2, 3, 4])
    def test_relative_fd_on_grid(self, kind, tau):
        fd = fd_derivative(lambda t: theta_const(kind, t), tau, 1e-3)
        assert rel(theta_tau_deriv(kind, tau), fd) < 1e-8

    def test_leading_term_theta3(self):
        q = np.exp(-10 * np.pi)
        expected = 2j * np.pi * q + 2 * 4j * np.pi * q**4
        assert abs(theta_tau_deriv(3, 10j) - expected) < 1e-15

    def test_linearity(self):
        tau = 0.2 + 0.9j
        both = fd_derivative(lambda t: theta_const(3, t) + theta_const(4, t), tau)
        assert abs(both - (theta_tau_deriv(3, tau) + theta_tau_deriv(4, tau))) < 1e-9

    @pytest.mark.parametrize("kind", [1, 2, 3, 4])
    def test_higher_orders_by_fd(self, kind):
        tau = 0.3 + 1.1j
        v = theta_derivs(kind, tau, 3)
        for k in (1, 2, 3):
            fd = fd_derivative(lambda t: theta_derivs(kind, t, 3)[k - 1], tau, 1e-3)
            assert rel(v[k], fd) < 1e-8


class TestTheta1Prime:
    @pytest.mark.parametrize("tau", [1j, 1 + 2j, 0.3 + 0.9j])
    def test_jacobi_triple_product(self, tau):
        value, _ = theta1_prime(tau)
        assert rel(value, theta_const(2, tau) * theta_const(3, tau) * theta_const(4, tau)) < 1e-12

    def test_against_brute_force(self):
        assert rel(theta1_prime(0.3 + 0.9j)[0], brute_theta(1, 0.3 + 0.9j)) < 1e-14

    def test_tau_derivative_fd(self):
        fd = fd_derivative(lambda t: theta1_prime(t)[0], 2j)
        assert abs(theta1_prime(2j)[1] - fd) < 1e-9

    def test_leading_term(self):
        assert rel(abs(theta1_prime(10j)[0]), 2 * np.exp(-10 * np.pi / 4)) < 1e-12


class TestFuchsianPair:
    def test_zero_parameters_exact(self):
        path = PathSpec((0.5 + 0.5j, 2 + 1j, 3 - 1j))
        basis = fuchsian_pair((0, 0, 0), path, ((0.5 + 0.5j, 1), (1, 0)))
        assert basis.wronskian == 1
        assert np.allclose(basis.y1, basis.z, atol=1e-13)
        assert np.allclose(basis.y2, 1, atol=1e-13)

    def test_default_basis(self):
        basis = fuchsian_pair((0.1, 0.2, 0.3), PathSpec((0.5 + 0.5j, 0.6 + 0.8j)))
        assert basis.wronskian == -1
        assert basis.y1[0] == 1 and basis.dy1[0] == 0

    def test_wronskian_constant_on_loop(self):
        # closed loop around z = 1/2, midway between the singular points
        verts = [0.5 + 0.3 * cmath.exp(2j * np.pi * k / 12) for k in range(13)]
        for params in [(0.1, -0.2, 0.3), CHAZY_ABC, (0.2 + 0.1j, 0.05, -0.3j)]:
            basis = fuchsian_pair(params, PathSpec(tuple(verts)))
            assert basis.wronskian_drift < 1e-10

    def test_matches_series_solution(self):
        # y'' = (a+b)/z^2 y with b=c=0 has y = z^r, r(r-1) = a
        a = 0.75
        r = 1.5
        z0 = 2.0
        basis = fuchsian_pair(FuchsianParams(a, 0, 0), PathSpec((z0, 3 + 1j)),
                              ((z0**r, r * z0 ** (r - 1)), (1, 0)))
        assert abs(basis.y1[-1] - (3 + 1j) ** r) < 1e-10

    def test_rejects_singular_path(self):
        with pytest.raises(PathThroughSingularity):
            fuchsian_pair((0, 0, 0), PathSpec((-1 + 0.0005j, 1 + 0.0005j)))
        with pytest.raises(PathThroughSingularity):
            fuchsian_pair((0, 0, 0), PathSpec((0.5, 1.0005)))

    def test_rejects_dependent_initial_data(self):
        with pytest.raises(DegenerateInitialData):
            fuchsian_pair((0, 0, 0), PathSpec((0.5j, 1j)), ((1, 2), (2, 4)))

    def test_wronskian_convention(self):
        assert wronskian(1, 0, 0, 1) == -1
