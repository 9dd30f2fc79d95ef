import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from halphen_med.closed_form import Mobius, hal1_theta_solution
from halphen_med.errors import BlowUp, DimensionMismatch, DomainError, TrajectoryTooCoarse
from halphen_med.flows import hal1_field
from halphen_med.numerics import (SIGMA1, SIGMA2, SIGMA3, PathSpec, adjugate, commutator,
                                  fd_derivative, integrate_path)

from conftest import random_complex


def exp_field(t, y):
    return y


class TestPathSpec:
    def test_rejects_short_or_repeated(self):
        with pytest.raises(DomainError):
            PathSpec((0,))
        with pytest.raises(DomainError):
            PathSpec((0, 1, 1))
        with pytest.raises(DomainError):
            PathSpec((0, complex("nan")))

    def test_point_and_locate(self):
        p = PathSpec((0, 1, 1 + 1j))
        assert p.length == pytest.approx(2.0)
        assert p.point(1.5) == pytest.approx(1 + 0.5j)
        assert p.locate(1 + 0.25j) == pytest.approx(1.25)
        with pytest.raises(TrajectoryTooCoarse):
            p.locate(0.5 + 0.5j)

    def test_distance(self):
        assert PathSpec((-1, 1)).distance_to(0.5j) == pytest.approx(0.5)


class TestIntegratePath:
    def test_zero_field_constant(self):
        tr = integrate_path(lambda t, y: np.zeros_like(y), [1, 2], PathSpec((1j, 2j)))
        assert np.allclose(tr.y, [1, 2], atol=0)
        assert tr.t[-1] == 2j

    def test_exponential(self):
        tol = 1e-8
        tr = integrate_path(exp_field, [1.0], PathSpec((0, 1)), tol)
        assert abs(tr.end_state[0] - np.e) < 10 * tol

    def test_exponential_complex_path(self):
        tr = integrate_path(exp_field, [1.0], PathSpec((0, 1j, 1 + 1j)), 1e-11)
        assert abs(tr.end_state[0] - cmath.exp(1 + 1j)) < 1e-9

    def test_hal1_against_theta_solution(self):
        m = Mobius.identity()
        tr = integrate_path(lambda t, y: hal1_field(y), hal1_theta_solution(m, 1j),
                            PathSpec((1j, 0.5 + 1j)), 1e-12)
        assert np.max(np.abs(tr.end_state - hal1_theta_solution(m, 0.5 + 1j))) < 1e-8

    def test_path_additive(self):
        tol = 1e-10
        whole = integrate_path(exp_field, [1.0], PathSpec((0, 2)), tol).end_state
        half = integrate_path(exp_field, [1.0], PathSpec((0, 1)), tol).end_state
        split = integrate_path(exp_field, half, PathSpec((1, 2)), tol).end_state
        assert abs(whole[0] - split[0]) < 10 * tol * abs(whole[0])

    def test_halving_tol_does_not_increase_error(self):
        errors = []
        for tol in (1e-5, 5e-6, 2.5e-6, 1.25e-6):
            tr = integrate_path(exp_field, [1.0], PathSpec((0, 1)), tol)
            errors.append(abs(tr.end_state[0] - np.e))
        assert all(b <= a * 1.000001 for a, b in zip(errors, errors[1:]))

    def test_samples_ordered_and_errors_nonnegative(self):
        tr = integrate_path(exp_field, [1.0], PathSpec((0, 1, 1 + 1j)), 1e-9)
        assert np.all(np.diff(tr.s) > 0)
        assert np.all(tr.err >= 0)
        assert np.all(np.isfinite(tr.y))
        assert tr.complete

    def test_blow_up_at_pole(self):
        # y' = y^2, y(0) = 1 has a pole at t = 1
        with pytest.raises(BlowUp) as info:
            integrate_path(lambda t, y: y * y, [1.0], PathSpec((0, 2)), 1e-10)
        partial = info.value.partial
        assert partial is not None and not partial.complete
        assert partial.t[-1].real < 1.0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            integrate_path(lambda t, y: np.zeros(3), [1.0, 2.0], PathSpec((0, 1)))

    def test_bad_tol_and_nonfinite_start(self):
        with pytest.raises(DomainError):
            integrate_path(exp_field, [1.0], PathSpec((0, 1)), 0.0)
        with pytest.raises(DomainError):
            integrate_path(exp_field, [np.inf], PathSpec((0, 1)))

    def test_dense_output_and_local_solution(self):
        tr = integrate_path(exp_field, [1.0], PathSpec((0, 1)), 1e-12)
        s = 0.3737
        assert abs(tr.interpolate(s)[0] - np.exp(s)) < 1e-7
        assert abs(tr.at_time(s)[0] - np.exp(s)) < 1e-7
        assert abs(tr.derivative(s)[0] - np.exp(s)) < 1e-7
        solve = tr.local_solution(s)
        assert abs(solve(s + 0.01j)[0] - cmath.exp(s + 0.01j)) < 1e-12
        with pytest.raises(TrajectoryTooCoarse):
            tr.interpolate(1.5)


class TestFdDerivative:
    def test_polynomial(self):
        assert abs(fd_derivative(lambda z: z * z, 3, 1e-3) - 6) < 1e-10

    def test_exp(self):
        assert abs(fd_derivative(cmath.exp, 0) - 1) < 1e-10

    def test_matrix_valued(self):
        d = fd_derivative(lambda z: np.array([[z, z**2], [z**3, 1]]), 2.0)
        assert np.allclose(d, [[1, 4], [12, 0]], atol=1e-9)

    def test_fourth_order(self):
        # halving h cuts the error by ~16
        f, z0 = cmath.sin, 0.7
        e1 = abs(fd_derivative(f, z0, 0.1) - cmath.cos(z0))
        e2 = abs(fd_derivative(f, z0, 0.05) - cmath.cos(z0))
        assert 12 < e1 / e2 < 20


class TestAdjugate:
    def test_examples(self):
        assert np.allclose(adjugate(np.eye(3)), np.eye(3))
        w = np.array([2.0, 3.0, 5.0 + 1j])
        assert np.allclose(adjugate(np.diag(w)), np.diag([w[1] * w[2], w[2] * w[0], w[0] * w[1]]))
        u, v = np.array([1, 2, 3j]), np.array([1j, -1, 2])
        rank1 = np.outer(u, v)
        assert np.allclose(adjugate(rank1) @ rank1, 0, atol=1e-13)

    def test_identity_random(self, rng):
        for _ in range(50):
            m = random_complex(rng, 3, 3) * 0.5
            adj, det = adjugate(m), np.linalg.det(m)
            norm = max(1.0, abs(det))
            assert np.max(np.abs(adj @ m - det * np.eye(3))) < 1e-13 * norm
            assert np.max(np.abs(m @ adj - det * np.eye(3))) < 1e-13 * norm

    def test_wrong_dimension(self):
        with pytest.raises(DimensionMismatch):
            adjugate(np.eye(2))


class TestCommutator:
    def test_pauli(self):
        assert np.allclose(commutator(SIGMA1, SIGMA2), 2j * SIGMA3)

    def test_trivial(self, rng):
        a = random_complex(rng, 3, 3)
        assert np.allclose(commutator(a, a), 0)
        assert np.allclose(commutator(a, np.eye(3)), 0)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            commutator(np.eye(2), np.eye(3))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(2, 3), st.integers(0, 2**32 - 1))
    def test_traceless_and_antisymmetric(self, n, seed):
        rng = np.random.default_rng(seed)
        a, b = random_complex(rng, n, n), random_complex(rng, n, n)
        c = commutator(a, b)
        assert abs(np.trace(c)) < 1e-14 * max(1.0, np.abs(a).max() * np.abs(b).max())
        assert np.allclose(c, -commutator(b, a))
