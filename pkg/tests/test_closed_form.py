import numpy as np
import pytest

from halphen_med.closed_form import (Mobius, chazy_theta_solution, hal1_theta_solution,
                                     hal2_hypergeom_solution)
from halphen_med.errors import DomainError, PathThroughSingularity, PoleError, StationaryRatio
from halphen_med.flows import HalphenABC, chazy_field, hal1_field, hal2_field
from halphen_med.numerics import PathSpec, fd_derivative
from halphen_med.special import CHAZY_ABC
from halphen_med.transforms import hal2_to_hal1_state

ID = Mobius.identity()
SHIFT = Mobius(1, 1, 0, 1)
INVERT = Mobius(2, 1, 1, 1)
Z_PATH = PathSpec((0.5 + 0.5j, 0.3 + 0.6j, 0.6 + 0.8j))
T_GRID = [1j, 0.3 + 1j, -0.4 + 0.8j, 1.2j, 0.1 + 1.5j]


def hal2_residuals(sol, abc, n=10):
    out = []
    for k in np.unique(np.linspace(0, len(sol.z) - 1, n).round().astype(int)):
        local = sol.local(int(k))
        dxdz = fd_derivative(lambda z: local(z)[2], complex(sol.z[k]), 1e-3)
        out.append(np.abs(dxdz / sol.dtdz[k] - hal2_field(sol.states[k], abc)).max())
    return np.array(out)


class TestHal1Theta:
    @pytest.mark.parametrize("m", [ID, SHIFT, INVERT])
    @pytest.mark.parametrize("t", T_GRID)
    def test_satisfies_hal1(self, m, t):
        d = fd_derivative(lambda s: hal1_theta_solution(m, s), t, 1e-3)
        assert np.abs(d - hal1_field(hal1_theta_solution(m, t))).max() < 1e-8

    def test_decay(self):
        X, Y, Z = hal1_theta_solution(ID, 5j)
        assert abs(Y) < 1e-4 and abs(Z) < 1e-4

    def test_mobius_validation(self):
        with pytest.raises(DomainError):
            hal1_theta_solution(Mobius(1, 1, 1, 1), 1j)
        with pytest.raises(PoleError):
            hal1_theta_solution(Mobius(0, -1, 1, 0), 0)
        with pytest.raises(DomainError):
            hal1_theta_solution(ID, -1j)


class TestChazyTheta:
    @pytest.mark.parametrize("m", [ID, SHIFT, INVERT])
    @pytest.mark.parametrize("t", T_GRID)
    def test_consistency_with_hal1(self, m, t):
        y = chazy_theta_solution(m, t)[0]
        ref = 2 * hal1_theta_solution(m, t).sum()
        assert abs(y - ref) / abs(ref) < 1e-10

    @pytest.mark.parametrize("m", [ID, INVERT])
    def test_chazy_residual(self, m):
        t = 1j
        y, dy, ddy = chazy_theta_solution(m, t)
        dddy = fd_derivative(lambda s: chazy_theta_solution(m, s)[2], t, 1e-3)
        assert abs(dddy - (2 * y * ddy - 3 * dy**2)) < 1e-7

    def test_analytic_derivatives(self):
        t = 0.2 + 1.1j
        v = chazy_theta_solution(ID, t)
        for k in (0, 1):
            d = fd_derivative(lambda s: chazy_theta_solution(ID, s)[k], t, 1e-3)
            assert abs(d - v[k + 1]) < 1e-8
        assert np.abs(chazy_field(v)[:2] - v[1:]).max() == 0

    def test_large_imaginary_limit(self):
        # y = 4 d/dt log theta_1' with theta_1' ~ 2 q^(1/4), q = exp(i pi t): y -> i pi
        assert abs(chazy_theta_solution(ID, 10j)[0] - 1j * np.pi) < 1e-3


class TestHal2Hypergeom:
    @pytest.mark.parametrize("abc", [CHAZY_ABC, (-1 / 8, -1 / 8, -1 / 8), (0.05 + 0.02j, -0.1, 0.07)])
    def test_solves_hal2(self, abc):
        sol = hal2_hypergeom_solution(abc, Z_PATH)
        assert hal2_residuals(sol, HalphenABC(*abc)).max() < 1e-6
        assert sol.basis.wronskian_drift < 1e-10

    def test_eighth_maps_to_hal1(self):
        abc = HalphenABC(-1 / 8, -1 / 8, -1 / 8)
        sol = hal2_hypergeom_solution(abc, Z_PATH)
        k = len(sol.z) // 2
        local = sol.local(k)
        dXdz = fd_derivative(lambda z: hal2_to_hal1_state(local(z)[2]), complex(sol.z[k]), 1e-3)
        X = hal2_to_hal1_state(sol.states[k])
        assert np.abs(dXdz / sol.dtdz[k] - hal1_field(X)).max() < 1e-6

    def test_difference_identity(self):
        sol = hal2_hypergeom_solution(CHAZY_ABC, Z_PATH)
        diff = sol.states[:, 0] - sol.states[:, 1]
        assert np.abs(diff - (1 / sol.z) / sol.dtdz).max() < 1e-13 * np.abs(diff).max()

    @pytest.mark.parametrize("weight", [(0, 3.5), (0, 1 - 2j), (0.4, 1)])
    def test_differences_independent_of_weight(self, weight):
        a = hal2_hypergeom_solution(CHAZY_ABC, Z_PATH)
        b = hal2_hypergeom_solution(CHAZY_ABC, Z_PATH, weight=weight)
        for i, j in [(0, 1), (1, 2), (2, 0)]:
            da = a.states[:, i] - a.states[:, j]
            db = b.states[:, i] - b.states[:, j]
            assert np.abs(da - db).max() < 1e-13 * np.abs(da).max()

    def test_constant_multiple_of_y_unchanged(self):
        a = hal2_hypergeom_solution(CHAZY_ABC, Z_PATH)
        b = hal2_hypergeom_solution(CHAZY_ABC, Z_PATH, weight=(0, 7))
        assert np.abs(a.states - b.states).max() < 1e-13 * np.abs(a.states).max()

    def test_dtdz_against_fd(self):
        sol = hal2_hypergeom_solution(CHAZY_ABC, Z_PATH)
        for k in (1, len(sol.z) // 2, len(sol.z) - 2):
            local = sol.local(k)
            d = fd_derivative(lambda z: local(z)[0], complex(sol.z[k]), 1e-3)
            assert abs(d - sol.dtdz[k]) < 1e-8 * max(1, abs(d))

    def test_ratio_varies(self):
        sol = hal2_hypergeom_solution(CHAZY_ABC, Z_PATH)
        assert np.all(np.abs(np.diff(sol.t)) > 0)

    def test_singular_path(self):
        with pytest.raises(PathThroughSingularity):
            hal2_hypergeom_solution(CHAZY_ABC, PathSpec((0.5 + 0.5j, 0.0005j)))

    def test_stationary_ratio(self):
        # a tiny Wronskian makes dt/dz vanish
        with pytest.raises(StationaryRatio):
            hal2_hypergeom_solution(CHAZY_ABC, Z_PATH, y_init=((0, 1e-13), (1, 0)))
