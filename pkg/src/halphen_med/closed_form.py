"""Theta-constant solutions of Halphen I and Chazy, and the Fuchsian parametrization of Halphen II."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, PoleError, StationaryRatio
from .flows import HalphenABC
from .numerics import PathSpec, check_finite, integrate_path
from .special import FuchsianBasis, FuchsianParams, fuchsian_pair, fuchsian_rhs, theta_derivs


class Mobius(NamedTuple):
    """t -> (ma t + mb) / (mc t + md) with ma md - mb mc = 1."""

    ma: complex
    mb: complex
    mc: complex
    md: complex

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def validate(self, atol: float = 1e-12) -> "Mobius":
        check_finite(tuple(self), "Mobius coefficients")
        det = self.ma * self.md - self.mb * self.mc
        if abs(det - 1) > atol:
            raise DomainError(f"Mobius determinant must be 1, got {det}")
        return self


def _moebius_arg(m: Mobius, t: complex):
    m.validate()
    u = m.mc * t + m.md
    if u == 0:
        raise PoleError(f"mc*t + md vanishes at t={t}")
    tau = (m.ma * t + m.mb) / u
    if tau.imag <= 0:
        raise DomainError(f"transformed argument {tau} is not in the upper half-plane")
    return tau, u


def hal1_theta_solution(m: Mobius, t) -> np.ndarray:
    """(X, Y, Z) = 2 d/dt log[theta_{2,3,4}(0, tau(t)) (mc t + md)^(-1/2)]."""
    m = Mobius(*m)
    t = complex(t)
    tau, u = _moebius_arg(m, t)
    dtau = u ** -2
    out = []
    for kind in (2, 3, 4):
        th, dth = theta_derivs(kind, tau, 1)
        out.append(2 * (dth / th) * dtau - m.mc / u)
    return np.array(out, dtype=complex)


def _log_derivs(v):
    """First three derivatives of log f given [f, f', f'', f''']."""
    g1 = v[1] / v[0]
    g2 = v[2] / v[0] - g1**2
    g3 = v[3] / v[0] - 3 * v[2] * v[1] / v[0] ** 2 + 2 * g1**3
    return g1, g2, g3


def chazy_theta_solution(m: Mobius, t) -> np.ndarray:
    """(y, y', y'') for y = 4 d/dt log[theta_1'(0, tau(t)) (mc t + md)^(-3/2)]."""
    m = Mobius(*m)
    t = complex(t)
    tau, u = _moebius_arg(m, t)
    c = m.mc
    g1, g2, g3 = _log_derivs(theta_derivs(1, tau, 3))
    d1, d2, d3 = u**-2, -2 * c * u**-3, 6 * c**2 * u**-4
    y = 4 * g1 * d1 - 6 * c / u
    dy = 4 * (g2 * d1**2 + g1 * d2) + 6 * c**2 / u**2
    ddy = 4 * (g3 * d1**3 + 3 * g2 * d1 * d2 + g1 * d3) - 12 * c**3 / u**3
    return np.array([y, dy, ddy], dtype=complex)


STATIONARY_TOL = 1e-12


def _parametric_states(z, u, w, weight):
    """(t, dt/dz, states) from basis values u = (y1, y1', y2, y2').

    t = y1/y2 and the log-derivative weight is y = c1 y1 + c2 y2.
    """
    y1, dy1, y2, dy2 = u[..., 0], u[..., 1], u[..., 2], u[..., 3]
    c1, c2 = weight
    dtdz = w / y2**2
    if np.any(np.abs(dtdz) < STATIONARY_TOL):
        raise StationaryRatio("dt/dz vanishes: the ratio map is stationary")
    t = y1 / y2
    y, dy = c1 * y1 + c2 * y2, c1 * dy1 + c2 * dy2
    x1 = (dy / y) / dtdz
    x2 = x1 - (1 / z) / dtdz
    x3 = x1 - (1 / (z - 1)) / dtdz
    return t, dtdz, np.stack([x1, x2, x3], axis=-1)


@dataclass(frozen=True)
class ParametricHal2Solution:
    """Halphen II solution sampled along a z-path: x_j(z) and t(z) = y1/y2."""

    abc: HalphenABC
    basis: FuchsianBasis
    z: np.ndarray
    t: np.ndarray
    dtdz: np.ndarray
    states: np.ndarray
    weight: tuple = (0.0, 1.0)

    def local(self, k: int, tol: float = 1e-13):
        """Function z -> (t, dt/dz, state) near sample ``k``, re-integrating the basis."""
        rhs = fuchsian_rhs(self.basis.params)
        z0 = complex(self.z[k])
        u0 = self.basis.trajectory.y[k]
        w, weight = self.basis.wronskian, self.weight

        def at(z):
            z = complex(z)
            u = u0 if z == z0 else integrate_path(rhs, u0, PathSpec((z0, z)), tol).end_state
            return _parametric_states(z, u, w, weight)

        return at


def hal2_hypergeom_solution(p, z_path: PathSpec, tol: float = 1e-12, weight=(0.0, 1.0),
                            y_init=None) -> ParametricHal2Solution:
    """Solve Halphen II through the Fuchsian equation with potential
    (a+b)/z^2 + (c+b)/(z-1)^2 - 2b/(z(z-1)).

    With t = y1/y2 and y = y2, x1 = d/dt log y, x2 = d/dt log(y/z),
    x3 = d/dt log(y/(z-1)) solve Halphen II. ``weight = (c1, c2)`` selects
    y = c1 y1 + c2 y2 instead; only (0, c2) gives a solution, but the
    differences x_i - x_j never depend on it.
    """
    p = HalphenABC(*(complex(v) for v in p))
    if y_init is None:
        # y2(z0) != 0 is needed at the start point, so start from t = 0.
        y_init = ((0.0, 1.0), (1.0, 0.0))
    basis = fuchsian_pair(FuchsianParams(*p), z_path, y_init, tol)
    weight = tuple(complex(c) for c in weight)
    t, dtdz, states = _parametric_states(basis.z, basis.trajectory.y, basis.wronskian, weight)
    return ParametricHal2Solution(p, basis, basis.z, t, dtdz, states, weight)
