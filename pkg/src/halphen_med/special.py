"""Jacobi theta constants with tau-derivatives, and the Fuchsian two-solution basis.

The nome prefactors are written as ``exp(i*pi*tau*(n+1/2)**2)`` directly,
so no fractional power of ``q`` is ever taken.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (ConvergenceFailure, DegenerateInitialData, DomainError,
                     PathThroughSingularity)
from .numerics import PathSpec, Trajectory, check_finite, integrate_path

SERIES_RTOL = 1e-16
MAX_TERMS = 500

# Chazy hypergeometric equation x(1-x)y'' + (1/2 - 7/6 x)y' - y/144 = 0:
# recorded as data only, (a, b, c) of the matching Halphen II system.
CHAZY_HYPERGEOM = {"c": 0.5, "a_plus_b_plus_1": 7 / 6, "ab": 1 / 144}
CHAZY_ABC = (-31 / 288, -23 / 288, -41 / 288)


def _check_tau(tau) -> complex:
    tau = complex(tau)
    check_finite(tau, "tau")
    if tau.imag <= 0:
        raise DomainError(f"tau must lie in the upper half-plane, got {tau}")
    return tau


def _series(tau: complex, exponent, coefficient, start: int, order: int) -> np.ndarray:
    """Sum ``coefficient(n) * exp(i pi tau e(n))`` and its first ``order`` tau-derivatives.

    Terms are added until the next one is below ``SERIES_RTOL * (1 + |partial sum|)``
    for every derivative order.
    """
    ipi = 1j * np.pi
    sums = np.zeros(order + 1, dtype=complex)
    for count, n in enumerate(range(start, start + MAX_TERMS + 1)):
        e = exponent(n)
        base = coefficient(n) * np.exp(ipi * tau * e)
        terms = base * (ipi * e) ** np.arange(order + 1)
        if count > 0 and np.all(np.abs(terms) < SERIES_RTOL * (1 + np.abs(sums))):
            return sums
        sums += terms
    raise ConvergenceFailure(f"theta series did not converge in {MAX_TERMS} terms at tau={tau}")


def theta_derivs(kind: int, tau, order: int = 1) -> np.ndarray:
    """``[theta_k, d/dtau theta_k, ..., d^order/dtau^order theta_k]`` at z = 0.

    ``kind`` is 2, 3 or 4, or 1 for the z-derivative theta_1'(0, tau).
    """
    tau = _check_tau(tau)
    if kind == 3:
        rest = _series(tau, lambda n: n * n, lambda n: 2.0, 1, order)
        rest[0] += 1.0
        return rest
    if kind == 4:
        rest = _series(tau, lambda n: n * n, lambda n: 2.0 * (-1) ** n, 1, order)
        rest[0] += 1.0
        return rest
    if kind == 2:
        return _series(tau, lambda n: (n + 0.5) ** 2, lambda n: 2.0, 0, order)
    if kind == 1:
        return _series(tau, lambda n: (n + 0.5) ** 2, lambda n: 2.0 * (-1) ** n * (2 * n + 1), 0, order)
    raise DomainError(f"theta kind must be 1, 2, 3 or 4, got {kind}")


def theta_const(kind: int, tau) -> complex:
    """theta_kind(0, tau) for kind in {2, 3, 4}."""
    if kind not in (2, 3, 4):
        raise DomainError(f"theta_const kind must be 2, 3 or 4, got {kind}")
    return complex(theta_derivs(kind, tau, 0)[0])


def theta_tau_deriv(kind: int, tau) -> complex:
    if kind not in (2, 3, 4):
        raise DomainError(f"theta_tau_deriv kind must be 2, 3 or 4, got {kind}")
    return complex(theta_derivs(kind, tau, 1)[1])


def theta1_prime(tau) -> tuple[complex, complex]:
    """(theta_1'(0, tau), d/dtau of it)."""
    v = theta_derivs(1, tau, 1)
    return complex(v[0]), complex(v[1])


class FuchsianParams(NamedTuple):
    a: complex
    b: complex
    c: complex


def fuchsian_potential(p: FuchsianParams, z: complex) -> complex:
    """V(z) in y'' = V(z) y."""
    a, b, c = p
    return (a + b) / z**2 + (c + b) / (z - 1) ** 2 - 2 * b / (z * (z - 1))


def fuchsian_rhs(p: FuchsianParams):
    """First-order form on (y1, y1', y2, y2')."""

    def rhs(z, u):
        v = fuchsian_potential(p, z)
        return np.array([u[1], v * u[0], u[3], v * u[2]])

    return rhs


def wronskian(y1, dy1, y2, dy2):
    """w = y1' y2 - y1 y2'."""
    return dy1 * y2 - y1 * dy2


@dataclass(frozen=True)
class FuchsianBasis:
    """Two solutions of the Fuchsian equation integrated along a z-path."""

    params: FuchsianParams
    trajectory: Trajectory
    wronskian: complex

    @property
    def z(self) -> np.ndarray:
        return self.trajectory.t

    @property
    def y1(self) -> np.ndarray:
        return self.trajectory.y[:, 0]

    @property
    def dy1(self) -> np.ndarray:
        return self.trajectory.y[:, 1]

    @property
    def y2(self) -> np.ndarray:
        return self.trajectory.y[:, 2]

    @property
    def dy2(self) -> np.ndarray:
        return self.trajectory.y[:, 3]

    @property
    def wronskian_drift(self) -> float:
        """Largest relative deviation of the sampled Wronskian from its initial value."""
        w = wronskian(self.y1, self.dy1, self.y2, self.dy2)
        return float(np.max(np.abs(w - self.wronskian)) / abs(self.wronskian))


def fuchsian_pair(params, z_path: PathSpec, y_init=None, tol: float = 1e-12) -> FuchsianBasis:
    """Integrate two solutions of y'' = V(z) y along ``z_path``.

    ``y_init`` is ``((y1, y1'), (y2, y2'))`` at the path start; the default
    is ``((1, 0), (0, 1))`` with Wronskian -1.
    """
    params = FuchsianParams(*(complex(v) for v in params))
    check_finite(params, "Fuchsian parameters")
    for sing in (0.0, 1.0):
        if z_path.distance_to(sing) < 1e-3:
            raise PathThroughSingularity(f"z-path passes within 1e-3 of the singular point z={sing:g}")
    if y_init is None:
        y_init = ((1.0, 0.0), (0.0, 1.0))
    (y1, dy1), (y2, dy2) = y_init
    w = complex(wronskian(y1, dy1, y2, dy2))
    if abs(w) == 0.0:
        raise DegenerateInitialData("initial solutions are linearly dependent (zero Wronskian)")
    traj = integrate_path(fuchsian_rhs(params), [y1, dy1, y2, dy2], z_path, tol)
    return FuchsianBasis(params, traj, w)
