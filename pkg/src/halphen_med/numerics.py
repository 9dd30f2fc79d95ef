"""Complex-path ODE integration, finite-difference oracles and small matrix helpers.

All Halphen-type systems are integrated in complex time along a polyline.
Each straight segment is parametrized by arc length ``s`` and the field is
multiplied by the unit direction of the segment, so a real-parameter
Dormand-Prince 5(4) pair does the work.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

import numpy as np

from .errors import BlowUp, DimensionMismatch, DomainError, TrajectoryTooCoarse

STATE_CAP = 1e8
MIN_STEP_FRACTION = 1e-12

# Dormand-Prince 5(4), FSAL.
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_B4 = np.array([5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
_E = _B5 - _B4

Field = Callable[[complex, np.ndarray], np.ndarray]


def check_finite(value, name="value"):
    arr = np.asarray(value)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PathSpec:
    """Polyline in the complex plane, traversed vertex to vertex."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        if len(verts) < 2:
            raise DomainError("a path needs at least two vertices")
        check_finite(verts, "path vertices")
        for a, b in zip(verts, verts[1:]):
            if a == b:
                raise DomainError(f"consecutive path vertices coincide at {a}")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def line(cls, start, end):
        return cls((start, end))

    @property
    def lengths(self) -> np.ndarray:
        v = np.array(self.vertices)
        return np.abs(np.diff(v))

    @property
    def length(self) -> float:
        return float(self.lengths.sum())

    @property
    def breakpoints(self) -> np.ndarray:
        """Cumulative arc length at each vertex."""
        return np.concatenate([[0.0], np.cumsum(self.lengths)])

    def point(self, s: float) -> complex:
        """Complex time at arc length ``s``."""
        bp = self.breakpoints
        k = int(np.clip(np.searchsorted(bp, s, side="right") - 1, 0, len(bp) - 2))
        a, b = self.vertices[k], self.vertices[k + 1]
        return a + (s - bp[k]) * (b - a) / abs(b - a)

    def direction(self, s: float) -> complex:
        bp = self.breakpoints
        k = int(np.clip(np.searchsorted(bp, s, side="right") - 1, 0, len(bp) - 2))
        a, b = self.vertices[k], self.vertices[k + 1]
        return (b - a) / abs(b - a)

    def locate(self, t: complex, atol: float = 1e-12) -> float:
        """Arc length of the path point equal to ``t``.

        Raises TrajectoryTooCoarse if ``t`` is not on the path.
        """
        bp = self.breakpoints
        scale = max(1.0, self.length)
        for k, (a, b) in enumerate(zip(self.vertices, self.vertices[1:])):
            d = b - a
            u = ((t - a) * np.conj(d)).real / abs(d) ** 2
            if -atol <= u <= 1 + atol and abs(a + u * d - t) <= atol * scale:
                return float(bp[k] + np.clip(u, 0.0, 1.0) * abs(d))
        raise TrajectoryTooCoarse(f"t={t} does not lie on the path")

    def distance_to(self, z: complex) -> float:
        """Smallest distance from ``z`` to the polyline."""
        best = np.inf
        for a, b in zip(self.vertices, self.vertices[1:]):
            d = b - a
            u = np.clip(((z - a) * np.conj(d)).real / abs(d) ** 2, 0.0, 1.0)
            best = min(best, abs(a + u * d - z))
        return float(best)


@dataclass(frozen=True)
class Trajectory:
    """Accepted steps of an integration along a path, with cubic Hermite dense output.

    ``s`` is arc length along ``path``; ``y[k]`` is the state at ``t[k]`` and
    ``dydt[k]`` the field value there.
    """

    path: PathSpec
    s: np.ndarray
    t: np.ndarray
    y: np.ndarray
    dydt: np.ndarray
    err: np.ndarray
    field: Field = dc_field(repr=False, compare=False)
    tol: float = 1e-10
    n_rejected: int = 0
    complete: bool = True

    @property
    def n_steps(self) -> int:
        return len(self.s) - 1

    @property
    def end_state(self) -> np.ndarray:
        return self.y[-1]

    @property
    def end_param(self) -> float:
        return float(self.s[-1])

    def param_grid(self, n: int, margin: float = 0.0) -> np.ndarray:
        """``n`` arc-length values spread evenly over the computed range."""
        lo, hi = float(self.s[0]), float(self.s[-1])
        pad = margin * (hi - lo)
        return np.linspace(lo + pad, hi - pad, n)

    def time_at(self, s: float) -> complex:
        return self.path.point(s)

    def _check_param(self, s):
        lo, hi = self.s[0], self.s[-1]
        eps = 1e-12 * max(1.0, hi)
        if not (lo - eps <= s <= hi + eps):
            raise TrajectoryTooCoarse(f"path parameter {s} outside computed range [{lo}, {hi}]")

    def interpolate(self, s: float) -> np.ndarray:
        """State at arc length ``s`` by cubic Hermite interpolation."""
        self._check_param(s)
        k = int(np.clip(np.searchsorted(self.s, s, side="right") - 1, 0, len(self.s) - 2))
        s0, s1 = self.s[k], self.s[k + 1]
        h = s1 - s0
        # both ends of a piece lie on the same segment
        direction = self.path.direction(0.5 * (s0 + s1))
        f0 = self.dydt[k] * direction
        f1 = self.dydt[k + 1] * direction
        u = (s - s0) / h
        h00 = 2 * u**3 - 3 * u**2 + 1
        h10 = u**3 - 2 * u**2 + u
        h01 = -2 * u**3 + 3 * u**2
        h11 = u**3 - u**2
        return h00 * self.y[k] + h10 * h * f0 + h01 * self.y[k + 1] + h11 * h * f1

    def at_time(self, t: complex) -> np.ndarray:
        return self.interpolate(self.path.locate(t))

    def derivative(self, s: float) -> np.ndarray:
        """dy/dt at arc length ``s``, from the field the trajectory was integrated with."""
        return np.asarray(self.field(self.time_at(s), self.interpolate(s)))

    def local_solution(self, s: float, tol: float = 1e-13) -> Callable[[complex], np.ndarray]:
        """Accurate solution near ``time_at(s)``, valid at any complex t close to it.

        Re-integrates from the accepted step nearest to ``s`` along a straight
        line, so the returned function is smooth in t up to ``tol``; used by
        finite-difference oracles.
        """
        self._check_param(s)
        k = int(np.argmin(np.abs(self.s - s)))
        t0, y0 = complex(self.t[k]), self.y[k]

        def solve(t):
            t = complex(t)
            if abs(t - t0) < 1e-15:
                return y0.copy()
            return integrate_path(self.field, y0, PathSpec((t0, t)), tol).end_state

        return solve


def _initial_step(rhs, s0, y0, f0, tol, span):
    scale = tol * (1.0 + np.abs(y0))
    d0 = np.max(np.abs(y0) / scale)
    d1 = np.max(np.abs(f0) / scale)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    h0 = min(h0, span)
    f1 = rhs(s0 + h0, y0 + h0 * f0)
    d2 = np.max(np.abs(f1 - f0) / scale) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1 / 5)
    return min(100 * h0, h1, span)


def integrate_path(field: Field, y0, path: PathSpec, tol: float = 1e-10) -> Trajectory:
    """Integrate ``dy/dt = field(t, y)`` from ``y0`` along ``path``.

    Step acceptance requires ``|err_i| <= tol * (1 + |y_i|)`` componentwise.
    Raises BlowUp when the state norm exceeds 1e8 or the step falls below
    1e-12 of the segment length; the exception carries the partial trajectory.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    y = np.array(y0, dtype=complex).ravel()
    check_finite(y, "initial state")
    f = np.asarray(field(path.vertices[0], y), dtype=complex).ravel()
    if f.shape != y.shape:
        raise DimensionMismatch(f"field returned shape {f.shape} for state of shape {y.shape}")

    ss, ts, ys, fs, errs = [0.0], [path.vertices[0]], [y.copy()], [f.copy()], [0.0]
    n_rejected = 0
    s_base = 0.0

    def partial(complete=False):
        return Trajectory(path, np.array(ss), np.array(ts), np.array(ys), np.array(fs),
                          np.array(errs), field, tol, n_rejected, complete)

    h = None
    for a, b, seg_len in zip(path.vertices, path.vertices[1:], path.lengths):
        direction = (b - a) / seg_len

        def rhs(sigma, yy, a=a, direction=direction):
            return direction * np.asarray(field(a + sigma * direction, yy), dtype=complex).ravel()

        sigma = 0.0
        k1 = direction * f
        if h is None:
            h = _initial_step(rhs, 0.0, y, k1, tol, seg_len)
        h = min(h, seg_len)
        h_min = MIN_STEP_FRACTION * seg_len
        err_prev = 1.0
        while sigma < seg_len:
            last = sigma + h >= seg_len * (1 - 1e-14)
            if last:
                h = seg_len - sigma
            k = [k1]
            for i in range(1, 7):
                yi = y + h * sum(aij * kj for aij, kj in zip(_A[i], k))
                k.append(rhs(sigma + _C[i] * h, yi))
            y_new = y + h * sum(bi * ki for bi, ki in zip(_B5, k))
            err_vec = h * sum(ei * ki for ei, ki in zip(_E, k))
            if not np.all(np.isfinite(y_new)) or not np.all(np.isfinite(err_vec)):
                err = np.inf
            else:
                err = float(np.max(np.abs(err_vec) / (tol * (1.0 + np.maximum(np.abs(y), np.abs(y_new))))))
            if err <= 1.0:
                sigma = seg_len if last else sigma + h
                y = y_new
                k1 = k[6]
                f = k1 / direction
                ss.append(s_base + sigma)
                ts.append(b if last else a + sigma * direction)
                ys.append(y.copy())
                fs.append(f.copy())
                errs.append(float(np.max(np.abs(err_vec))))
                if np.linalg.norm(y) > STATE_CAP:
                    raise BlowUp(f"state norm exceeded {STATE_CAP:g} at t={ts[-1]}", partial())
                # PI step-size control
                factor = 0.9 * max(err, 1e-10) ** (-0.7 / 5) * err_prev ** (0.4 / 5)
                h *= min(5.0, max(0.2, factor))
                err_prev = max(err, 1e-4)
            else:
                n_rejected += 1
                factor = 0.9 * err ** (-1 / 5) if np.isfinite(err) else 0.2
                h *= max(0.2, factor)
            if h < h_min and sigma < seg_len:
                raise BlowUp(f"step size underflow near t={a + sigma * direction}", partial())
        s_base += seg_len
    return partial(complete=True)


def fd_derivative(f: Callable, z0: complex, h: float | None = None):
    """Central difference at ``z0`` with one Richardson level (error O(h^4)).

    Works for scalar- or array-valued ``f``. Default step is
    ``1e-4 * max(1, |z0|)``.
    """
    if h is None:
        h = 1e-4 * max(1.0, abs(z0))
    if not h > 0:
        raise DomainError("h must be positive")
    f_p1, f_m1 = np.asarray(f(z0 + h)), np.asarray(f(z0 - h))
    f_p2, f_m2 = np.asarray(f(z0 + 2 * h)), np.asarray(f(z0 - 2 * h))
    d1 = (f_p1 - f_m1) / (2 * h)
    d2 = (f_p2 - f_m2) / (4 * h)
    out = (4 * d1 - d2) / 3
    return out.item() if out.ndim == 0 else out


SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def as_matrix(m, dim: int | None = None) -> np.ndarray:
    arr = np.array(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] not in (2, 3):
        raise DimensionMismatch(f"expected a 2x2 or 3x3 matrix, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise DimensionMismatch(f"expected a {dim}x{dim} matrix, got shape {arr.shape}")
    check_finite(arr, "matrix entries")
    return arr


def adjugate(m) -> np.ndarray:
    """Classical adjoint of a 3x3 matrix by cofactors (valid for singular input)."""
    a = as_matrix(m, 3)
    cof = np.empty((3, 3), dtype=complex)
    for i in range(3):
        r = [k for k in range(3) if k != i]
        for j in range(3):
            c = [k for k in range(3) if k != j]
            minor = a[r[0], c[0]] * a[r[1], c[1]] - a[r[0], c[1]] * a[r[1], c[0]]
            cof[i, j] = (-1) ** (i + j) * minor
    return cof.T


def commutator(a, b) -> np.ndarray:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatch(f"commutator of shapes {a.shape} and {b.shape}")
    return a @ b - b @ a


def split_scalar(m: np.ndarray) -> tuple[complex, np.ndarray]:
    """Decompose a square matrix into (scalar part, traceless part)."""
    n = m.shape[0]
    scalar = np.trace(m) / n
    return complex(scalar), m - scalar * np.eye(n)
