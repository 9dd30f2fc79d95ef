"""Monodromy evolving deformation (MED) Lax pairs and their zero-curvature checks.

Conventions: for Y_x = A Y and Y_t = B Y the compatibility residual is
R = A_t - B_x + [A, B]. Both Lax pairs write Y_t with a ``- Q Y_x`` term;
it is folded in as B~ = (...) - Q A. The scalar nu is never built: only
its x-derivative enters, through the identity part of R.

Time derivatives of the state come from the trajectory being tested (the
field it was integrated with), so a trajectory of the wrong flow gives a
nonzero residual.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CoincidentPositions, DomainError, SingularEvaluation
from .flows import HalphenABC, halphen_common
from .numerics import (I2, SIGMA1, SIGMA2, SIGMA3, Trajectory, as_matrix, commutator,
                       fd_derivative, split_scalar)

SINGULAR_DISTANCE = 1e-3


@dataclass(frozen=True)
class MedParams:
    """Constants of the Halphen II Lax pair: mu, c_j with sum zero, traceless S."""

    mu: complex
    c: tuple
    S: np.ndarray = field(default_factory=lambda: SIGMA3.copy())

    def __post_init__(self):
        c = tuple(complex(v) for v in self.c)
        if len(c) != 3:
            raise DomainError("MedParams needs exactly three constants c_j")
        if abs(sum(c)) > 1e-12 * max(1.0, max(abs(v) for v in c)):
            raise DomainError(f"c1 + c2 + c3 must vanish, got {sum(c)}")
        S = as_matrix(self.S, 2)
        if abs(np.trace(S)) > 1e-12 * max(1.0, np.abs(S).max()):
            raise DomainError("S must be traceless")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "mu", complex(self.mu))
        object.__setattr__(self, "S", S)

    def with_mu(self, mu) -> "MedParams":
        return MedParams(mu, self.c, self.S)


@dataclass(frozen=True)
class ExponentRecord:
    """Local exponent L_j = scalar_part I + matrix_part at the singular point x_j."""

    j: int
    scalar_part: complex
    matrix_part: np.ndarray

    @property
    def full(self) -> np.ndarray:
        return self.scalar_part * I2 + self.matrix_part


@dataclass
class ResidualReport:
    """Zero-curvature (or identity) residuals on an (x, t) grid."""

    kind: str
    x_points: list
    t_points: list
    entries: list  # one dict per grid point
    max_abs_residual: float
    max_scalar: float
    max_traceless: float
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_entries(cls, kind, x_points, t_points, entries, **metadata):
        scal = max((e["scalar"] for e in entries), default=0.0)
        trl = max((e["traceless"] for e in entries), default=0.0)
        tot = max((e["total"] for e in entries), default=0.0)
        return cls(kind, list(x_points), list(t_points), entries, tot, scal, trl, metadata)

    def to_dict(self) -> dict:
        def cx(v):
            return [float(np.real(v)), float(np.imag(v))]

        return {
            "kind": self.kind,
            "grid": {"x": [cx(x) for x in self.x_points], "t": [cx(t) for t in self.t_points]},
            "max_abs_residual": self.max_abs_residual,
            "max_scalar_residual": self.max_scalar,
            "max_traceless_residual": self.max_traceless,
            "entries": [
                {"x": cx(e["x"]), "t": cx(e["t"]), "total": e["total"],
                 "scalar": e["scalar"], "traceless": e["traceless"]}
                for e in self.entries
            ],
            "metadata": self.metadata,
        }


def _entry(x, t, r):
    scalar, traceless = split_scalar(r)
    return {"x": complex(x), "t": complex(t), "total": float(np.abs(r).max()),
            "scalar": float(abs(scalar)), "traceless": float(np.abs(traceless).max())}


# ---------------------------------------------------------------------------
# Halphen II pair

def _check_sites(xs, x=None):
    xs = np.asarray(xs, dtype=complex)
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(xs[i] - xs[j]) < 1e-14 * max(1.0, abs(xs[i])):
                raise SingularEvaluation("singular points x_j coincide")
    if x is not None and np.min(np.abs(x - xs)) == 0:
        raise SingularEvaluation(f"x={x} is a singular point")
    return xs


def _poly_P(x, xs):
    """P(x), P_x(x) and the partial products prod_{m != j}(x - x_m)."""
    d = x - xs
    partial = np.array([d[1] * d[2], d[0] * d[2], d[0] * d[1]])
    return d[0] * d[1] * d[2], partial.sum(), partial


def med_lax_eval(x, s, p: MedParams, abc):
    """(A, B~, dnu/dx) of the Halphen II pair at spectral point ``x``.

    A = (mu/P) I + sum c_j S/(x - x_j),  B~ = sum c_j x_j S - Q(x) A,
    dnu/dx = -(x + x1 + x2 + x3) mu / P.
    """
    x = complex(x)
    xs = _check_sites(s, x)
    abc = HalphenABC(*abc)
    P, _, _ = _poly_P(x, xs)
    c = np.array(p.c)
    A = (p.mu / P) * I2 + np.sum(c / (x - xs)) * p.S
    Q = x * x + halphen_common(xs, abc)
    B = np.sum(c * xs) * p.S - Q * A
    dnu = -(x + xs.sum()) * p.mu / P
    return A, B, dnu


def med_zero_curvature(x, s, sdot, p: MedParams, abc) -> np.ndarray:
    """R = A_t - B~_x - nu_x I + [A, B~] with x_j' taken from ``sdot``."""
    x = complex(x)
    xs = _check_sites(s, x)
    xd = np.asarray(sdot, dtype=complex)
    c = np.array(p.c)
    A, B, dnu = med_lax_eval(x, xs, p, abc)
    P, Px, partial = _poly_P(x, xs)
    Pt = -np.sum(xd * partial)
    Q = x * x + halphen_common(xs, HalphenABC(*abc))
    Qx = 2 * x
    At = (-p.mu * Pt / P**2) * I2 + np.sum(c * xd / (x - xs) ** 2) * p.S
    Ax = (-p.mu * Px / P**2) * I2 - np.sum(c / (x - xs) ** 2) * p.S
    Bx = -Qx * A - Q * Ax
    return At - Bx - dnu * I2 + commutator(A, B)


def default_x_grid(states, n: int = 5) -> list:
    """``n`` points on a circle of radius 2 max|x_j|, offset from the real axis."""
    r = 2 * max(1.0, float(np.max(np.abs(np.asarray(states)))))
    return [r * cmath.exp(2j * np.pi * (k + 0.25) / n) for k in range(n)]


def _grid_states(traj: Trajectory, n_t: int):
    out = []
    for s in traj.param_grid(n_t):
        out.append((traj.time_at(s), traj.interpolate(s), traj.derivative(s)))
    return out


def _check_distance(x, sites, what="singular point"):
    d = np.min(np.abs(np.asarray(sites) - x))
    if d < SINGULAR_DISTANCE:
        raise SingularEvaluation(f"grid point x={x} within {d:.2e} of a {what}")


def med_compatibility_residual(traj: Trajectory, p: MedParams, abc, x_grid=None,
                               n_t: int = 5, kind: str = "med-lax") -> ResidualReport:
    """Zero-curvature residual of the Halphen II pair along a hal2 trajectory."""
    pts = _grid_states(traj, n_t)
    if x_grid is None:
        x_grid = default_x_grid([st for _, st, _ in pts])
    entries = []
    for t, st, sd in pts:
        for x in x_grid:
            _check_distance(x, st)
            entries.append(_entry(x, t, med_zero_curvature(x, st, sd, p, abc)))
    return ResidualReport.from_entries(kind, x_grid, [t for t, _, _ in pts], entries,
                                       mu=[p.mu.real, p.mu.imag], n_x=len(x_grid), n_t=n_t,
                                       integration_tol=traj.tol)


def z_system_residual(traj: Trajectory, p: MedParams, abc, x_grid=None, n_t: int = 5) -> ResidualReport:
    """Residual of the Z-system left after Y = f Z removes mu and nu."""
    return med_compatibility_residual(traj, p.with_mu(0.0), abc, x_grid, n_t, kind="z-system")


class _GaussQ:
    """Exact complex rational, used to evaluate polynomial identities without rounding."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=Fraction(0)):
        self.re, self.im = Fraction(re), Fraction(im)

    @classmethod
    def of(cls, z):
        z = complex(z)
        return cls(z.real, z.imag)

    def __add__(self, o):
        o = o if isinstance(o, _GaussQ) else _GaussQ.of(o)
        return _GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return _GaussQ(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-o if isinstance(o, _GaussQ) else _GaussQ.of(-complex(o)))

    def __mul__(self, o):
        o = o if isinstance(o, _GaussQ) else _GaussQ.of(o)
        return _GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def f_integrability_residual(s, abc, x, sdot=None, exact: bool = True) -> complex:
    """P_t + Q P_x - P Q_x - (x + x1 + x2 + x3) P, with x_j' = Q(x_j) unless ``sdot`` is given.

    With ``exact`` the expression is evaluated in rational arithmetic on the
    (binary-exact) inputs, so a nonzero result is a genuine failure of the
    identity rather than rounding; otherwise plain complex floats are used.
    """
    lift = _GaussQ.of if exact else complex
    xs = [lift(v) for v in s]
    a, b, c = (lift(v) for v in abc)
    x = lift(x)
    common = a * (xs[0] - xs[1]) * (xs[0] - xs[1]) + b * (xs[1] - xs[2]) * (xs[1] - xs[2]) \
        + c * (xs[2] - xs[0]) * (xs[2] - xs[0])
    sdot = [v * v + common for v in xs] if sdot is None else [lift(v) for v in sdot]
    d = [x - v for v in xs]
    partial = [d[1] * d[2], d[0] * d[2], d[0] * d[1]]
    P = d[0] * partial[0]
    Px = partial[0] + partial[1] + partial[2]
    Pt = -(sdot[0] * partial[0] + sdot[1] * partial[1] + sdot[2] * partial[2])
    Q = x * x + common
    return complex(Pt + Q * Px - P * 2 * x - (x + xs[0] + xs[1] + xs[2]) * P)


def local_exponent(s, p: MedParams, j: int) -> ExponentRecord:
    """Residue of A at x_j: mu / prod_{m != j}(x_j - x_m) I + c_j S."""
    xs = _check_sites(s)
    others = [xs[m] for m in range(3) if m != j]
    return ExponentRecord(j, p.mu / ((xs[j] - others[0]) * (xs[j] - others[1])), p.c[j] * p.S)


def exponent_rate_formula(s, mu, j: int) -> complex:
    """Exponent law dL_j/dt = (2x_j + x_k + x_l) mu / prod_{m != j}(x_j - x_m)."""
    xs = _check_sites(s)
    others = [xs[m] for m in range(3) if m != j]
    return complex((2 * xs[j] + others[0] + others[1]) * mu
                   / ((xs[j] - others[0]) * (xs[j] - others[1])))


@dataclass
class ExponentCheck:
    j: int
    t_points: list
    fd_rates: list
    formula_rates: list
    error_plus: float
    error_minus: float
    matrix_part_rate: float
    tolerance: float

    @property
    def sign(self) -> int:
        """+1 if the formula matches, -1 if its negative does, 0 if neither."""
        plus, minus = self.error_plus <= self.tolerance, self.error_minus <= self.tolerance
        if plus and not minus:
            return 1
        if minus and not plus:
            return -1
        return 0

    @property
    def error(self) -> float:
        return min(self.error_plus, self.error_minus)

    def to_dict(self) -> dict:
        return {"site": self.j, "sign": self.sign, "error_plus": self.error_plus,
                "error_minus": self.error_minus, "matrix_part_rate": self.matrix_part_rate,
                "tolerance": self.tolerance,
                "t": [[float(t.real), float(t.imag)] for t in self.t_points]}


def exponent_evolution_check(traj: Trajectory, p: MedParams, j: int, n_t: int = 5,
                             tolerance: float = 1e-7, h: float = 1e-3) -> ExponentCheck:
    """Compare the FD t-derivative of the scalar part of L_j with +/- the exponent law."""
    fd, formula, ts = [], [], []
    for s in traj.param_grid(n_t, margin=0.05):
        t0 = traj.time_at(s)
        solve = traj.local_solution(s)
        rate = fd_derivative(lambda t: local_exponent(solve(t), p, j).scalar_part, t0, h)
        fd.append(complex(rate))
        formula.append(exponent_rate_formula(solve(t0), p.mu, j))
        ts.append(t0)
    fd, formula = np.array(fd), np.array(formula)
    scale = max(1.0, float(np.max(np.abs(formula))))
    err_plus = float(np.max(np.abs(fd - formula))) / scale
    err_minus = float(np.max(np.abs(fd + formula))) / scale
    # c_j S is a constant of the construction
    s0 = traj.param_grid(1)[0]
    solve = traj.local_solution(s0)
    mat_rate = fd_derivative(lambda t: local_exponent(solve(t), p, j).matrix_part, traj.time_at(s0), h)
    return ExponentCheck(j, ts, list(fd), list(formula), err_plus, err_minus,
                         float(np.abs(mat_rate).max()), tolerance)


def med_log_coefficients(s, mu) -> np.ndarray:
    """f_j in dnu/dx = sum_j f_j/(x - x_j): f_j = -mu (x_j + x1 + x2 + x3) / prod_{m != j}(x_j - x_m)."""
    xs = _check_sites(s)
    total = xs.sum()
    out = []
    for j in range(3):
        others = [xs[m] for m in range(3) if m != j]
        out.append(-mu * (xs[j] + total) / ((xs[j] - others[0]) * (xs[j] - others[1])))
    return np.array(out, dtype=complex)


def med_deformation_generator(residues: Sequence, positions: Sequence, f_col: Sequence, k: int,
                              x, windings: Sequence[int] | None = None) -> np.ndarray:
    """-A_k/(x - x_k) + sum_j f_jk log(x - x_j) I.

    Principal logarithms; ``windings[j]`` adds 2 pi i per loop around x_j
    for continuation along a path.
    """
    x = complex(x)
    pos = np.asarray(positions, dtype=complex)
    if np.any(pos == x):
        raise SingularEvaluation(f"x={x} is one of the singular points")
    mats = [as_matrix(a) for a in residues]
    n = mats[0].shape[0]
    if windings is None:
        windings = [0] * len(pos)
    logs = sum(f * (cmath.log(x - xj) + 2j * np.pi * w) for f, xj, w in zip(f_col, pos, windings))
    return -mats[k] / (x - pos[k]) + logs * np.eye(n)


def schlesinger_rhs(residues: Sequence, positions: Sequence) -> np.ndarray:
    """out[k, j] = dA_k/dx_j = [A_k, A_j]/(x_k - x_j) for j != k.

    Diagonal entries use the standard completion
    dA_k/dx_k = -sum_{j != k} [A_k, A_j]/(x_k - x_j), which keeps sum_k A_k fixed.
    """
    mats = [as_matrix(a) for a in residues]
    pos = [complex(v) for v in positions]
    n = len(mats)
    if len(pos) != n:
        raise DomainError("need one position per residue")
    if len(set(pos)) != n:
        raise CoincidentPositions("Schlesinger positions must be pairwise distinct")
    dim = mats[0].shape[0]
    out = np.zeros((n, n, dim, dim), dtype=complex)
    for k in range(n):
        for j in range(n):
            if j != k:
                out[k, j] = commutator(mats[k], mats[j]) / (pos[k] - pos[j])
        out[k, k] = -sum(out[k, j] for j in range(n) if j != k)
    return out


# ---------------------------------------------------------------------------
# DH-V pair

@dataclass(frozen=True)
class DhvLaxParams:
    """alpha_pm, beta_pm, C_pm, D for a DH-V state (all linear in the state).

    alpha_pm carries a factor i on (theta + phi); without it the pair is not
    compatible with the DH-V flow.
    """

    alpha_p: complex
    alpha_m: complex
    beta_p: complex
    beta_m: complex
    C_p: np.ndarray
    C_m: np.ndarray
    D: np.ndarray

    @classmethod
    def from_state(cls, s) -> "DhvLaxParams":
        w1, w2, w3, phi, theta = (complex(v) for v in s)
        alpha_p = (w1 - w2) - 1j * (theta + phi)
        alpha_m = (w1 - w2) + 1j * (theta + phi)
        beta_p = (w1 + w2 - 2 * w3) + 1j * (theta - phi)
        beta_m = (w1 + w2 - 2 * w3) - 1j * (theta - phi)
        C_p = (1j * w1 + phi) * SIGMA1 + (w2 + 1j * theta) * SIGMA2
        C_m = (1j * w1 - phi) * SIGMA1 - (w2 - 1j * theta) * SIGMA2
        D = -w3 * SIGMA3
        return cls(alpha_p, alpha_m, beta_p, beta_m, C_p, C_m, D)

    def P(self, x):
        return self.alpha_p * x**4 + (self.beta_p + self.beta_m) * x**2 + self.alpha_m

    def P_x(self, x):
        return 4 * self.alpha_p * x**3 + 2 * (self.beta_p + self.beta_m) * x

    def Q(self, x):
        return self.alpha_p * x**3 + self.beta_p * x

    def Q_x(self, x):
        return 3 * self.alpha_p * x**2 + self.beta_p

    def M(self, x):
        return self.C_p * x**2 + 2 * self.D * x + self.C_m


def dhv_lax_eval(x, s, mu):
    """(A, B~, dnu/dx) with A = [mu I - (C+ x^2 + 2 D x + C-)]/P and 2 Y_t = [nu - (C+ x + D)] Y - Q Y_x.

    B~ = (-(C+ x + D) - Q A)/2 excludes the nu/2 part; dnu/dx = mu[(beta- + 4 w3) - alpha+ x^2]/P.
    """
    x = complex(x)
    lp = DhvLaxParams.from_state(s)
    P = lp.P(x)
    scale = abs(lp.alpha_p) * abs(x) ** 4 + abs(lp.beta_p + lp.beta_m) * abs(x) ** 2 + abs(lp.alpha_m)
    if scale == 0 or abs(P) <= 1e-14 * scale:
        raise SingularEvaluation(f"P(x) vanishes at x={x}")
    A = (mu * I2 - lp.M(x)) / P
    B = 0.5 * (-(lp.C_p * x + lp.D) - lp.Q(x) * A)
    dnu = mu * ((lp.beta_m + 4 * complex(s[2])) - lp.alpha_p * x**2) / P
    return A, B, dnu


def dhv_zero_curvature(x, s, sdot, mu) -> np.ndarray:
    """R = A_t - B~_x - (1/2) nu_x I + [A, B~]; the Lax data are linear in the state,
    so their t-derivatives are the same expressions evaluated on ``sdot``."""
    x = complex(x)
    A, B, dnu = dhv_lax_eval(x, s, mu)
    lp = DhvLaxParams.from_state(s)
    ld = DhvLaxParams.from_state(sdot)
    P, Px = lp.P(x), lp.P_x(x)
    At = -ld.M(x) / P - A * ld.P(x) / P
    Ax = -(2 * lp.C_p * x + 2 * lp.D) / P - A * Px / P
    Bx = 0.5 * (-lp.C_p - lp.Q_x(x) * A - lp.Q(x) * Ax)
    return At - Bx - 0.5 * dnu * I2 + commutator(A, B)


def dhv_default_x_grid(n: int = 4) -> list:
    return [0.8 * cmath.exp(2j * np.pi * (k + 0.3) / n) for k in range(n)]


def dhv_compatibility_residual(traj: Trajectory, mu, x_grid=None, n_t: int = 4) -> ResidualReport:
    """Zero-curvature residual of the DH-V pair along a dhv trajectory."""
    if x_grid is None:
        x_grid = dhv_default_x_grid(n_t)
    entries, ts = [], []
    for t, st, sd in _grid_states(traj, n_t):
        ts.append(t)
        lp = DhvLaxParams.from_state(st)
        roots = np.roots([lp.alpha_p, 0, lp.beta_p + lp.beta_m, 0, lp.alpha_m]) if lp.alpha_p != 0 else []
        for x in x_grid:
            if len(roots):
                _check_distance(x, roots, "zero of P")
            entries.append(_entry(x, t, dhv_zero_curvature(x, st, sd, mu)))
    return ResidualReport.from_entries("dhv-lax", x_grid, ts, entries, mu=[complex(mu).real, complex(mu).imag],
                                       n_x=len(x_grid), n_t=n_t, integration_tol=traj.tol)
