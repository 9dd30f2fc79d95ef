"""Vector fields of the Halphen / Chazy / Darboux-Halphen family, in solved form.

States are complex numpy vectors with component orders

    hal1:  (X, Y, Z)
    hal2:  (x1, x2, x3)
    chazy: (y, y', y'')
    dhv:   (w1, w2, w3, phi, theta)
    ach:   (w1, w2, w3)
    dh9:   3x3 matrix M (flattened row-major when integrated)
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .numerics import adjugate, as_matrix


class HalphenABC(NamedTuple):
    a: complex
    b: complex
    c: complex


class AlphaParams(NamedTuple):
    alpha1: complex
    alpha2: complex
    alpha3: complex


COMPONENTS = {
    "hal1": ("X", "Y", "Z"),
    "hal2": ("x1", "x2", "x3"),
    "chazy": ("y", "y1", "y2"),
    "dhv": ("w1", "w2", "w3", "phi", "theta"),
    "ach": ("w1", "w2", "w3"),
    "dh9": tuple(f"M{i}{j}" for i in range(1, 4) for j in range(1, 4)),
}


def hal1_field(s):
    """X' = XY + ZX - YZ and cyclic: the unique solve of X'+Y' = 2XY, Y'+Z' = 2YZ, Z'+X' = 2ZX."""
    X, Y, Z = s
    return np.array([X * Y + Z * X - Y * Z,
                     X * Y + Y * Z - Z * X,
                     Y * Z + Z * X - X * Y], dtype=complex)


def halphen_common(s, p: HalphenABC) -> complex:
    """a(x1-x2)^2 + b(x2-x3)^2 + c(x3-x1)^2, shared by all three components."""
    x1, x2, x3 = s
    a, b, c = p
    return a * (x1 - x2) ** 2 + b * (x2 - x3) ** 2 + c * (x3 - x1) ** 2


def halphen_q(x, s, p: HalphenABC):
    """Q(x) = x^2 + a(x1-x2)^2 + b(x2-x3)^2 + c(x3-x1)^2."""
    return x * x + halphen_common(s, p)


def hal2_field(s, p: HalphenABC):
    x = np.asarray(s, dtype=complex)
    return x * x + halphen_common(x, p)


def chazy_field(s):
    y, y1, y2 = s
    return np.array([y1, y2, 2 * y * y2 - 3 * y1 * y1], dtype=complex)


def dhv_field(s):
    # Third component is the cyclic w3' = w1 w2 - w3(w1 + w2) - phi theta,
    # the form the DH-IX block reduction produces (a second "w2'" line here
    # would break the reduction).
    w1, w2, w3, phi, theta = s
    return np.array([
        w2 * w3 - w1 * (w2 + w3) + phi**2,
        w3 * w1 - w2 * (w3 + w1) + theta**2,
        w1 * w2 - w3 * (w1 + w2) - phi * theta,
        w1 * (theta - phi) - w3 * (theta + phi),
        -w2 * (theta - phi) - w3 * (theta + phi),
    ], dtype=complex)


def ach_tau_squared(s, p: AlphaParams) -> complex:
    w1, w2, w3 = s
    a1, a2, a3 = p
    return (a1**2 * (w1 - w2) * (w3 - w1)
            + a2**2 * (w2 - w3) * (w1 - w2)
            + a3**2 * (w3 - w1) * (w2 - w3))


def ach_field(s, p: AlphaParams):
    # cyclic in (w1, w2, w3), as in dhv_field
    w1, w2, w3 = s
    t2 = ach_tau_squared(s, p)
    return np.array([w2 * w3 - w1 * (w2 + w3) + t2,
                     w3 * w1 - w2 * (w3 + w1) + t2,
                     w1 * w2 - w3 * (w1 + w2) + t2], dtype=complex)


def dh9_field(m):
    """dM/dt = (adj M)^T + M^T M - (tr M) M."""
    m = as_matrix(m, 3)
    return adjugate(m).T + m.T @ m - np.trace(m) * m


def rhs(system: str, params=None):
    """Non-autonomous ``f(t, y)`` wrapper suitable for ``integrate_path``."""
    if system == "hal1":
        return lambda t, y: hal1_field(y)
    if system == "hal2":
        p = HalphenABC(*params)
        return lambda t, y: hal2_field(y, p)
    if system == "chazy":
        return lambda t, y: chazy_field(y)
    if system == "dhv":
        return lambda t, y: dhv_field(y)
    if system == "ach":
        p = AlphaParams(*params)
        return lambda t, y: ach_field(y, p)
    if system == "dh9":
        return lambda t, y: dh9_field(np.reshape(y, (3, 3))).ravel()
    raise ValueError(f"unknown system {system!r}")
