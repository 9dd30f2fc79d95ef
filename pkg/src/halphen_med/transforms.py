"""State and parameter maps between the systems in ``flows``."""
from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .flows import AlphaParams, HalphenABC, hal1_field


class ParamMapRecord(NamedTuple):
    alphas: AlphaParams
    abc: HalphenABC


def alphas_to_abc(p) -> HalphenABC:
    """8a = a1^2 + a2^2 - a3^2 - 1, 8b = -a1^2 + a2^2 + a3^2 - 1, 8c = a1^2 - a2^2 + a3^2 - 1."""
    s1, s2, s3 = (complex(v) ** 2 for v in p)
    return HalphenABC((s1 + s2 - s3 - 1) / 8, (-s1 + s2 + s3 - 1) / 8, (s1 - s2 + s3 - 1) / 8)


def _principal_sqrt(v: complex) -> complex:
    r = np.sqrt(complex(v))
    # Real results are returned without a signed-zero imaginary part.
    return complex(r.real, 0.0) if r.imag == 0 else complex(r)


def abc_to_alphas(p, branch: Sequence[int] = (1, 1, 1)) -> AlphaParams:
    """Inverse of ``alphas_to_abc``; ``branch`` gives a sign per component."""
    a, b, c = (complex(v) for v in p)
    squares = (4 * (c + a) + 1, 4 * (a + b) + 1, 4 * (b + c) + 1)
    return AlphaParams(*(sign * _principal_sqrt(sq) for sign, sq in zip(branch, squares)))


def param_map_record(alphas) -> ParamMapRecord:
    alphas = AlphaParams(*(complex(v) for v in alphas))
    return ParamMapRecord(alphas, alphas_to_abc(alphas))


def hal2_to_hal1_state(s) -> np.ndarray:
    """2X = x2 + x3, 2Y = x3 + x1, 2Z = x1 + x2 (meaningful for a = b = c = -1/8)."""
    x1, x2, x3 = s
    return np.array([x2 + x3, x3 + x1, x1 + x2], dtype=complex) / 2


def hal1_to_hal2_state(s) -> np.ndarray:
    X, Y, Z = s
    return np.array([Y + Z - X, Z + X - Y, X + Y - Z], dtype=complex)


def hal1_to_chazy(s) -> np.ndarray:
    """(y, y', y'') with y = 2(X + Y + Z), derivatives taken through the hal1 field."""
    X, Y, Z = s
    dX, dY, dZ = hal1_field(s)
    y = 2 * (X + Y + Z)
    y1 = 2 * (X * Y + Y * Z + Z * X)
    y2 = 2 * (dX * (Y + Z) + dY * (Z + X) + dZ * (X + Y))
    return np.array([y, y1, y2], dtype=complex)


def hal2_state_to_ach_state(s) -> np.ndarray:
    """2w1 = -x2 - x3, 2w2 = -x3 - x1, 2w3 = -x1 - x2."""
    x1, x2, x3 = s
    return -np.array([x2 + x3, x3 + x1, x1 + x2], dtype=complex) / 2


def ach_state_to_hal2_state(s) -> np.ndarray:
    """Inverse of ``hal2_state_to_ach_state``: x1 = w1 - w2 - w3 and cyclic."""
    w = np.asarray(s, dtype=complex)
    return 2 * w - w.sum()


def dh9_diag_to_hal1(w) -> np.ndarray:
    """Diagonal DH-IX entries to Halphen I: (X, Y, Z) = -(w1, w2, w3)."""
    return -np.asarray(w, dtype=complex)


def hal1_to_dh9_diag(s) -> np.ndarray:
    return -np.asarray(s, dtype=complex)


def embed_diag_dh9(w1, w2, w3) -> np.ndarray:
    return np.diag(np.array([w1, w2, w3], dtype=complex))


def embed_block_dh9(s) -> np.ndarray:
    """[[w1, theta, 0], [phi, w2, 0], [0, 0, w3]]."""
    w1, w2, w3, phi, theta = s
    return np.array([[w1, theta, 0], [phi, w2, 0], [0, 0, w3]], dtype=complex)


def block_dh9_to_dhv(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    return np.array([m[0, 0], m[1, 1], m[2, 2], m[1, 0], m[0, 1]], dtype=complex)


def block_defect(m) -> float:
    """Largest entry outside the (2+1) block pattern."""
    m = np.asarray(m)
    return float(max(abs(m[0, 2]), abs(m[1, 2]), abs(m[2, 0]), abs(m[2, 1])))
