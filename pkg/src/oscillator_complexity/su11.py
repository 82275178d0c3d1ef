"""The su(1,1) algebra spanned by the quadratic oscillator generators.

Basis ordering follows

    O1 = (a^2 + a^dag^2) / 4
    O2 = i (a^2 - a^dag^2) / 4
    O3 = (a a^dag + a^dag a) / 4

with [O1, O2] = -i O3, [O1, O3] = -i O2, [O2, O3] = i O1.  An element
x1 O1 + x2 O2 + x3 O3 is stored as a :class:`LieVector`.  Group elements are
written exp(-i x.O), which is the convention used for every exponent in the
package.

A faithful 2x2 representation is used for all finite-dimensional checks:

    M1 = i sigma_y / 2,   M2 = -i sigma_x / 2,   M3 = sigma_z / 2.

exp(-i x.M) then has the SU(1,1) form [[u, v], [v*, u*]].
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from scipy.linalg import logm

from .errors import RangeError

#: Largest admissible Euclidean norm of an exponent in :func:`rep_exponential`.
MAX_EXPONENT_NORM = 50.0


class LieVector(NamedTuple):
    """Coefficients of O1, O2, O3."""

    c1: float
    c2: float
    c3: float

    @classmethod
    def from_array(cls, v) -> "LieVector":
        a = np.asarray(v, dtype=float).reshape(3)
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)


def _structure_constants() -> np.ndarray:
    f = np.zeros((3, 3, 3))
    # [O1,O2] = -i O3, [O1,O3] = -i O2, [O2,O3] = +i O1
    for (i, j, k, val) in ((0, 1, 2, -1.0), (0, 2, 1, -1.0), (1, 2, 0, 1.0)):
        f[i, j, k] = val
        f[j, i, k] = -val
    return f


#: f[I, J, K] with [O_I, O_J] = i f[I, J, K] O_K.
STRUCTURE_CONSTANTS = _structure_constants()
STRUCTURE_CONSTANTS.setflags(write=False)

_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)

#: The 2x2 representation matrices M1, M2, M3.
REP_MATRICES = np.stack([1j * _SY / 2, -1j * _SX / 2, _SZ / 2])
REP_MATRICES.setflags(write=False)

# tr(M_I M_J) is diagonal: (-1/2, -1/2, +1/2)
_REP_GRAM = np.real(np.einsum("iab,iba->i", REP_MATRICES, REP_MATRICES))


def bracket(a, b) -> LieVector:
    """Coefficients of -i[A, B] for A = a.O and B = b.O."""
    c = np.einsum("ijk,i,j->k", STRUCTURE_CONSTANTS, np.asarray(a, float), np.asarray(b, float))
    return LieVector.from_array(c)


def rep_matrix(x) -> np.ndarray:
    """sum_I x_I M_I."""
    return np.einsum("i,iab->ab", np.asarray(x, dtype=float), REP_MATRICES)


def rep_coordinates(mat: np.ndarray) -> LieVector:
    """Inverse of :func:`rep_matrix` (real part of the trace projection)."""
    coeffs = np.einsum("ab,iba->i", np.asarray(mat, dtype=complex), REP_MATRICES) / _REP_GRAM
    return LieVector.from_array(np.real(coeffs))


def _sinhc_from_square(lam: float) -> tuple[float, float]:
    """(cosh k, sinh k / k) for k = sqrt(lam), valid for either sign of lam."""
    if abs(lam) < 1e-8:
        return 1.0 + lam / 2 + lam * lam / 24, 1.0 + lam / 6 + lam * lam / 120
    if lam > 0:
        k = math.sqrt(lam)
        return math.cosh(k), math.sinh(k) / k
    k = math.sqrt(-lam)
    return math.cos(k), math.sin(k) / k


def rep_exponential(x) -> np.ndarray:
    """exp(-i x.M) in closed form.

    The exponent A = -i x.M squares to (x1^2 + x2^2 - x3^2)/4 times the
    identity, so exp(A) = cosh(k) I + sinh(k)/k A.  Raises RangeError when
    |x| exceeds MAX_EXPONENT_NORM.
    """
    x = np.asarray(x, dtype=float).reshape(3)
    if not np.all(np.isfinite(x)):
        raise RangeError("exponent coefficients must be finite")
    if np.linalg.norm(x) > MAX_EXPONENT_NORM:
        raise RangeError(f"|x| = {np.linalg.norm(x):.3g} exceeds {MAX_EXPONENT_NORM}")
    lam = (x[0] ** 2 + x[1] ** 2 - x[2] ** 2) / 4
    ch, shc = _sinhc_from_square(lam)
    return ch * np.eye(2, dtype=complex) + shc * (-1j * rep_matrix(x))


def rep_log(u: np.ndarray) -> np.ndarray:
    """Principal logarithm of a unimodular 2x2 matrix.

    With eigenvalues exp(+-k), log U = k / sinh(k) (U - cosh(k) I).  The
    formula degenerates when tr U = -2 (eigenvalue -1 twice); that case falls
    back to scipy's inverse scaling-and-squaring logm.
    """
    u = np.asarray(u, dtype=complex)
    t = np.trace(u) / 2
    if abs(t + 1) < 1e-6:
        return logm(u)
    k = np.arccosh(t + 0j)
    if abs(k) < 1e-4:
        k2 = k * k
        factor = 1 - k2 / 6 + 7 * k2 * k2 / 360
    else:
        factor = k / np.sinh(k)
    return factor * (u - t * np.eye(2))


def rep_log_coordinates(u: np.ndarray) -> LieVector:
    """x with exp(-i x.M) = u, principal branch."""
    return rep_coordinates(1j * rep_log(u))


def bch_compose(x, y, order: int = 1) -> LieVector:
    """Truncated Baker-Campbell-Hausdorff exponent z with e^X e^Y ~ e^Z.

    X = -i x.O and Y = -i y.O.  Order 1 returns x + y; order 2 adds half the
    bracket, which is the nested-commutator correction e^{X + Y + [X,Y]/2}.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if order == 1:
        return LieVector.from_array(x + y)
    if order == 2:
        return LieVector.from_array(x + y + 0.5 * np.asarray(bracket(x, y)))
    raise ValueError(f"order must be 1 or 2, got {order}")


def bch_residual(x, y, order: int = 1) -> float:
    """Frobenius distance between exp of the truncated BCH exponent and exp(X) exp(Y)."""
    exact = rep_exponential(x) @ rep_exponential(y)
    approx = rep_exponential(bch_compose(x, y, order))
    return float(np.linalg.norm(approx - exact))
