"""Euler-Arnold geodesics on the su(1,1) group and the boundary-value inversion.

With the identity penalty matrix the tangent vector rotates in the (1, 2)
plane at angular rate 2 v3 and the geodesic length is |v|.  The inversion
maps a target squeeze/rotation S(r, phi) R(theta), combined into a single
exponential at leading BCH order, to the initial tangent vector of the
leading-order Dyson curve that reaches it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .su11 import STRUCTURE_CONSTANTS, LieVector

#: Below this |theta| the inversion is reported as using the theta -> 0 limit.
THETA_SWITCH = 1e-4
#: |sin 2 theta| below this (with theta away from zero) flags the singular set.
TOL_SIN = 1e-8


def as_penalty(G=None) -> np.ndarray:
    """Validate a penalty matrix; None means the identity.

    A length-3 sequence is read as a diagonal.
    """
    if G is None:
        return np.eye(3)
    G = np.asarray(G, dtype=float)
    if G.shape == (3,):
        G = np.diag(G)
    if G.shape != (3, 3):
        raise ValueError(f"penalty matrix must be 3x3, got shape {G.shape}")
    if not np.allclose(G, G.T, rtol=0, atol=1e-12):
        raise ValueError("penalty matrix must be symmetric")
    if np.min(np.linalg.eigvalsh(G)) <= 0:
        raise ValueError("penalty matrix must be positive definite")
    return G


def euler_arnold_rhs(v, G=None) -> LieVector:
    """dV/ds from G_IJ dV^J/ds = f_IJ^K V^J G_KL V^L."""
    G = as_penalty(G)
    v = np.asarray(v, dtype=float)
    force = np.einsum("ijk,j,k->i", STRUCTURE_CONSTANTS, v, G @ v)
    return LieVector.from_array(np.linalg.solve(G, force))


def propagate_tangent(v0, G=None, s: float = 1.0, steps: int = 1000) -> LieVector:
    """Fixed-step RK4 integration of the Euler-Arnold equation from 0 to s.

    Works for any positive-definite G.  Only the identity case has a
    closed form (:func:`tangent_solution`); this routine is for exploring
    non-uniform penalties.
    """
    G = as_penalty(G)
    h = s / steps
    v = np.asarray(v0, dtype=float).copy()

    def rhs(u):
        return np.asarray(euler_arnold_rhs(u, G))

    for _ in range(steps):
        k1 = rhs(v)
        k2 = rhs(v + 0.5 * h * k1)
        k3 = rhs(v + 0.5 * h * k2)
        k4 = rhs(v + h * k3)
        v = v + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6
    return LieVector.from_array(v)


@dataclass(frozen=True)
class TangentSolution:
    """Closed-form geodesic tangent V(s) for the identity penalty matrix."""

    v1: float
    v2: float
    v3: float

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        w = 2 * self.v3 * s
        c, sn = np.cos(w), np.sin(w)
        out = np.stack(
            [self.v1 * c - self.v2 * sn, self.v1 * sn + self.v2 * c, np.full_like(w, self.v3)],
            axis=-1,
        )
        return out

    @property
    def initial(self) -> LieVector:
        return LieVector(self.v1, self.v2, self.v3)


def tangent_solution(v0) -> TangentSolution:
    v = LieVector.from_array(v0)
    return TangentSolution(v.c1, v.c2, v.c3)


@dataclass(frozen=True)
class BoundaryTarget:
    """Target S(r, phi) R(theta)."""

    r: float
    phi: float
    theta: float

    def __post_init__(self):
        if not (self.r >= 0):
            raise ValueError(f"squeeze magnitude must be >= 0, got {self.r}")
        if not (math.isfinite(self.phi) and math.isfinite(self.theta)):
            raise ValueError("angles must be finite")


class BoundaryInversion(NamedTuple):
    v: LieVector
    singular_theta: bool
    small_theta: bool


def principal_theta(theta: float) -> float:
    """Reduce a rotation angle modulo pi into (-pi/2, pi/2].

    R(theta + pi) equals R(theta) up to parity and a global phase, and the
    shorter winding gives the shorter leading-order curve.
    """
    return math.pi / 2 - (math.pi / 2 - theta) % math.pi


def theta_flags(theta: float) -> tuple[bool, bool]:
    """(singular, small) classification of a principal-winding angle."""
    small = abs(theta) < THETA_SWITCH
    singular = (not small) and abs(math.sin(2 * theta)) < TOL_SIN
    return singular, small


def _half_csc_ratio(theta: float) -> float:
    """2 theta csc(2 theta), equal to 1 at theta = 0; inf on the singular set."""
    sc = float(np.sinc(2 * theta / math.pi))
    return math.inf if sc == 0 else 1.0 / sc


def invert_boundary(target: BoundaryTarget) -> BoundaryInversion:
    """Initial tangent vector reaching exp(-2ir(sin phi O1 + cos phi O2) + 2i theta O3).

    v3 = -2 theta, v1 = -4 theta r csc(2 theta) sin(2 theta - phi),
    v2 = 4 theta r csc(2 theta) cos(2 theta - phi), with theta first reduced
    to its principal winding.  theta csc(2 theta) is evaluated through sinc,
    so theta -> 0 reproduces (2r sin phi, 2r cos phi, 0) without a 0/0.
    Near theta = +-pi/2 the result is flagged and may be huge or infinite.
    """
    theta = principal_theta(target.theta)
    r, phi = target.r, target.phi
    singular, small = theta_flags(theta)
    if r == 0:
        return BoundaryInversion(LieVector(0.0, 0.0, -2 * theta), singular, small)
    amp = 2 * r * _half_csc_ratio(theta)
    v1 = -amp * math.sin(2 * theta - phi)
    v2 = amp * math.cos(2 * theta - phi)
    return BoundaryInversion(LieVector(v1, v2, -2 * theta), singular, small)


def geodesic_complexity(v0, G=None) -> float:
    """Length sqrt(v.G.v) of the constant-speed curve with initial tangent v0."""
    G = as_penalty(G)
    v = np.asarray(v0, dtype=float)
    return float(math.sqrt(v @ G @ v))


def dyson_leading_unitary(v0, s: float = 1.0) -> LieVector:
    """Exponent coefficients of U(s) ~ exp(-i int_0^s V(s') ds' . O).

    Uses sin(2 s v3)/(2 v3) = s sinc(2 s v3) and
    sin^2(s v3)/v3 = s^2 v3 sinc^2(s v3), so v3 = 0 needs no special case.
    """
    v1, v2, v3 = LieVector.from_array(v0)
    a = s * float(np.sinc(2 * s * v3 / math.pi))
    b = s * s * v3 * float(np.sinc(s * v3 / math.pi)) ** 2
    return LieVector(v1 * a - v2 * b, v2 * a + v1 * b, s * v3)
