"""Truncated Fock-space checks of the squeeze/rotation transformation laws.

Truncation corrupts matrix elements near the top level and the damage
spreads downward under squeezing, so residuals are measured on an interior
block of low number states.  By default squeeze-type residuals keep the
lowest dim // 3 levels; commutators keep all but the top 4.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy.linalg import expm

from ..bogoliubov import SqueezeRotationParams
from ..su11 import bch_compose

COMMUTATOR_MARGIN = 4


@dataclass(frozen=True)
class FockConfig:
    """Truncation dimension and the admissible weight in the top 10% of levels."""

    dim: int = 60
    tail_tol: float = 1e-8

    def __post_init__(self):
        if self.dim < 8:
            raise ValueError(f"dim must be >= 8, got {self.dim}")
        if not 0 < self.tail_tol < 1:
            raise ValueError("tail_tol must lie in (0, 1)")

    @property
    def interior(self) -> int:
        return self.dim // 3


class FockOperators(NamedTuple):
    a: np.ndarray
    adag: np.ndarray
    O1: np.ndarray
    O2: np.ndarray
    O3: np.ndarray


def fock_operators(cfg: FockConfig) -> FockOperators:
    """a, a^dag and the su(1,1) generators on the lowest cfg.dim number states.

    O3 is taken as (2n + 1)/4, the untruncated value of (a a^dag + a^dag a)/4.
    """
    n = cfg.dim
    a = np.diag(np.sqrt(np.arange(1, n, dtype=float)), 1).astype(complex)
    adag = a.conj().T
    a2 = a @ a
    ad2 = adag @ adag
    O1 = (a2 + ad2) / 4
    O2 = 1j * (a2 - ad2) / 4
    O3 = np.diag((2 * np.arange(n) + 1) / 4).astype(complex)
    return FockOperators(a, adag, O1, O2, O3)


def generator(ops: FockOperators, x) -> np.ndarray:
    """x1 O1 + x2 O2 + x3 O3."""
    return x[0] * ops.O1 + x[1] * ops.O2 + x[2] * ops.O3


def squeeze_operator(ops: FockOperators, r: float, phi: float) -> np.ndarray:
    """S = exp(J), J = (r e^{-i phi} a^2 - r e^{i phi} a^dag^2) / 2."""
    J = 0.5 * r * np.exp(-1j * phi) * (ops.a @ ops.a) - 0.5 * r * np.exp(1j * phi) * (ops.adag @ ops.adag)
    return expm(J)


def rotation_operator(ops: FockOperators, theta: float) -> np.ndarray:
    """R = exp(2 i theta O3)."""
    return expm(2j * theta * ops.O3)


def interior_norm(m: np.ndarray, k: int) -> float:
    """Spectral norm of the leading k x k block."""
    return float(np.linalg.norm(m[:k, :k], 2))


def tail_weight(u: np.ndarray, k: int) -> float:
    """Largest weight a column among the first k puts on the top 10% of levels."""
    n = u.shape[0]
    top = n - max(1, math.ceil(0.1 * n))
    return float(np.max(np.sum(np.abs(u[top:, :k]) ** 2, axis=0)))


def commutator_residuals(cfg: FockConfig) -> dict[str, float]:
    """Interior norms of [a, a^dag] - 1 and of each su(1,1) commutation defect."""
    ops = fock_operators(cfg)
    k = cfg.dim - COMMUTATOR_MARGIN
    eye = np.eye(cfg.dim)

    def comm(x, y):
        return x @ y - y @ x

    return {
        "[a,adag]-1": interior_norm(comm(ops.a, ops.adag) - eye, cfg.dim - 1),
        "[O1,O2]+iO3": interior_norm(comm(ops.O1, ops.O2) + 1j * ops.O3, k),
        "[O1,O3]+iO2": interior_norm(comm(ops.O1, ops.O3) + 1j * ops.O2, k),
        "[O2,O3]-iO1": interior_norm(comm(ops.O2, ops.O3) - 1j * ops.O1, k),
    }


def verify_squeeze_law(r: float, phi: float, cfg: FockConfig, interior: Optional[int] = None) -> float:
    """Interior residual of S^dag a S - (a cosh r - e^{i phi} a^dag sinh r)."""
    ops = fock_operators(cfg)
    S = squeeze_operator(ops, r, phi)
    lhs = S.conj().T @ ops.a @ S
    rhs = ops.a * math.cosh(r) - np.exp(1j * phi) * ops.adag * math.sinh(r)
    return interior_norm(lhs - rhs, cfg.interior if interior is None else interior)


def verify_rotation_law(theta: float, cfg: FockConfig, interior: Optional[int] = None) -> float:
    """Interior residual of R^dag a R - e^{i theta} a."""
    ops = fock_operators(cfg)
    R = rotation_operator(ops, theta)
    lhs = R.conj().T @ ops.a @ R
    return interior_norm(lhs - np.exp(1j * theta) * ops.a, cfg.interior if interior is None else interior)


def verify_target_factorization(
    p: SqueezeRotationParams, cfg: FockConfig, order: int = 2, interior: Optional[int] = None
) -> float:
    """Interior residual between S(r, phi) R(theta) and exp of the truncated BCH exponent.

    S is built from the squeeze exponent J, R from O3; the single exponential
    uses X = -2ir(sin phi O1 + cos phi O2) and Y = 2i theta O3 combined at the
    requested BCH order.
    """
    ops = fock_operators(cfg)
    target = squeeze_operator(ops, p.r, p.phi) @ rotation_operator(ops, p.theta)
    x = (2 * p.r * math.sin(p.phi), 2 * p.r * math.cos(p.phi), 0.0)
    y = (0.0, 0.0, -2 * p.theta)
    z = bch_compose(x, y, order)
    approx = expm(-1j * generator(ops, z))
    return interior_norm(approx - target, cfg.interior if interior is None else interior)
