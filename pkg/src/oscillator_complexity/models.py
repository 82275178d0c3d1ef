"""Analytic Bogoliubov coefficients for the switched oscillator and de Sitter modes.

De Sitter quantities are written in y = -k tau > 0.  The "in" state is the
Minkowski plane wave, the evolved state the Bunch-Davies mode.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bogoliubov import BogoliubovPair, ModeState
from .complexity import ComplexityReport, full_report
from .errors import DomainError
from .geodesic import principal_theta

#: |k tau| where arg(alpha) = pi/2 and the leading-order bound diverges.
Y_PEAK = 1 / math.sqrt(2)
SINGULAR_Y_TOL = 1e-12


@dataclass(frozen=True)
class SwitchedProfile:
    """Frequency jumping from omega_in to omega_out at t = 0."""

    omega_in: float
    omega_out: float

    def __post_init__(self):
        if not (self.omega_in > 0 and self.omega_out > 0):
            raise DomainError(f"frequencies must be positive: {self.omega_in}, {self.omega_out}")

    @property
    def ratio(self) -> float:
        return self.omega_in / self.omega_out


@dataclass(frozen=True)
class DeSitterPoint:
    y: float

    def __post_init__(self):
        if not (self.y > 0):
            raise DomainError(f"y = -k tau must be positive, got {self.y}")


@dataclass(frozen=True)
class SmoothProfile:
    """omega^2 interpolating between plateaus on [t0, t1].

    The ramp is s(u) = (1 + tanh(steepness u) / tanh(steepness)) / 2 with
    u in [-1, 1] across the window, so both plateaus are reached exactly.
    steepness -> 0 gives a linear ramp in omega^2.
    """

    omega_in: float
    omega_out: float
    t0: float
    t1: float
    steepness: float = 3.0

    def __post_init__(self):
        if not (self.omega_in > 0 and self.omega_out > 0):
            raise DomainError("frequencies must be positive")
        if not self.t0 < self.t1:
            raise DomainError(f"need t0 < t1, got {self.t0}, {self.t1}")
        if not self.steepness > 0:
            raise DomainError("steepness must be positive")

    @classmethod
    def centered(cls, omega_in: float, omega_out: float, width: float, steepness: float = 3.0):
        return cls(omega_in, omega_out, -width / 2, width / 2, steepness)

    def __call__(self, t: float) -> float:
        return smooth_profile_omega_sq(self, t)


def _y(pt) -> float:
    return pt.y if isinstance(pt, DeSitterPoint) else DeSitterPoint(float(pt)).y


def switched_bogoliubov(p: SwitchedProfile) -> BogoliubovPair:
    a = math.sqrt(p.omega_in / p.omega_out)
    b = math.sqrt(p.omega_out / p.omega_in)
    return BogoliubovPair(complex(0.5 * (a + b)), complex(0.5 * (a - b)))


def switched_complexity(p: SwitchedProfile) -> float:
    """2 arsinh|beta| = 2 arsinh sqrt(n)."""
    a = math.sqrt(p.omega_in / p.omega_out)
    return 2 * math.asinh(abs(0.5 * (a - 1 / a)))


def desitter_bogoliubov(pt) -> BogoliubovPair:
    """alpha = 1 - 1/(2y^2) + i/y, beta = e^{2iy} / (2y^2)."""
    y = _y(pt)
    alpha = complex(1 - 0.5 / (y * y), 1 / y)
    beta = cmath.exp(2j * y) / (2 * y * y)
    return BogoliubovPair(alpha, beta)


def desitter_tan_arg_alpha(pt) -> float:
    y = _y(pt)
    return 2 * y / (2 * y * y - 1)


def desitter_tan_arg_alpha_beta(pt) -> float:
    y = _y(pt)
    c, s = math.cos(2 * y), math.sin(2 * y)
    q = 2 * y * y - 1
    return (2 * y * c + q * s) / (q * c - 2 * y * s)


def desitter_csc_sq_arg_alpha(pt) -> float:
    """csc^2(2 arg alpha) = (4y^4 + 1)^2 / (16 y^2 (1 - 2y^2)^2); inf at y = 1/sqrt(2)."""
    y = _y(pt)
    if abs(y - Y_PEAK) < SINGULAR_Y_TOL:
        return math.inf
    return (4 * y**4 + 1) ** 2 / (16 * y * y * (1 - 2 * y * y) ** 2)


def desitter_ir_asymptote(pt) -> float:
    """Super-Hubble estimate 4|ln y| shared by C1 and epsilon D."""
    return 4 * abs(math.log(_y(pt)))


def desitter_ir_terms(pt) -> tuple[float, float]:
    """(|arg a csc 2 arg a|, |2 arg a|), the factors of the IR expansions.

    C1 ~ 4 * first * arsinh|beta| and epsilon D ~ 2 arsinh|beta| + second.
    """
    a = principal_theta(cmath.phase(desitter_bogoliubov(pt).alpha))
    first = 0.5 / float(np.sinc(2 * a / math.pi))
    return abs(first), abs(2 * a)


def bunch_davies_mode(k: float, tau: float) -> ModeState:
    """Massless Bunch-Davies mode and its conformal-time derivative."""
    kt = k * tau
    e = cmath.exp(-1j * kt) / math.sqrt(2 * k)
    f = e * (1 - 1j / kt)
    g = -1j * math.sqrt(k / 2) * cmath.exp(-1j * kt) * (1 - 1j / kt - 1 / (kt * kt))
    return ModeState(f, g, tau)


def desitter_omega_sq(k: float, tau: float, mass_over_hubble: float = 0.0) -> float:
    """k^2 + (m^2/H^2 - 2) / tau^2."""
    return k * k + (mass_over_hubble**2 - 2) / (tau * tau)


def smooth_profile_omega_sq(p: SmoothProfile, t: float) -> float:
    u = (2 * t - p.t0 - p.t1) / (p.t1 - p.t0)
    if u <= -1:
        return p.omega_in**2
    if u >= 1:
        return p.omega_out**2
    s = 0.5 * (1 + math.tanh(p.steepness * u) / math.tanh(p.steepness))
    return p.omega_in**2 + (p.omega_out**2 - p.omega_in**2) * s


def default_desitter_grid(count: int = 400, y_min: float = 1e-3, y_max: float = 1e3) -> np.ndarray:
    """Log-spaced y grid with y = 1/sqrt(2) inserted."""
    grid = np.logspace(math.log10(y_min), math.log10(y_max), count)
    if y_min < Y_PEAK < y_max:
        grid = np.unique(np.append(grid, Y_PEAK))
    return grid


def desitter_curves(y_grid: Sequence[float]) -> list[ComplexityReport]:
    y = np.asarray(y_grid, dtype=float)
    if y.ndim != 1 or y.size == 0:
        raise ValueError("y grid must be a non-empty 1-d sequence")
    if np.any(y <= 0):
        raise DomainError("y grid must be strictly positive")
    if np.any(np.diff(y) <= 0):
        raise ValueError("y grid must be strictly increasing")
    return [full_report(desitter_bogoliubov(float(v))) for v in y]
