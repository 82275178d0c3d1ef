"""Mode functions, Bogoliubov coefficients and the (r, theta, phi) parametrization.

Conventions: a mode pair (f, g = df/dt) obeys f g* - f* g = i.  Given an
"in" pair (f, g) and an "out" pair (f~, g~) at the same instant,

    alpha = -i (f~ g* - f* g~),    beta = i (f~ g - f g~),

so that f~ = alpha f + beta f*.  The coefficients are parametrized as
alpha = e^{-i theta} cosh r, beta = e^{-i(phi - theta)} sinh r.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import WronskianViolation

WRONSKIAN_TOL = 1e-10
NORMALIZATION_TOL = 1e-10


@dataclass(frozen=True)
class ModeState:
    """Position mode f, momentum mode g = df/dt, at time t."""

    f: complex
    g: complex
    t: float = 0.0

    @property
    def wronskian(self) -> complex:
        return self.f * self.g.conjugate() - self.f.conjugate() * self.g

    def wronskian_defect(self) -> float:
        """|W - i| in units of max(1, |f||g|).

        The product scale bounds the rounding error of W, which matters for
        strongly squeezed modes where |f||g| is large.
        """
        scale = max(1.0, abs(self.f) * abs(self.g))
        return abs(self.wronskian - 1j) / scale

    def check(self, tol: float = WRONSKIAN_TOL) -> None:
        d = self.wronskian_defect()
        if not d <= tol:
            raise WronskianViolation(f"Wronskian defect {d:.3g} exceeds {tol:g} at t={self.t}")


def plane_wave_mode(omega: float, t: float) -> ModeState:
    """Positive-frequency mode e^{-i omega t} / sqrt(2 omega) and its derivative."""
    f = cmath.exp(-1j * omega * t) / math.sqrt(2 * omega)
    return ModeState(f, -1j * omega * f, t)


@dataclass(frozen=True)
class BogoliubovPair:
    alpha: complex
    beta: complex

    @property
    def normalization(self) -> float:
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2


@dataclass(frozen=True)
class SqueezeRotationParams:
    """Squeeze magnitude r, rotation angle theta, squeeze angle phi."""

    r: float
    theta: float
    phi: float

    def __post_init__(self):
        if not (self.r >= 0):
            raise ValueError(f"squeeze magnitude must be >= 0, got {self.r}")


def bogoliubov_from_modes(
    in_mode: ModeState, out_mode: ModeState, tol: float = WRONSKIAN_TOL
) -> BogoliubovPair:
    """Coefficients expressing the "out" mode in terms of the "in" mode."""
    if abs(in_mode.t - out_mode.t) > 1e-12 * max(1.0, abs(in_mode.t)):
        raise ValueError(f"modes at different times: {in_mode.t} vs {out_mode.t}")
    in_mode.check(tol)
    out_mode.check(tol)
    f, g = in_mode.f, in_mode.g
    ft, gt = out_mode.f, out_mode.g
    alpha = -1j * (ft * g.conjugate() - f.conjugate() * gt)
    beta = 1j * (ft * g - f * gt)
    return BogoliubovPair(complex(alpha), complex(beta))


def params_from_bogoliubov(b: BogoliubovPair) -> SqueezeRotationParams:
    """r = arsinh|beta|, theta = -arg alpha, phi = -arg(alpha beta).

    Angles are principal values in (-pi, pi]; phi is set to 0 when beta = 0.
    """
    r = math.asinh(abs(b.beta))
    theta = -cmath.phase(b.alpha)
    phi = 0.0 if b.beta == 0 else -cmath.phase(b.alpha * b.beta)
    # -phase() maps the branch point pi to -pi; keep the interval half-open at -pi
    if theta == -math.pi:
        theta = math.pi
    if phi == -math.pi:
        phi = math.pi
    return SqueezeRotationParams(r, theta, phi)


def bogoliubov_from_params(p: SqueezeRotationParams) -> BogoliubovPair:
    """alpha = e^{-i theta} cosh r, beta = e^{-i(phi - theta)} sinh r."""
    alpha = cmath.exp(-1j * p.theta) * math.cosh(p.r)
    beta = cmath.exp(-1j * (p.phi - p.theta)) * math.sinh(p.r)
    return BogoliubovPair(alpha, beta)


def particle_number(b: BogoliubovPair) -> float:
    """Number of "out" quanta in the "in" vacuum, |beta|^2."""
    return abs(b.beta) ** 2
