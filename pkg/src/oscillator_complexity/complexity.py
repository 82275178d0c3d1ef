"""Closed-form complexity measures for the target S(r, phi) R(theta).

All measures use the principal winding of theta, (-pi/2, pi/2].  The
geometric bounds do not depend on phi; the gate depths do.  Gate depths are
reported as epsilon * D, i.e. in units of the inverse gate step.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bogoliubov import BogoliubovPair, SqueezeRotationParams, params_from_bogoliubov
from .geodesic import principal_theta, theta_flags

#: r below this fraction of |theta| counts as the reliable leading-order regime.
RELIABLE_RATIO = 0.1


def _two_theta_csc(theta: float) -> float:
    sc = float(np.sinc(2 * theta / math.pi))
    return math.inf if sc == 0 else 1.0 / sc


def _bound(r: float, theta: float, correction: float) -> float:
    # 2 sqrt(theta^2 (1 + 4 r^2 c csc^2 2theta)) == 2 sqrt(theta^2 + r^2 c (2 theta csc 2theta)^2)
    if r == 0:
        return 2 * abs(theta)
    return 2 * math.sqrt(theta * theta + r * r * correction * _two_theta_csc(theta) ** 2)


def c1_bound(p: SqueezeRotationParams) -> float:
    """Leading-order geometric upper bound 2 sqrt(theta^2 (1 + 4 r^2 csc^2 2theta)).

    Reduces to 2r at theta = 0 and to ~2 sqrt(theta^2 + r^2) for small
    theta.  Diverges on the singular set theta = +-pi/2.
    """
    return _bound(p.r, principal_theta(p.theta), 1.0)


def c2_bound(p: SqueezeRotationParams) -> float:
    """Bound including the first BCH commutator: 4 r^2 -> 4 r^2 (1 + theta^2)."""
    theta = principal_theta(p.theta)
    return _bound(p.r, theta, 1.0 + theta * theta)


def c1_bound_bogoliubov(b: BogoliubovPair) -> float:
    """C1 written directly in alpha and beta.

    2 sqrt(arg(alpha)^2 (1 + 4 arsinh^2|beta| csc^2(2 arg alpha))).
    """
    a = principal_theta(cmath.phase(b.alpha))
    rb = math.asinh(abs(b.beta))
    if a == 0:
        return 2 * rb
    s = math.sin(2 * a)
    if s == 0:
        return math.inf if rb > 0 else 2 * abs(a)
    return 2 * math.sqrt(a * a * (1 + 4 * rb * rb / (s * s)))


def gate_depth_set1(p: SqueezeRotationParams) -> float:
    """epsilon * D for the gates exp(-i eps O1), exp(-i eps O2), exp(-i eps O3)."""
    r, phi = p.r, p.phi
    return abs(2 * r * math.sin(phi)) + abs(2 * r * math.cos(phi)) + abs(2 * principal_theta(p.theta))


def gate_depth_set2(p: SqueezeRotationParams) -> float:
    """epsilon * D for the gates built on O2, O3, O2 O3 and O3 O2."""
    r, phi = p.r, p.phi
    return abs(4 * r * math.sin(phi)) + abs(2 * r * math.cos(phi)) + abs(2 * principal_theta(p.theta))


@dataclass(frozen=True)
class ComplexityReport:
    r: float
    theta: float
    phi: float
    c1_bound: float
    c2_bound: float
    gate_depth_set1: float
    gate_depth_set2: float
    singular_theta: bool
    small_theta_used: bool
    leading_order_reliable: bool


def leading_order_reliable(r: float, theta: float) -> bool:
    """r << |theta|, or theta at the zero limit with r << 1 (threshold 0.1)."""
    theta = principal_theta(theta)
    singular, small = theta_flags(theta)
    if singular:
        return False
    return r < RELIABLE_RATIO * abs(theta) or (small and r < RELIABLE_RATIO)


def report_from_params(p: SqueezeRotationParams) -> ComplexityReport:
    theta = principal_theta(p.theta)
    singular, small = theta_flags(theta)
    return ComplexityReport(
        r=p.r,
        theta=theta,
        phi=p.phi,
        c1_bound=c1_bound(p),
        c2_bound=c2_bound(p),
        gate_depth_set1=gate_depth_set1(p),
        gate_depth_set2=gate_depth_set2(p),
        singular_theta=singular,
        small_theta_used=small and p.r > 0,
        leading_order_reliable=leading_order_reliable(p.r, theta),
    )


def full_report(b: BogoliubovPair) -> ComplexityReport:
    """Every measure for one Bogoliubov pair."""
    return report_from_params(params_from_bogoliubov(b))

