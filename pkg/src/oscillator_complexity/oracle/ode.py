"""Fixed-step RK4 integration of f'' + omega^2(t) f = 0 and Bogoliubov extraction.

The state (f, g = f') is complex but omega^2 is real, so the complex RK4
update is the same as integrating the four real components
(Re f, Im f, Re g, Im g) as a first-order system.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from ..bogoliubov import BogoliubovPair, ModeState, bogoliubov_from_modes, plane_wave_mode
from ..errors import StepTooLarge
from ..models import SmoothProfile, bunch_davies_mode, desitter_omega_sq

#: Largest allowed step * |omega| anywhere along the run.
MAX_PHASE_PER_STEP = 0.1
#: Wronskian tolerance applied to integrated modes before projection.
ODE_WRONSKIAN_TOL = 1e-8

OmegaSq = Callable[[float], float]
ModeRef = Callable[[float], ModeState]


@dataclass(frozen=True)
class IntegratorConfig:
    t_start: float
    t_end: float
    step: float
    richardson: bool = False

    def __post_init__(self):
        if not self.t_start < self.t_end:
            raise ValueError(f"need t_start < t_end, got {self.t_start}, {self.t_end}")
        if not 0 < self.step <= self.t_end - self.t_start:
            raise ValueError(f"step {self.step} outside (0, t_end - t_start]")


@dataclass(frozen=True)
class ModeRun:
    state: ModeState
    wronskian_drift: float
    steps: int
    error_estimate: Optional[float] = None


def _n_steps(length: float, step: float) -> int:
    return max(1, math.ceil(length / step * (1 - 1e-12)))


def _march(omega_sq: OmegaSq, f: complex, g: complex, t: float, t_to: float, step: float):
    n = _n_steps(t_to - t, step)
    h = (t_to - t) / n
    lim = MAX_PHASE_PER_STEP / h
    lim2 = lim * lim
    w_a = omega_sq(t)
    for i in range(n):
        w_m = omega_sq(t + 0.5 * h)
        t_next = t_to if i == n - 1 else t + h
        w_b = omega_sq(t_next)
        if max(abs(w_a), abs(w_m), abs(w_b)) > lim2:
            w = math.sqrt(max(abs(w_a), abs(w_m), abs(w_b)))
            raise StepTooLarge(f"step * |omega| = {h * w:.3g} > {MAX_PHASE_PER_STEP} near t = {t:.6g}")
        k1f, k1g = g, -w_a * f
        k2f, k2g = g + 0.5 * h * k1g, -w_m * (f + 0.5 * h * k1f)
        k3f, k3g = g + 0.5 * h * k2g, -w_m * (f + 0.5 * h * k2f)
        k4f, k4g = g + h * k3g, -w_b * (f + h * k3f)
        f = f + h * (k1f + 2 * k2f + 2 * k3f + k4f) / 6
        g = g + h * (k1g + 2 * k2g + 2 * k3g + k4g) / 6
        t = t_next
        w_a = w_b
    return f, g, n


def integrate_trajectory(
    omega_sq: OmegaSq, init: ModeState, times: Sequence[float], step: float
) -> tuple[list[ModeState], int]:
    """Integrate from init.t through increasing checkpoint times.

    Each segment between checkpoints is split into equal steps no longer
    than ``step``.  Returns the states at the checkpoints and the total
    step count.
    """
    init.check()
    f, g, t = complex(init.f), complex(init.g), float(init.t)
    out = []
    total = 0
    for t_to in times:
        if not t_to > t:
            raise ValueError("checkpoint times must increase past the initial time")
        f, g, n = _march(omega_sq, f, g, t, float(t_to), step)
        total += n
        t = float(t_to)
        out.append(ModeState(f, g, t))
    return out, total


def integrate_mode(omega_sq: OmegaSq, cfg: IntegratorConfig, init: ModeState) -> ModeRun:
    """Evolve a mode pair from cfg.t_start to cfg.t_end.

    With ``cfg.richardson`` the run is repeated at half the step; the finer
    state is returned with error estimate max(|df|, |dg|) / 15.
    """
    if abs(init.t - cfg.t_start) > 1e-12 * max(1.0, abs(cfg.t_start)):
        raise ValueError(f"initial state at t={init.t}, config starts at {cfg.t_start}")
    (state,), n = integrate_trajectory(omega_sq, init, [cfg.t_end], cfg.step)
    estimate = None
    if cfg.richardson:
        coarse = state
        (state,), n = integrate_trajectory(omega_sq, init, [cfg.t_end], cfg.step / 2)
        estimate = max(abs(state.f - coarse.f), abs(state.g - coarse.g)) / 15
    drift = abs(state.wronskian - init.wronskian)
    return ModeRun(state, drift, n, estimate)


def numeric_bogoliubov(
    omega_sq: OmegaSq,
    cfg: IntegratorConfig,
    init: ModeState,
    *,
    in_mode: Optional[ModeRef] = None,
    out_mode: Optional[ModeRef] = None,
) -> BogoliubovPair:
    """Bogoliubov pair between the evolved mode and a reference at cfg.t_end.

    Pass exactly one reference.  ``out_mode`` treats the evolved mode as the
    "in" mode (e.g. an out-plateau plane wave); ``in_mode`` treats the
    evolved mode as the "out" mode (e.g. the Minkowski wave against an
    evolving de Sitter mode).
    """
    if (in_mode is None) == (out_mode is None):
        raise ValueError("pass exactly one of in_mode, out_mode")
    evolved = integrate_mode(omega_sq, cfg, init).state
    if out_mode is not None:
        return bogoliubov_from_modes(evolved, out_mode(cfg.t_end), tol=ODE_WRONSKIAN_TOL)
    return bogoliubov_from_modes(in_mode(cfg.t_end), evolved, tol=ODE_WRONSKIAN_TOL)


def smooth_profile_bogoliubov(p: SmoothProfile, step: Optional[float] = None) -> BogoliubovPair:
    """Numerical pair for a transition window, in/out plane waves at its edges.

    Both plateaus are exact, so integration is only needed across [t0, t1].
    The default step resolves both the window and the larger frequency.
    """
    width = p.t1 - p.t0
    w_max = max(p.omega_in, p.omega_out)
    if step is None:
        step = min(width / 200, 0.01 / w_max)
    cfg = IntegratorConfig(p.t0, p.t1, min(step, width))
    init = plane_wave_mode(p.omega_in, p.t0)
    return numeric_bogoliubov(p, cfg, init, out_mode=lambda t: plane_wave_mode(p.omega_out, t))


def desitter_numeric_bogoliubov(
    y_values: Sequence[float],
    k: float = 1.0,
    tau_start: float = -100.0,
    step: float = 0.001,
    bunch_davies_start: bool = True,
) -> list[BogoliubovPair]:
    """Pairs (Minkowski in, evolved de Sitter mode) at conformal times -y/k.

    tau_start is in units of 1/k.  The evolved mode starts either from the
    exact Bunch-Davies data or from the Minkowski wave, whose mismatch at a
    finite start time is O(1 / (k |tau_start|)).  A single run passes through
    all requested points.
    """
    ys = [float(y) for y in y_values]
    if ys and max(ys) >= -tau_start:
        raise ValueError(f"oracle needs every y below -tau_start = {-tau_start:g}, got y = {max(ys):g}")
    order = sorted(range(len(ys)), key=lambda i: -ys[i])
    taus = [-ys[i] / k for i in order]
    t0 = tau_start / k
    init = bunch_davies_mode(k, t0) if bunch_davies_start else plane_wave_mode(k, t0)
    states, _ = integrate_trajectory(lambda tau: desitter_omega_sq(k, tau), init, taus, step / k)
    pairs: list[Optional[BogoliubovPair]] = [None] * len(ys)
    for i, s in zip(order, states):
        pairs[i] = bogoliubov_from_modes(plane_wave_mode(k, s.t), s, tol=ODE_WRONSKIAN_TOL)
    return pairs  # type: ignore[return-value]
