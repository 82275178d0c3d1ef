"""Command-line front end: parameter sweeps, oracle runs and validation suites.

Every command writes one table, as CSV (header row, LF line endings) or as
JSON of the form {"meta": {...}, "rows": [...]}.  Floats are written in
Python's shortest round-trip form; non-finite values become the strings
"inf", "-inf" and "nan" in JSON.

Options may also come from a flat ``key = value`` file passed with
``--config``; keys are option names with dashes or underscores, and flags
given on the command line win.

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import sys
from typing import Any, Callable, Optional, Sequence

import numpy as np

from . import __version__
from .bogoliubov import particle_number
from .complexity import ComplexityReport, full_report
from .errors import DomainError, RangeError, StepTooLarge, WronskianViolation
from .models import (
    Y_PEAK,
    SmoothProfile,
    SwitchedProfile,
    desitter_bogoliubov,
    desitter_ir_asymptote,
    switched_bogoliubov,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("algebra", "geodesic", "switch-ode", "desitter-ode", "fock")
PROFILES = ("smooth", "constant", "desitter")

Row = dict[str, Any]


class UsageError(Exception):
    pass


# -- grids and parsing -------------------------------------------------------


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.replace(";", ",").split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _bool(text: str) -> bool:
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {text!r}")


def make_grid(lo: float, hi: float, count: int, scale: str = "log") -> np.ndarray:
    """Grid with count >= 2 points on [lo, hi]; log grids need lo > 0."""
    if count < 2:
        raise UsageError(f"grid count must be >= 2, got {count}")
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise UsageError(f"grid needs finite min < max, got {lo}, {hi}")
    if scale == "log":
        if lo <= 0:
            raise UsageError(f"log grid needs min > 0, got {lo}")
        return np.logspace(math.log10(lo), math.log10(hi), count)
    if scale == "linear":
        return np.linspace(lo, hi, count)
    raise UsageError(f"unknown grid scale {scale!r}")


def _grid_from_args(args, explicit: Optional[list[float]]) -> np.ndarray:
    if explicit:
        vals = np.asarray(explicit, dtype=float)
        if np.any(~np.isfinite(vals)) or np.any(vals <= 0):
            raise UsageError("grid values must be finite and positive")
        return vals
    return make_grid(args.min, args.max, args.count, args.scale)


def read_config(path: str) -> dict[str, str]:
    """Flat ``key = value`` entries; blank lines and ``#`` comments ignored."""
    out: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise UsageError(f"{path}:{n}: empty key")
        out[key.replace("-", "_")] = value
    return out


# -- output ------------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    return str(v)


def render_csv(rows: Sequence[Row], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def render_json(rows: Sequence[Row], meta: dict) -> str:
    doc = {"meta": _json_value(meta), "rows": [_json_value(r) for r in rows]}
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _emit(args, rows: Sequence[Row], columns: Sequence[str]) -> None:
    if args.format == "json":
        text = render_json(rows, _meta(args))
    else:
        text = render_csv(rows, columns)
    if args.output in (None, "", "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _meta(args) -> dict:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("handler", "config_path")}
    return {"command": args.command, "version": __version__, "config": cfg}


# -- rows --------------------------------------------------------------------


def _flags(rep: ComplexityReport) -> str:
    names = []
    if rep.singular_theta:
        names.append("singular_theta")
    if rep.small_theta_used:
        names.append("small_theta")
    if rep.leading_order_reliable:
        names.append("reliable")
    return ";".join(names)


SWITCH_COLUMNS = ["ratio", "alpha", "beta", "n", "C1"]
SWITCH_ORACLE_COLUMNS = ["beta_ode", "beta_rel_err"]


def switch_row(ratio: float, oracle_width: Optional[float] = None) -> Row:
    p = SwitchedProfile(float(ratio), 1.0)
    b = switched_bogoliubov(p)
    row: Row = {
        "ratio": float(ratio),
        "alpha": b.alpha.real,
        "beta": b.beta.real,
        "n": particle_number(b),
        "C1": full_report(b).c1_bound,
    }
    if oracle_width is not None:
        from .oracle import smooth_profile_bogoliubov

        num = smooth_profile_bogoliubov(SmoothProfile.centered(p.omega_in, p.omega_out, oracle_width / p.omega_in))
        row["beta_ode"] = num.beta.real
        row["beta_rel_err"] = abs(num.beta - b.beta) / abs(b.beta) if b.beta != 0 else abs(num.beta)
    return row


DESITTER_COLUMNS = [
    "y", "abs_alpha", "abs_beta", "arg_alpha", "theta", "r", "phi",
    "C1", "C2", "gate_set1", "gate_set2", "ir_asymptote", "flags",
]
DESITTER_ORACLE_COLUMNS = ["abs_beta_ode", "alpha_rel_err", "beta_rel_err"]


def desitter_row(y: float) -> Row:
    b = desitter_bogoliubov(float(y))
    rep = full_report(b)
    return {
        "y": float(y),
        "abs_alpha": abs(b.alpha),
        "abs_beta": abs(b.beta),
        "arg_alpha": cmath.phase(b.alpha),
        "theta": rep.theta,
        "r": rep.r,
        "phi": rep.phi,
        "C1": rep.c1_bound,
        "C2": rep.c2_bound,
        "gate_set1": rep.gate_depth_set1,
        "gate_set2": rep.gate_depth_set2,
        "ir_asymptote": desitter_ir_asymptote(float(y)),
        "flags": _flags(rep),
    }


# -- commands ----------------------------------------------------------------


def cmd_switch(args) -> int:
    ratios = _grid_from_args(args, args.ratios)
    width = args.oracle_width if args.include_oracle else None
    rows = [switch_row(float(q), width) for q in ratios]
    cols = SWITCH_COLUMNS + (SWITCH_ORACLE_COLUMNS if args.include_oracle else [])
    _emit(args, rows, cols)
    return EXIT_OK


def cmd_desitter(args) -> int:
    ys = _grid_from_args(args, args.y_values)
    # explicit values are taken as given; generated grids get the peak point added
    if args.insert_peak and not args.y_values and ys.min() < Y_PEAK < ys.max() and not np.any(ys == Y_PEAK):
        ys = np.sort(np.append(ys, Y_PEAK))
    rows = [desitter_row(float(y)) for y in ys]
    cols = list(DESITTER_COLUMNS)
    if args.include_oracle:
        from .oracle import desitter_numeric_bogoliubov

        pairs = desitter_numeric_bogoliubov(ys, tau_start=args.tau_start, step=args.step)
        for row, num in zip(rows, pairs):
            exact = desitter_bogoliubov(row["y"])
            row["abs_beta_ode"] = abs(num.beta)
            row["alpha_rel_err"] = abs(num.alpha - exact.alpha) / abs(exact.alpha)
            row["beta_rel_err"] = abs(num.beta - exact.beta) / abs(exact.beta)
        cols += DESITTER_ORACLE_COLUMNS
    _emit(args, rows, cols)
    return EXIT_OK


def _check(name: str, value: float, threshold: float, kind: str = "max") -> Row:
    ok = value <= threshold if kind == "max" else value >= threshold
    return {"suite": "", "check": name, "value": float(value), "threshold": float(threshold),
            "kind": kind, "passed": bool(ok and math.isfinite(value))}


def _suite_algebra(args) -> list[Row]:
    from .su11 import (
        REP_MATRICES,
        STRUCTURE_CONSTANTS,
        bch_compose,
        bracket,
        rep_exponential,
        rep_log_coordinates,
        rep_matrix,
    )

    f = STRUCTURE_CONSTANTS
    jac = np.einsum("abm,mcn->abcn", f, f)
    jacobi = np.abs(jac + np.einsum("abcn->bcan", jac) + np.einsum("abcn->cabn", jac)).max()
    rep = 0.0
    for i in range(3):
        for j in range(3):
            Mi, Mj = REP_MATRICES[i], REP_MATRICES[j]
            rhs = sum(1j * f[i, j, k] * REP_MATRICES[k] for k in range(3))
            rep = max(rep, float(np.abs(Mi @ Mj - Mj @ Mi - rhs).max()))
    rng = np.random.default_rng(1)
    rt = 0.0
    for x in rng.uniform(-1.0, 1.0, size=(20, 3)):
        rt = max(rt, float(np.abs(rep_log_coordinates(rep_exponential(x)) - x).max()))
    x, y = np.array([0.02, -0.03, 0.0]), np.array([0.0, 0.0, 0.04])
    exact = rep_exponential(x) @ rep_exponential(y)
    bch = float(np.linalg.norm(rep_exponential(bch_compose(x, y, 2)) - exact))
    anti = float(np.abs(np.asarray(bracket(x, y)) + np.asarray(bracket(y, x))).max())
    hom = float(np.abs(rep_matrix(bracket(x, y)) * 1j
                       - (rep_matrix(x) @ rep_matrix(y) - rep_matrix(y) @ rep_matrix(x))).max())
    return [
        _check("jacobi_identity", jacobi, 1e-14),
        _check("rep_commutators", rep, 1e-14),
        _check("bracket_antisymmetry", anti, 1e-15),
        _check("rep_bracket_homomorphism", hom, 1e-14),
        _check("exp_log_roundtrip", rt, 1e-10),
        _check("bch2_residual_small_args", bch, 1e-4),
    ]


def _suite_geodesic(args) -> list[Row]:
    from .geodesic import BoundaryTarget, geodesic_complexity, invert_boundary, propagate_tangent, tangent_solution

    v0 = np.array([0.3, -0.2, 0.5])
    sol = tangent_solution(v0)
    num = propagate_tangent(v0, None, 1.0, 400)
    ea = float(np.abs(num - sol(1.0)).max())
    inv = invert_boundary(BoundaryTarget(0.4, 0.9, 0.3))
    c = geodesic_complexity(inv.v)
    closed = 2 * math.sqrt(0.3**2 * (1 + 4 * 0.4**2 / math.sin(0.6) ** 2))
    return [
        _check("euler_arnold_closed_vs_rk4", ea, 1e-10),
        _check("inversion_length_vs_closed_form", abs(c - closed), 1e-12),
    ]


def _suite_switch_ode(args) -> list[Row]:
    from .oracle import smooth_profile_bogoliubov

    rows = []
    for ratio in (4.0, 0.25):
        exact = switched_bogoliubov(SwitchedProfile(ratio, 1.0)).beta
        p = SmoothProfile.centered(ratio, 1.0, 1e-3 / ratio)
        num = smooth_profile_bogoliubov(p)
        rows.append(_check(f"beta_rel_err_ratio_{ratio:g}", abs(num.beta - exact) / abs(exact), 1e-2))
        rows.append(_check(f"normalization_ratio_{ratio:g}", abs(num.normalization - 1), 1e-8))
    return rows


def _suite_desitter_ode(args) -> list[Row]:
    from .oracle import desitter_numeric_bogoliubov

    ys = [0.5, 1.0, 2.0, 5.0, 10.0]
    pairs = desitter_numeric_bogoliubov(ys, tau_start=args.tau_start, step=args.step)
    rows = []
    for y, num in zip(ys, pairs):
        exact = desitter_bogoliubov(y)
        rel = max(abs(num.alpha - exact.alpha) / abs(exact.alpha), abs(num.beta - exact.beta) / abs(exact.beta))
        rows.append(_check(f"rel_err_y_{y:g}", rel, 1e-4))
        rows.append(_check(f"normalization_y_{y:g}", abs(num.normalization - 1), 1e-10))
    return rows


def _suite_fock(args) -> list[Row]:
    from .oracle import FockConfig, commutator_residuals, verify_rotation_law, verify_squeeze_law

    cfg = FockConfig(dim=args.dim)
    rows = [_check(f"commutator {k}", v, 1e-10) for k, v in commutator_residuals(cfg).items()]
    for r in (0.1, 0.3):
        rows.append(_check(f"squeeze_law_r_{r:g}_dim_{cfg.dim}", verify_squeeze_law(r, 0.7, cfg), 1e-6))
    rows.append(_check(f"rotation_law_dim_{cfg.dim}", verify_rotation_law(0.4, cfg), 1e-10))
    return rows


SUITE_RUNNERS: dict[str, Callable] = {
    "algebra": _suite_algebra,
    "geodesic": _suite_geodesic,
    "switch-ode": _suite_switch_ode,
    "desitter-ode": _suite_desitter_ode,
    "fock": _suite_fock,
}
VALIDATE_COLUMNS = ["suite", "check", "value", "threshold", "kind", "passed"]


def cmd_validate(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    rows = []
    for name in names:
        for row in SUITE_RUNNERS[name](args):
            row["suite"] = name
            rows.append(row)
    if args.format is None:
        args.format = "json"
    _emit(args, rows, VALIDATE_COLUMNS)
    failed = [r for r in rows if not r["passed"]]
    for r in failed:
        print(f"FAIL {r['suite']}: {r['check']} = {r['value']!r} (threshold {r['threshold']!r})", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


ORACLE_COLUMNS = [
    "label", "t_end", "f_re", "f_im", "g_re", "g_im", "alpha_re", "alpha_im", "beta_re", "beta_im",
    "normalization", "wronskian_drift", "error_estimate", "steps",
]


def cmd_oracle_run(args) -> int:
    from .bogoliubov import bogoliubov_from_modes, plane_wave_mode
    from .models import bunch_davies_mode, desitter_omega_sq
    from .oracle.ode import ODE_WRONSKIAN_TOL, IntegratorConfig, integrate_mode

    if args.profile == "desitter":
        k = args.k
        if not args.t_end < 0:
            raise UsageError("de Sitter runs need t_end < 0 (conformal time)")
        omega_sq = lambda tau: desitter_omega_sq(k, tau, args.mass_over_hubble)  # noqa: E731
        cfg = IntegratorConfig(args.t_start, args.t_end, args.step, args.richardson)
        init = bunch_davies_mode(k, args.t_start) if args.mass_over_hubble == 0 else plane_wave_mode(k, args.t_start)
        reference = plane_wave_mode
        w_ref = k
        label = f"desitter k={k:g}"
    else:
        if args.profile == "constant":
            w = args.omega_in
            omega_sq = lambda t: w * w  # noqa: E731
            w_ref = w
        else:
            half = args.width / 2
            prof = SmoothProfile(args.omega_in, args.omega_out, -half, half, args.steepness)
            omega_sq = prof
            w_ref = args.omega_out
        cfg = IntegratorConfig(args.t_start, args.t_end, args.step, args.richardson)
        init = plane_wave_mode(args.omega_in, args.t_start)
        reference = plane_wave_mode
        label = args.profile
    run = integrate_mode(omega_sq, cfg, init)
    ref = reference(w_ref, run.state.t)
    if args.profile == "desitter":
        b = bogoliubov_from_modes(ref, run.state, tol=ODE_WRONSKIAN_TOL)
    else:
        b = bogoliubov_from_modes(run.state, ref, tol=ODE_WRONSKIAN_TOL)
    s = run.state
    row = {
        "label": label, "t_end": s.t, "f_re": s.f.real, "f_im": s.f.imag, "g_re": s.g.real, "g_im": s.g.imag,
        "alpha_re": b.alpha.real, "alpha_im": b.alpha.imag, "beta_re": b.beta.real, "beta_im": b.beta.imag,
        "normalization": b.normalization, "wronskian_drift": run.wronskian_drift,
        "error_estimate": run.error_estimate, "steps": run.steps,
    }
    _emit(args, [row], ORACLE_COLUMNS)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, default_format: Optional[str] = "csv") -> None:
    p.add_argument("--config", dest="config_path", metavar="FILE", help="flat key = value file; flags win")
    p.add_argument("--output", "-o", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=default_format)


def _grid(p: argparse.ArgumentParser, lo: float, hi: float, count: int) -> None:
    p.add_argument("--min", type=float, default=lo)
    p.add_argument("--max", type=float, default=hi)
    p.add_argument("--count", type=int, default=count)
    p.add_argument("--scale", choices=("log", "linear"), default="log")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="osc-complexity",
        description="Complexity bounds and gate depths for time-dependent oscillators.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("switch", help="sweep omega_in / omega_out for the sudden frequency switch")
    _common(p)
    _grid(p, 0.01, 100.0, 201)
    p.add_argument("--ratios", type=_float_list, default=None, help="explicit comma-separated ratios")
    p.add_argument("--include-oracle", type=_bool, nargs="?", const=True, default=False)
    p.add_argument("--oracle-width", type=float, default=1e-3, help="transition width in units of 1/omega_in")
    p.set_defaults(handler=cmd_switch)

    p = sub.add_parser("desitter", help="sweep y = -k tau for the massless de Sitter mode")
    _common(p)
    _grid(p, 1e-3, 1e3, 400)
    p.add_argument("--y-values", type=_float_list, default=None, help="explicit comma-separated y values")
    p.add_argument("--insert-peak", type=_bool, nargs="?", const=True, default=True,
                   help="add y = 1/sqrt(2) to a generated grid that straddles it")
    p.add_argument("--include-oracle", type=_bool, nargs="?", const=True, default=False)
    p.add_argument("--tau-start", type=float, default=-100.0)
    p.add_argument("--step", type=float, default=0.001)
    p.set_defaults(handler=cmd_desitter)

    p = sub.add_parser("validate", help="run oracle cross-checks and report residuals")
    _common(p, default_format=None)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--dim", type=int, default=60, help="Fock truncation for the fock suite")
    p.add_argument("--tau-start", type=float, default=-100.0)
    p.add_argument("--step", type=float, default=0.001)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("oracle-run", help="integrate one mode through a frequency profile")
    _common(p)
    p.add_argument("--profile", choices=PROFILES, default="smooth")
    p.add_argument("--omega-in", type=float, default=4.0)
    p.add_argument("--omega-out", type=float, default=1.0)
    p.add_argument("--width", type=float, default=0.25)
    p.add_argument("--steepness", type=float, default=3.0)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--mass-over-hubble", type=float, default=0.0)
    p.add_argument("--t-start", type=float, default=-1.0)
    p.add_argument("--t-end", type=float, default=1.0)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--richardson", type=_bool, nargs="?", const=True, default=False)
    p.set_defaults(handler=cmd_oracle_run)
    return parser


def _subparser(parser: argparse.ArgumentParser, name: str) -> argparse.ArgumentParser:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[name]
    raise KeyError(name)


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("command", nargs="?")
    pre.add_argument("--config", dest="config_path")
    known, _ = pre.parse_known_args(argv)
    if not known.config_path or known.command is None:
        return
    try:
        sp = _subparser(parser, known.command)
    except KeyError:
        return
    entries = read_config(known.config_path)
    dests = {a.dest: a for a in sp._actions}
    defaults = {}
    for key, value in entries.items():
        if key == "command":
            if value != known.command:
                raise UsageError(f"config is for command {value!r}, not {known.command!r}")
            continue
        if key not in dests or key in ("help", "config_path", "handler"):
            raise UsageError(f"unknown config key {key!r} for {known.command}")
        action = dests[key]
        if action.choices is not None and value not in action.choices:
            raise UsageError(f"config {key} = {value!r} not in {sorted(action.choices)}")
        try:
            defaults[key] = action.type(value) if action.type else value
        except (argparse.ArgumentTypeError, ValueError) as exc:
            raise UsageError(f"config {key} = {value!r}: {exc}")
    sp.set_defaults(**defaults)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"osc-complexity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse usage errors and --help/--version
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (UsageError, DomainError, RangeError, ValueError) as exc:
        if isinstance(exc, (WronskianViolation, StepTooLarge)):
            print(f"osc-complexity: integration failed: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"osc-complexity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
