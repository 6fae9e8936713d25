"""Command-line front end.

Subcommands: figure, sweep, zeros, horizons, minima, radial-check,
frame-compare, validate.  Sweep-style commands emit CSV (default), JSON
or SVG with the resolved configuration embedded, so identical invocations
produce byte-identical files.  The environment variable
GRAVENT_QUAD_NODES overrides the adaptive quadrature node cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

import numpy as np

from . import __version__
from .entanglement import (
    BELL_STATES,
    DEFAULT_QUAD,
    QuadConfig,
    bell_state,
)
from .errors import DomainError, GraventError
from .experiments import (
    SweepSpec,
    figure_preset,
    find_entanglement_minima,
    frame_comparison,
    oracle_equivalence_report,
    radial_invariance_check,
    resolve_sweep,
    run_sweep,
)
from .output import emit_csv, emit_json, emit_svg
from .spacetime import (
    ChargedBlackHole,
    ETA,
    frame_transform_matrix,
    horizons,
    kruskal_map,
)
from .wigner import (
    OrbitParams,
    product_integral,
    rotation_matrix,
    spin_rep,
    theta_zeros,
    wigner_rate_matrix,
)

_CONFIG_KEYS = {
    "variable", "lo", "hi", "samples", "xi2", "z", "q", "beta", "tau_ratio",
    "bell", "format", "output", "stationary_phase",
}
_FIXED_DEFAULTS = {"xi2": 0.0, "z": 2.0, "q": 0.6, "beta": 1.0, "tau_ratio": 5.0}
_PLACEHOLDERS = {"q": 0.0, "tau_ratio": 0.0}


def quad_from_env() -> QuadConfig:
    """Default quadrature settings, honoring GRAVENT_QUAD_NODES."""
    cap = os.environ.get("GRAVENT_QUAD_NODES")
    if cap is None:
        return DEFAULT_QUAD
    cap = int(cap)
    return QuadConfig(max_nodes=cap, start_nodes=min(64, cap // 2))


def preset_config(n: int) -> dict:
    """The flat key/value form of figure_preset(n), suitable for --config."""
    spec = figure_preset(n)
    cfg = {
        "variable": spec.variable,
        "lo": spec.lo,
        "hi": spec.hi,
        "samples": spec.samples,
        "bell": spec.bell.tag,
        "xi2": spec.fixed.xi2,
    }
    for key in ("z", "q", "beta", "tau_ratio"):
        if key != spec.variable:
            cfg[key] = getattr(spec.fixed, key)
    return cfg


def _spec_from_config(cfg: dict, quad: QuadConfig) -> SweepSpec:
    variable = cfg.get("variable")
    if variable is None:
        raise DomainError("a sweep needs 'variable' (one of q, tau_ratio, z)")
    if cfg.get("lo") is None or cfg.get("hi") is None:
        raise DomainError("a sweep needs 'lo' and 'hi'")
    fixed_kwargs = {}
    for key in ("xi2", "z", "q", "beta", "tau_ratio"):
        if key == variable:
            continue
        value = cfg.get(key)
        fixed_kwargs[key] = _FIXED_DEFAULTS[key] if value is None else float(value)
    if variable in _PLACEHOLDERS:
        fixed_kwargs[variable] = _PLACEHOLDERS[variable]
    else:
        fixed_kwargs[variable] = float(cfg["hi"])  # any valid radius; overwritten per row
    return SweepSpec(
        variable=variable,
        lo=float(cfg["lo"]),
        hi=float(cfg["hi"]),
        samples=int(cfg.get("samples") or 400),
        fixed=OrbitParams(**fixed_kwargs),
        bell=bell_state(cfg.get("bell") or "chi1"),
        quad=quad,
    )


def _sweep_meta(spec: SweepSpec, notes: tuple[str, ...],
                stationary_phase: bool) -> dict:
    meta = {
        "package": f"gravent {__version__}",
        "variable": spec.variable,
        "lo": spec.lo,
        "hi": spec.hi,
        "samples": spec.samples,
        "bell": spec.bell.tag,
        "stationary_phase": stationary_phase,
        "quad_max_nodes": spec.quad.max_nodes,
        "xi2": spec.fixed.xi2,
        "notes": list(notes),
    }
    for key in ("z", "q", "beta", "tau_ratio"):
        if key != spec.variable:
            meta[key] = getattr(spec.fixed, key)
    return meta


def render_sweep(spec: SweepSpec, stationary_phase: bool, fmt: str) -> str:
    resolved, notes = resolve_sweep(spec)
    rows = run_sweep(resolved, stationary_phase)
    meta = _sweep_meta(resolved, notes, stationary_phase)
    columns = [resolved.variable, "C", "S", "concurrence", "E", "flags"]
    records = [(r.x, r.C, r.S, r.concurrence, r.E, r.flags) for r in rows]
    if fmt == "csv":
        return emit_csv(columns, records, meta)
    if fmt == "json":
        return emit_json(columns, records, meta)
    return emit_svg({"E": [(r.x, r.E) for r in rows]},
                    axes=(resolved.variable, "E"),
                    title=f"E vs {resolved.variable}", meta=meta)


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    unknown = set(cfg) - _CONFIG_KEYS
    if unknown:
        raise _UsageError(f"unknown config keys: {sorted(unknown)}")
    return cfg


class _UsageError(Exception):
    pass


def _merged_sweep_config(args, allow_config=True) -> dict:
    cfg = _load_config(getattr(args, "config", None) if allow_config else None)
    for key in ("variable", "lo", "hi", "samples", "xi2", "z", "q",
                "beta", "tau_ratio", "bell"):
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    if getattr(args, "stationary_phase", False):
        cfg["stationary_phase"] = True
    return cfg


def _cmd_figure(args) -> int:
    spec = figure_preset(args.n)
    spec = replace(spec, quad=quad_from_env())
    if args.samples is not None:
        spec = replace(spec, samples=args.samples)
    if args.bell is not None:
        spec = replace(spec, bell=bell_state(args.bell))
    _write(render_sweep(spec, args.stationary_phase, args.format), args.output)
    return 0


def _cmd_sweep(args) -> int:
    cfg = _merged_sweep_config(args)
    spec = _spec_from_config(cfg, quad_from_env())
    stationary = bool(cfg.get("stationary_phase", False))
    fmt = cfg.get("format") or args.format or "csv"
    output = args.output or cfg.get("output")
    _write(render_sweep(spec, stationary, fmt), output)
    return 0


def _cmd_zeros(args) -> int:
    roots = theta_zeros(args.xi2)
    if not roots:
        print("no zeros")
    for z in roots:
        print(f"{z:.10g}")
    return 0


def _cmd_horizons(args) -> int:
    roots = horizons(args.xi2)
    if not roots:
        print("no horizons (naked singularity)")
    for z in roots:
        print(f"{z:.10g}")
    return 0


def _cmd_minima(args) -> int:
    if args.figure is not None:
        spec = figure_preset(args.figure)
        spec = replace(spec, quad=quad_from_env())
        stationary = args.stationary_phase
    else:
        cfg = _merged_sweep_config(args)
        spec = _spec_from_config(cfg, quad_from_env())
        stationary = bool(cfg.get("stationary_phase", False))
    if spec.variable != "z":
        raise DomainError("minima search needs a z-sweep")
    minima = find_entanglement_minima(spec, stationary)
    resolved, notes = resolve_sweep(spec)
    meta = _sweep_meta(resolved, notes, stationary)
    meta["feature"] = "entanglement minima"
    text = emit_csv(["z", "E"], [(z, e) for z, e in minima], meta)
    _write(text, args.output)
    return 0


def _cmd_radial_check(args) -> int:
    states = BELL_STATES if args.bell in (None, "all") else (bell_state(args.bell),)
    for chi in states:
        report = radial_invariance_check(chi, quad=quad_from_env())
        print(f"{chi.tag}: PASS  (rotation angle {report.rotation_angle:.3e}, "
              f"max deviation {report.max_deviation:.3e})")
    return 0


def _cmd_frame_compare(args) -> int:
    grid = np.linspace(args.r_lo, args.r_hi, args.samples)
    rows = frame_comparison(grid, args.q, args.p)
    meta = {
        "package": f"gravent {__version__}",
        "r_lo": args.r_lo, "r_hi": args.r_hi, "samples": args.samples,
        "q": args.q, "p": args.p,
    }
    columns = ["r", "static_rate", "kruskal_rate", "flags"]
    records = [(r.r, r.static_rate, r.kruskal_rate, r.flags) for r in rows]
    if args.format == "csv":
        text = emit_csv(columns, records, meta)
    elif args.format == "json":
        text = emit_json(columns, records, meta)
    else:
        text = emit_svg(
            {"static": [(r.r, r.static_rate) for r in rows],
             "kruskal": [(r.r, r.kruskal_rate) for r in rows]},
            axes=("r", "rotation rate"), title="frame comparison", meta=meta)
    _write(text, args.output)
    return 0


def _cmd_validate(args) -> int:
    quad = quad_from_env()
    failures = 0

    def check(name: str, passed: bool, detail: str) -> None:
        nonlocal failures
        print(f"{'PASS' if passed else 'FAIL'}  {name}  ({detail})")
        failures += 0 if passed else 1

    report = oracle_equivalence_report(draws=args.draws, quad=quad)
    check("oracle equivalence (closed vs brute force)",
          report["max_entry_deviation"] < 1e-8,
          f"max entry deviation {report['max_entry_deviation']:.3e}")
    check("concurrence equals C^2+S^2",
          report["max_concurrence_vs_moments"] < 1e-8,
          f"max |conc - (C^2+S^2)| {report['max_concurrence_vs_moments']:.3e}")
    check("concurrence identical across Bell states",
          report["max_cross_bell_spread"] < 1e-10,
          f"max spread {report['max_cross_bell_spread']:.3e}")
    check("density matrices Hermitian, unit trace, PSD",
          report["max_hermiticity"] < 1e-12
          and report["max_trace_error"] < 1e-10
          and report["min_eigenvalue"] > -1e-10,
          f"herm {report['max_hermiticity']:.1e}, trace {report['max_trace_error']:.1e}, "
          f"min eig {report['min_eigenvalue']:.1e}")
    check("moment bound C^2+S^2 <= 1",
          report["max_moment_norm"] <= 1.0,
          f"max C^2+S^2 = {report['max_moment_norm']:.12f}")

    rng = np.random.default_rng(7)
    dev = 0.0
    for _ in range(50):
        a, b = rng.uniform(-6, 6, 2)
        dev = max(dev, float(np.abs(spin_rep(a) @ spin_rep(b) - spin_rep(a + b)).max()))
    check("spin_rep homomorphism", dev < 1e-12, f"max deviation {dev:.3e}")

    model = ChargedBlackHole(0.16)
    rate = wigner_rate_matrix(model, 1.6, 0.6, 0.3)
    accum = product_integral(lambda tau: rate, 0.0, 2.0, 10_000)
    exact = rotation_matrix(rate[0, 2] * 2.0)
    dev = float(np.abs(accum - exact).max())
    check("product integral vs closed-form rotation", dev < 1e-8,
          f"max deviation {dev:.3e}")

    failures_before = failures
    try:
        for chi in BELL_STATES:
            radial_invariance_check(chi, quad=quad)
        check("radial-geodesic invariance (all Bell states)", True, "deviation < 1e-10")
    except GraventError as exc:
        check("radial-geodesic invariance (all Bell states)", False, str(exc))

    dev = 0.0
    for r in np.linspace(1.05, 10.0, 10):
        for t in (-3.0, 0.0, 2.0, 5.0):
            tmat = frame_transform_matrix(kruskal_map(float(r), t))
            dev = max(dev, float(np.abs(tmat @ ETA @ tmat.T - ETA).max()))
    check("frame transform preserves the Minkowski metric", dev < 1e-10,
          f"max deviation {dev:.3e}")

    dev = max(abs(theta_zeros(0.16)[0] - 1.2424428900898052),
              abs(theta_zeros(0.265)[0] - 0.5697224362268005),
              abs(theta_zeros(0.265)[1] - 0.9302775637731995))
    check("angle zeros against quadratic roots", dev < 1e-10,
          f"max deviation {dev:.3e}")

    print(f"{'ALL CHECKS PASSED' if failures == 0 else f'{failures} CHECK(S) FAILED'}")
    return 0 if failures == 0 else 1


def _add_sweep_flags(sub, with_variable=True) -> None:
    if with_variable:
        sub.add_argument("--variable", choices=("q", "tau_ratio", "z"))
        sub.add_argument("--lo", type=float)
        sub.add_argument("--hi", type=float)
    sub.add_argument("--samples", type=int)
    sub.add_argument("--xi2", type=float)
    sub.add_argument("--z", type=float)
    sub.add_argument("--q", type=float)
    sub.add_argument("--beta", type=float)
    sub.add_argument("--tau-ratio", dest="tau_ratio", type=float)
    sub.add_argument("--bell", choices=[chi.tag for chi in BELL_STATES])
    sub.add_argument("--config", help="JSON file with the same keys as the flags")
    sub.add_argument("--stationary-phase", dest="stationary_phase",
                     action="store_true",
                     help="report E=0 for rows whose moments oscillate too "
                          "fast to converge (horizon limit convention)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravent",
        description="Spin entanglement of orbiting two-particle wave packets "
                    "around charged black holes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figure", help="run one of the six built-in sweeps")
    p.add_argument("n", type=int, choices=range(1, 7))
    p.add_argument("--samples", type=int)
    p.add_argument("--bell", choices=[chi.tag for chi in BELL_STATES])
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("-o", "--output")
    p.add_argument("--stationary-phase", dest="stationary_phase",
                   action="store_true")
    p.set_defaults(fn=_cmd_figure)

    p = sub.add_parser("sweep", help="run a custom parameter sweep")
    _add_sweep_flags(p)
    p.add_argument("--format", choices=("csv", "json", "svg"))
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("zeros", help="orbit radii where the rotation angle vanishes")
    p.add_argument("--xi2", type=float, required=True)
    p.set_defaults(fn=_cmd_zeros)

    p = sub.add_parser("horizons", help="event horizon radii for a given charge")
    p.add_argument("--xi2", type=float, required=True)
    p.set_defaults(fn=_cmd_horizons)

    p = sub.add_parser("minima", help="locate entanglement minima of a z-sweep")
    p.add_argument("--figure", type=int, choices=range(1, 7))
    _add_sweep_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_minima)

    p = sub.add_parser("radial-check",
                       help="verify radial free fall leaves Bell states intact")
    p.add_argument("--bell", choices=[chi.tag for chi in BELL_STATES] + ["all"],
                   default="all")
    p.set_defaults(fn=_cmd_radial_check)

    p = sub.add_parser("frame-compare",
                       help="static versus falling-frame rotation rates")
    p.add_argument("--r-lo", dest="r_lo", type=float, default=1.01)
    p.add_argument("--r-hi", dest="r_hi", type=float, default=10.0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--q", type=float, default=1.0)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_frame_compare)

    p = sub.add_parser("validate",
                       help="run the oracle-equivalence and invariant suites")
    p.add_argument("--draws", type=int, default=100)
    p.set_defaults(fn=_cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except GraventError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
