"""Command-line surface: synth | verify | simulate | domain | design.

All numeric output is serialized at 17 significant digits with a fixed
evaluation order, so identical flags produce byte-identical files.
Exit codes: 2 validation, 3 numerical breakdown, 4 zeta oracle domain,
5 infeasible hardware design; every nonzero exit prints exactly one
machine-readable diagnostic line on standard error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .core import SimulationParams
from .design import (
    FabricationConstants,
    spin_chain_params,
    waveguide_design_json,
    waveguide_layout,
)
from .errors import InfeasibleDesign, NumericalBreakdown, OutOfDomain, ValidationError
from .evolution import DEFAULT_STEP, TimeGrid, evolve_ode, evolve_spectral
from .synthesis import synthesize
from .verification import verify_synthesis
from .zetaref import accessible_domain, hurwitz_zeta

_EXIT_VALIDATION = 2
_EXIT_NUMERICAL = 3
_EXIT_ORACLE_DOMAIN = 4
_EXIT_INFEASIBLE = 5


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _diagnostic(exc: Exception, code: int):
    line = json.dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": code})
    print(line, file=sys.stderr)


def _write_text(path, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _params_from(args) -> SimulationParams:
    return SimulationParams(n_levels=args.n, a=args.a, sigma=args.sigma, omega=args.omega)


def _grid_from(args) -> TimeGrid:
    return TimeGrid(t_start=args.t_start, t_end=args.t_end, n_points=args.points, t_coh=args.t_coh)


def _tridiagonal_csv(tri) -> str:
    lines = ["index,B,J_next"]
    for i in range(tri.order):
        j = _fmt(tri.offdiagonal[i]) if i < tri.order - 1 else ""
        lines.append(f"{i},{_fmt(tri.diagonal[i])},{j}")
    return "\n".join(lines) + "\n"


def _tridiagonal_json(tri, report) -> str:
    doc = {
        "diagonal": [_fmt(v) for v in tri.diagonal],
        "offdiagonal": [_fmt(v) for v in tri.offdiagonal],
        "report": {
            "max_eigenvalue_error": _fmt(report.max_eigenvalue_error),
            "max_overlap_error": _fmt(report.max_overlap_error),
            "passed": report.passed,
        },
    }
    import re

    return re.sub(r'"(-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)"', r"\1", json.dumps(doc, indent=2)) + "\n"


def _report_summary(report) -> str:
    return (
        f"max eigenvalue error {report.max_eigenvalue_error:.3e} "
        f"(tol {report.tol_lambda:.1e}), "
        f"max overlap error {report.max_overlap_error:.3e} "
        f"(tol {report.tol_overlap:.1e}): "
        f"{'PASS' if report.passed else 'FAIL'}"
    )


def cmd_synth(args) -> int:
    params = _params_from(args)
    tri = synthesize(params)
    report = verify_synthesis(tri, params, args.tol_lambda, args.tol_overlap)
    text = _tridiagonal_json(tri, report) if args.format == "json" else _tridiagonal_csv(tri)
    _write_text(args.out, text)
    if args.out is not None:
        print(_report_summary(report))
    return 0


def cmd_verify(args) -> int:
    params = _params_from(args)
    tri = synthesize(params)
    report = verify_synthesis(tri, params, args.tol_lambda, args.tol_overlap)
    print(_report_summary(report))
    if not report.passed:
        _diagnostic(ValidationError("synthesis verification failed"), 1)
        return 1
    return 0


def cmd_simulate(args) -> int:
    params = _params_from(args)
    grid = _grid_from(args)
    tri = synthesize(params)
    if args.method == "ode":
        _, series = evolve_ode(tri, grid, args.step)
    else:
        series = evolve_spectral(tri, grid)
    z_sigma = hurwitz_zeta(params.sigma, params.a)
    rows = []
    for t, amp in zip(series.times, series.amplitudes):
        ref = hurwitz_zeta(params.sigma + 1j * params.omega * t, params.a) / z_sigma
        rows.append((t, amp, ref, abs(amp - ref)))
    if args.format == "json":
        doc = [
            {
                "t": _fmt(t),
                "re_a": _fmt(a.real),
                "im_a": _fmt(a.imag),
                "abs_a": _fmt(abs(a)),
                "re_zeta_norm_ref": _fmt(r.real),
                "im_zeta_norm_ref": _fmt(r.imag),
                "abs_deviation": _fmt(dev),
            }
            for t, a, r, dev in rows
        ]
        import re

        text = re.sub(r'"(-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)"', r"\1", json.dumps(doc, indent=2)) + "\n"
    else:
        lines = ["t,re_a,im_a,abs_a,re_zeta_norm_ref,im_zeta_norm_ref,abs_deviation"]
        for t, a, r, dev in rows:
            lines.append(
                f"{_fmt(t)},{_fmt(a.real)},{_fmt(a.imag)},{_fmt(abs(a))},"
                f"{_fmt(r.real)},{_fmt(r.imag)},{_fmt(dev)}"
            )
        text = "\n".join(lines) + "\n"
    _write_text(args.out, text)
    return 0


def cmd_domain(args) -> int:
    if args.sigmas:
        try:
            grid = [float(tok) for tok in args.sigmas.split(",") if tok.strip()]
        except ValueError as exc:
            raise ValidationError(f"bad --sigmas value: {exc}")
    else:
        grid = [args.sigma]
    points = accessible_domain(grid, t_coh=args.t_coh, n_cap=args.n_cap)
    lines = ["sigma,n_min,feasible,t_max"]
    for p in points:
        t_max = "inf" if math.isinf(p.t_max) else _fmt(p.t_max)
        lines.append(f"{_fmt(p.sigma)},{_fmt(p.n_min)},{int(p.feasible)},{t_max}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_design(args) -> int:
    params = _params_from(args)
    tri = synthesize(params)
    if args.target == "spin":
        chain = spin_chain_params(tri)
        lines = ["index,B,J_next"]
        for i in range(chain.fields.size):
            j = _fmt(chain.couplings[i]) if i < chain.fields.size - 1 else ""
            lines.append(f"{i},{_fmt(chain.fields[i])},{j}")
        _write_text(args.out, "\n".join(lines) + "\n")
        return 0
    fab = FabricationConstants(
        kappa=args.kappa,
        alpha=args.alpha,
        bend_radius=args.radius,
        lambda_bar=args.wavelength / (2.0 * np.pi),
        n_substrate=args.ns,
    )
    design = waveguide_layout(tri, fab)
    _write_text(args.out, waveguide_design_json(design) + "\n")
    return 0


def _add_shared(parser):
    parser.add_argument("--n", type=int, default=5, help="number of levels / chain sites")
    parser.add_argument("--a", type=float, default=1.0, help="series shift, 0 < a <= 1")
    parser.add_argument("--sigma", type=float, default=2.0, help="real part of s (> 1)")
    parser.add_argument("--omega", type=float, default=1.0, help="angular frequency scale")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--tol-lambda", type=float, default=None, dest="tol_lambda")
    parser.add_argument("--tol-overlap", type=float, default=1e-9, dest="tol_overlap")


def _add_grid(parser):
    parser.add_argument("--t-start", type=float, default=0.0, dest="t_start")
    parser.add_argument("--t-end", type=float, default=50.0, dest="t_end")
    parser.add_argument("--points", type=int, default=2001)
    parser.add_argument("--t-coh", type=float, default=None, dest="t_coh",
                        help="coherence cutoff; samples beyond it are dropped")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetachain",
        description="Synthesize, verify and export tridiagonal Hamiltonians "
        "whose autocorrelation traces the Hurwitz zeta function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize the chain and write (B, J)")
    _add_shared(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="synthesize and check spectrum/overlap fidelity")
    _add_shared(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="evolve |0> and compare against the zeta oracle")
    _add_shared(p)
    _add_grid(p)
    p.add_argument("--method", choices=("spectral", "ode"), default="spectral")
    p.add_argument("--step", type=float, default=DEFAULT_STEP)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("domain", help="tabulate N_min(sigma) and the time window")
    _add_shared(p)
    p.add_argument("--sigmas", default=None, help="comma-separated sigma grid")
    p.add_argument("--t-coh", type=float, default=None, dest="t_coh")
    p.add_argument("--n-cap", type=int, default=10**6, dest="n_cap")
    p.set_defaults(func=cmd_domain)

    p = sub.add_parser("design", help="export spin-chain CSV or waveguide JSON")
    _add_shared(p)
    p.add_argument("--target", choices=("waveguide", "spin"), default="waveguide")
    p.add_argument("--kappa", type=float, default=2.0, help="coupling scale (placeholder default)")
    p.add_argument("--alpha", type=float, default=1.0, help="coupling decay constant")
    p.add_argument("--radius", type=float, default=300.0, help="bend radius R")
    p.add_argument("--lambda", type=float, default=2.0 * np.pi * 1e-3, dest="wavelength",
                   help="optical wavelength (lambda_bar = lambda / 2 pi)")
    p.add_argument("--ns", type=float, default=1.5, help="substrate refractive index")
    p.set_defaults(func=cmd_design)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        _diagnostic(exc, _EXIT_VALIDATION)
        return _EXIT_VALIDATION
    except NumericalBreakdown as exc:
        _diagnostic(exc, _EXIT_NUMERICAL)
        return _EXIT_NUMERICAL
    except OutOfDomain as exc:
        _diagnostic(exc, _EXIT_ORACLE_DOMAIN)
        return _EXIT_ORACLE_DOMAIN
    except InfeasibleDesign as exc:
        _diagnostic(exc, _EXIT_INFEASIBLE)
        return _EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
