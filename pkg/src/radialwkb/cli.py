"""Command-line front end.

    radialwkb table --potential power:m=4 --dim 3 --nr 0..20 --format csv
    radialwkb figure gamma_vs_nr --potential power:m=6 --dim 2 --nr 0..40
    radialwkb anharmonic
    radialwkb fit --potential log --dim 2 --nr 0..40 --fit-order 1
    radialwkb validate --dim 2

Exit status: 0 success, 1 domain error, 2 numerical non-convergence,
64 usage error.
"""
from __future__ import annotations

import argparse
import math
import sys

from .exceptions import ConvergenceError, DomainError, UsageError
from .mesh_solver import MeshConfig, validate_solver
from .potentials import parse_potential
from .report import (
    FIGURES,
    anharmonic_gamma_table,
    anharmonic_records,
    build_table,
    figure_dataset,
    rows_to_records,
    to_csv,
    to_json,
)
from .wkb_correction import NORMALIZATIONS, fit_gamma

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CONVERGENCE = 2
EXIT_USAGE = 64

ANHARMONIC_LAMBDAS = (0.0, 0.1, 1.0, 10.0, 100.0, math.inf)
ANHARMONIC_DIMS = (1, 2, 3, 6)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def parse_range(text: str) -> list:
    """``a..b`` inclusive, or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return list(range(a, b + 1))


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _common(p, dim=3):
    p.add_argument("--dim", type=int, default=dim)
    p.add_argument("--mesh-points", type=int, default=100)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--tolerance", type=_positive_float, default=None,
                   help="relative tolerance of the mesh refinement check")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="radialwkb", description="Bohr-Sommerfeld vs exact radial S-states.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = _common(sub.add_parser("table", help="E_exact, E_BS, deviations, gamma"))
    p.add_argument("--potential", required=True)
    p.add_argument("--nr", type=parse_range, default=parse_range("0..20"))

    p = _common(sub.add_parser("figure", help="figure dataset"))
    p.add_argument("fig_id", choices=FIGURES)
    p.add_argument("--potential", default=None)
    p.add_argument("--nr", type=parse_range, default=parse_range("0..40"))

    _common(sub.add_parser("anharmonic", help="ground-state gamma of r^2 + lam r^4"), dim=None)

    p = _common(sub.add_parser("fit", help="fit gamma(n_r) by P_k / sqrt(Q_2k+2)"))
    p.add_argument("--potential", required=True)
    p.add_argument("--nr", type=parse_range, default=parse_range("0..40"))
    p.add_argument("--fit-order", type=int, default=1)
    p.add_argument("--normalization", choices=NORMALIZATIONS, default="q0")

    _common(sub.add_parser("validate", help="mesh solver against closed forms"))
    return parser


def _emit(records, args, columns=None):
    text = to_json(records) if args.format == "json" else to_csv(records, columns)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rtol(args):
    return {} if args.tolerance is None else {"rtol": args.tolerance}


def _cmd_table(args, cfg):
    V = parse_potential(args.potential)
    rows = build_table(V, args.dim, args.nr, cfg, **_rtol(args))
    _emit(rows_to_records(rows), args)
    return EXIT_OK


def _cmd_figure(args, cfg):
    V = parse_potential(args.potential) if args.potential else None
    cols = figure_dataset(args.fig_id, args.dim, potential=V, n_r_values=args.nr, cfg=cfg,
                          **_rtol(args))
    names = list(cols)
    records = [dict(zip(names, vals)) for vals in zip(*cols.values())]
    _emit(records, args, names)
    return EXIT_OK


def _cmd_anharmonic(args, cfg):
    dims = ANHARMONIC_DIMS if args.dim is None else (args.dim,)
    grid = anharmonic_gamma_table(ANHARMONIC_LAMBDAS, dims, cfg)
    _emit(anharmonic_records(ANHARMONIC_LAMBDAS, dims, grid), args)
    return EXIT_OK


def _cmd_fit(args, cfg):
    V = parse_potential(args.potential)
    rows = build_table(V, args.dim, args.nr, cfg, **_rtol(args))
    fit = fit_gamma([(r.q.n_r, r.gamma) for r in rows], args.fit_order, args.normalization)
    rec = {"potential": str(V), "d": args.dim}
    rec.update(fit.to_record())
    _emit([rec], args)
    return EXIT_OK


def _cmd_validate(args, cfg):
    tol = 1e-8 if args.tolerance is None else args.tolerance
    report = validate_solver(args.dim, cfg)
    report["tolerance"] = tol
    report["passed"] = report["max_deviation"] <= tol
    _emit([report], args)
    return EXIT_OK if report["passed"] else EXIT_CONVERGENCE


COMMANDS = {
    "table": _cmd_table,
    "figure": _cmd_figure,
    "anharmonic": _cmd_anharmonic,
    "fit": _cmd_fit,
    "validate": _cmd_validate,
}


def run(argv=None) -> int:
    """Parse ``argv`` and run one subcommand; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = MeshConfig(n_points=args.mesh_points)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"radialwkb: {exc}\n")
        return EXIT_USAGE
    except ConvergenceError as exc:
        sys.stderr.write(f"radialwkb: not converged: {exc}\n")
        return EXIT_CONVERGENCE
    except DomainError as exc:
        sys.stderr.write(f"radialwkb: {exc}\n")
        return EXIT_DOMAIN


def main():
    sys.exit(run())
