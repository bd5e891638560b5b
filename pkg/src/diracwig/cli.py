"""Command-line entry point.

Subcommands: figure, grid, report, validate, defaults.  Exit codes:
0 success, 1 invalid configuration, 2 validation failure, 3 numerical
non-convergence.
"""

import argparse
import sys

from .config import ConfigError, format_defaults, parse_config_file, resolve
from .pipeline import (
    GRID_QUANTITIES,
    run_figure,
    run_grid,
    run_report,
    run_validate,
    write_result,
)
from .quadrature import NonConvergenceError

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_VALIDATION = 2
EXIT_NONCONVERGENCE = 3

_OVERRIDE_KEYS = (
    "m", "kz2", "eB", "a", "symmetry", "n", "pol",
    "t_min", "t_max", "t_steps", "s_min", "s_max", "k_min", "k_max",
    "ns", "nk", "l", "epsilon",
)


def _add_overrides(parser):
    parser.add_argument("--config", help="flat key = value configuration file")
    for key in _OVERRIDE_KEYS:
        parser.add_argument(f"--{key}", default=None, help=argparse.SUPPRESS)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="diracwig",
        description="Phase-space information quantifiers for localized Dirac states in a magnetic field",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="emit the data behind one figure id")
    fig.add_argument("--id", type=int, required=True, dest="figure_id", help="figure id 1..8")
    fig.add_argument("--out", required=True, help="output path (.csv or .json)")
    _add_overrides(fig)

    grd = sub.add_parser("grid", help="one (s, kx) raster of a local quantity")
    grd.add_argument("--quantity", required=True, choices=GRID_QUANTITIES)
    grd.add_argument("--state", required=True, choices=("gaussian", "cat"))
    grd.add_argument("--out", required=True)
    _add_overrides(grd)

    rep = sub.add_parser("report", help="scalar-quantifier time series for one state")
    rep.add_argument("--state", required=True, choices=("gaussian", "cat"))
    rep.add_argument("--out", required=True)
    _add_overrides(rep)

    val = sub.add_parser("validate", help="run the invariant suites")
    val.add_argument("--level", default="quick", choices=("quick", "full"))

    sub.add_parser("defaults", help="print all configuration defaults")
    return parser


def _resolved(args, extra=None):
    cli_values = {k: getattr(args, k) for k in _OVERRIDE_KEYS if getattr(args, k, None) is not None}
    if extra:
        cli_values.update(extra)
    file_values = parse_config_file(args.config) if getattr(args, "config", None) else None
    return resolve(cli_values, file_values)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "defaults":
            sys.stdout.write(format_defaults())
            return EXIT_OK
        if args.command == "validate":
            report = run_validate(args.level)
            for line in report.lines():
                print(line)
            return EXIT_OK if report.ok else EXIT_VALIDATION
        if args.command == "figure":
            cfg, explicit = _resolved(args, {"figure": args.figure_id})
            write_result(run_figure(cfg, explicit), args.out)
            return EXIT_OK
        if args.command == "grid":
            cfg, _ = _resolved(args)
            write_result(run_grid(cfg, args.state, args.quantity), args.out)
            return EXIT_OK
        if args.command == "report":
            cfg, _ = _resolved(args)
            write_result(run_report(cfg, args.state), args.out)
            return EXIT_OK
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NonConvergenceError as exc:
        print(f"numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
