"""Command-line front end: sweeps, extrema reports, point evaluations, checks.

Exit codes: 0 success, 1 usage error, 2 runtime failure, 3 check-suite
failure. All angles are radians. Numeric output uses 17 significant digits
so emitted files round-trip exactly.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .entanglement import delta_e, parse_partition
from .lorentz import BoostSpec, wigner_angle
from .states import SpinFamily, SpinParams
from .sweep import (
    DEFAULT_MERGE_RADIUS,
    DEFAULT_PHI_GRID,
    DEFAULT_THETA_GRID,
    GridSpec,
    SweepConfig,
    find_extrema,
    read_csv,
    read_json,
    run_sweep,
    write_csv,
    write_json,
)
from .checks import check_suite


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that signals usage problems instead of exiting with 2."""

    def error(self, message: str) -> None:
        raise _UsageError(message)


def _grid_spec(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected START:STOP:COUNT, got {text!r}")
    try:
        return GridSpec(float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(text: str) -> SpinFamily:
    try:
        return SpinFamily(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}, expected s1 or s2")


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_boost_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--omega", type=float, help="Wigner angle in radians")
    parser.add_argument("--xi", type=float, help="first particle rapidity")
    parser.add_argument("--eta", type=float, help="observer boost rapidity")


def _resolve_boost(args: argparse.Namespace) -> BoostSpec:
    if args.omega is not None:
        if args.xi is not None or args.eta is not None:
            raise _UsageError("give either --omega or --xi/--eta, not both")
        return BoostSpec(omega=args.omega)
    if args.xi is None or args.eta is None:
        raise _UsageError("boost requires --omega or both --xi and --eta")
    return BoostSpec(xi=args.xi, eta=args.eta)


def build_parser() -> _Parser:
    parser = _Parser(prog="spinboost", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_wigner = sub.add_parser("wigner-angle", help="Wigner angle from two rapidities")
    p_wigner.add_argument("--xi", type=float, required=True)
    p_wigner.add_argument("--eta", type=float, required=True)

    p_delta = sub.add_parser("delta-e", help="entanglement change for one state")
    p_delta.add_argument("--state", help="named state identifier")
    p_delta.add_argument("--family", type=_family, help="spin family (s1 or s2)")
    p_delta.add_argument("--theta", type=float, help="polar angle in radians")
    p_delta.add_argument("--phi", type=float, help="azimuthal angle in radians")
    p_delta.add_argument("--alpha", type=float, required=True, help="momentum parameter")
    _add_boost_arguments(p_delta)
    p_delta.add_argument("--partition", type=_partition, required=True,
                         help="avb, mixed, svp or 1v3")

    p_sweep = sub.add_parser("sweep", help="grid sweep of the entanglement change")
    p_sweep.add_argument("--family", type=_family, required=True)
    p_sweep.add_argument("--alpha", type=float, required=True)
    _add_boost_arguments(p_sweep)
    p_sweep.add_argument("--partition", type=_partition, required=True)
    p_sweep.add_argument("--theta-grid", type=_grid_spec, default=DEFAULT_THETA_GRID,
                         metavar="START:STOP:COUNT")
    p_sweep.add_argument("--phi-grid", type=_grid_spec, default=DEFAULT_PHI_GRID,
                         metavar="START:STOP:COUNT")
    p_sweep.add_argument("--out", type=Path, help="output file (default stdout)")
    p_sweep.add_argument("--format", choices=("csv", "json"),
                         help="output format (default csv, json for .json outputs)")
    p_sweep.add_argument("--summary", action="store_true",
                         help="also print an extrema summary to stderr")

    p_extrema = sub.add_parser("extrema", help="extrema report for a sweep file")
    p_extrema.add_argument("--in", dest="infile", type=Path, required=True)
    p_extrema.add_argument("--merge-radius", type=float, default=DEFAULT_MERGE_RADIUS,
                           help="cluster radius in grid steps")

    p_check = sub.add_parser("check", help="run the self-check suite")
    p_check.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _cmd_wigner_angle(args: argparse.Namespace) -> int:
    print(f"{wigner_angle(args.xi, args.eta):.17g}")
    return 0


def _cmd_delta_e(args: argparse.Namespace) -> int:
    angles = (args.family, args.theta, args.phi)
    if args.state is not None:
        if any(v is not None for v in angles):
            raise _UsageError("--state replaces --family/--theta/--phi")
        spin = args.state
    else:
        if any(v is None for v in angles):
            raise _UsageError("give --state or all of --family, --theta, --phi")
        spin = SpinParams(args.family, args.theta, args.phi)
    omega = _resolve_boost(args).resolve()
    result = delta_e(spin, args.alpha, omega, args.partition)
    print(f"omega = {result.omega:.17g}")
    print(f"e_before = {result.e_before:.17g}")
    print(f"e_after = {result.e_after:.17g}")
    print(f"delta_e = {result.delta:.17g}")
    return 0


def _print_extrema(report, stream) -> None:
    if report.flat:
        print("flat surface: value range below the collection tolerance", file=stream)
        return
    for label, entries in (("maxima", report.maxima), ("minima", report.minima)):
        print(f"{label} ({len(entries)} cluster{'s' if len(entries) != 1 else ''}):",
              file=stream)
        for theta, phi, value in entries:
            print(f"  theta = {theta:.17g}  phi = {phi:.17g}  delta_e = {value:.17g}",
                  file=stream)


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec = _resolve_boost(args)
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out is not None and args.out.suffix == ".json" else "csv"
    config = SweepConfig(
        family=args.family,
        alpha=args.alpha,
        omega_spec=spec,
        partition=args.partition,
        theta_grid=args.theta_grid,
        phi_grid=args.phi_grid,
        output=args.out,
        format=fmt,
    )
    result = run_sweep(config)
    if spec.omega is None:
        print(f"omega = {result.omega:.17g}", file=sys.stderr)
    writer = write_csv if fmt == "csv" else write_json
    if args.out is None:
        writer(result, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            writer(result, handle)
    if args.summary:
        _print_extrema(find_extrema(result), sys.stderr)
    return 0


def _sniff_and_read(path: Path):
    with open(path, "r", encoding="utf-8") as handle:
        if path.suffix == ".json":
            return read_json(handle)
        head = handle.read(1)
        handle.seek(0)
        return read_json(handle) if head == "{" else read_csv(handle)


def _cmd_extrema(args: argparse.Namespace) -> int:
    result = _sniff_and_read(args.infile)
    report = find_extrema(result, merge_radius=args.merge_radius)
    _print_extrema(report, sys.stdout)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    report = check_suite()
    if args.as_json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for result in report.results:
            status = "PASS" if result.passed else "FAIL"
            print(f"{status} {result.name}: {result.detail}")
        total = len(report.results)
        good = sum(r.passed for r in report.results)
        print(f"{good}/{total} checks passed")
    return 0 if report.passed else 3


_COMMANDS = {
    "wigner-angle": _cmd_wigner_angle,
    "delta-e": _cmd_delta_e,
    "sweep": _cmd_sweep,
    "extrema": _cmd_extrema,
    "check": _cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help paths
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
