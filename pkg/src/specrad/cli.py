"""Command-line front end: ``specrad bounds|kernel|shift|oracle``.

Exit codes: 0 success (whether or not the sandwich converged), 2 input
error, 3 failed eigenvalue/norm iteration, 4 oracle value outside the
computed interval.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import BoundsReport, sandwich
from .errors import NoConvergenceError, NoStabilizationError, SpecradError
from .kernels import KernelSpec, ShiftSpec, build_shift, discretize, min_kernel, min_twisted_kernel
from .matrices import NonnegMatrix, SymmetricNonnegMatrix
from .matrixio import FORMAT_CSV, FORMAT_MM, parse_matrix_file
from .oracles import JACOBI_MAX_DIM, gelfand_radius, jacobi_radius

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_NO_CONVERGENCE = 3
EXIT_INCONSISTENT = 4

# The verdict is a coarse sanity check.  Finite-level bounds of truncated
# infinite-dimensional operators sit a fraction of a percent away from the
# oracles' plateau values, so the verdict tolerates 1% of the interval
# scale before flagging.
ORACLE_SLACK_FLOOR = 1e-8
ORACLE_SLACK_RELATIVE = 1e-2

CLI_DEFAULT_KMAX = 12


@dataclass(frozen=True)
class MatrixFileSource:
    path: str
    fmt: str  # FORMAT_CSV or FORMAT_MM (auto-detected layout)


@dataclass(frozen=True)
class KernelSource:
    spec: KernelSpec


@dataclass(frozen=True)
class ShiftSource:
    spec: ShiftSpec


@dataclass(frozen=True)
class RunConfig:
    source: MatrixFileSource | KernelSource | ShiftSource
    k_max: int = CLI_DEFAULT_KMAX
    gap_tol: float = 1e-8
    eig_tol: float = 1e-12
    output_format: str = "table"
    deterministic: bool = True  # reserved; every code path in this build is deterministic

    def __post_init__(self) -> None:
        if not 0 <= self.k_max <= 30:
            raise ValueError("kmax must lie in [0, 30]")
        if self.gap_tol <= 0.0:
            raise ValueError("gap-tol must be positive")
        if self.eig_tol <= 0.0:
            raise ValueError("eig-tol must be positive")
        if self.output_format not in ("table", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def parse_builtin(name: str, grid: int | None) -> KernelSource | ShiftSource:
    """Resolve builtin names: "min", "min-twisted:<alpha>", "shift:p=<p>,n=<n>"."""
    if name == "min" or name.startswith("min-twisted:"):
        if grid is None:
            raise ValueError("kernel builtins require --grid")
        if name == "min":
            return KernelSource(min_kernel(grid))
        try:
            alpha = float(name.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad alpha in {name!r}") from None
        return KernelSource(min_twisted_kernel(alpha, grid))
    if name.startswith("shift:"):
        try:
            params = dict(part.split("=", 1) for part in name[len("shift:") :].split(","))
            if set(params) != {"p", "n"}:
                raise ValueError
            return ShiftSource(ShiftSpec(int(params["p"]), int(params["n"])))
        except ValueError:
            raise ValueError(f"shift builtin must look like shift:p=1,n=200, got {name!r}") from None
    raise ValueError(f"unknown builtin {name!r}")


def _resolve_matrix(source: MatrixFileSource | KernelSource | ShiftSource) -> NonnegMatrix:
    if isinstance(source, MatrixFileSource):
        return parse_matrix_file(source.path, source.fmt)
    if isinstance(source, KernelSource):
        return discretize(source.spec)
    return build_shift(source.spec)


def _json_payload(report: BoundsReport, n: int) -> dict:
    return {
        "n": n,
        "kMax": report.k_max,
        "rho": report.rho,
        "sigma": report.sigma,
        "converged": report.converged,
        "interval": list(report.final_interval),
        "logScales": report.per_level_log_scale,
    }


def _table_lines(report: BoundsReport) -> list[str]:
    lines = [f"{'k':>5}  {'rho_k':>16}  {'sigma_k':>16}  {'gap':>16}"]
    for k, (lo, hi) in enumerate(zip(report.rho, report.sigma)):
        lines.append(f"{k:>5}  {lo:>16.9g}  {hi:>16.9g}  {hi - lo:>16.9g}")
    lo, hi = report.final_interval
    lines.append(f"interval [{lo:.9g}, {hi:.9g}]")
    lines.append(f"converged: {'true' if report.converged else 'false'}")
    return lines


def _csv_lines(report: BoundsReport) -> list[str]:
    lines = ["k,rho,sigma"]
    for k, (lo, hi) in enumerate(zip(report.rho, report.sigma)):
        lines.append(f"{k},{lo:.17g},{hi:.17g}")
    return lines


def _format_report(report: BoundsReport, n: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_json_payload(report, n))
    if fmt == "csv":
        return "\n".join(_csv_lines(report))
    return "\n".join(_table_lines(report))


def run_bounds(config: RunConfig) -> int:
    """Compute the sandwich for the configured input and print the report."""
    matrix = _resolve_matrix(config.source)
    report = sandwich(matrix, config.k_max, config.gap_tol, config.eig_tol)
    print(_format_report(report, matrix.n, config.output_format))
    return EXIT_OK


def run_oracle(config: RunConfig) -> int:
    """Print independent radius estimates next to the sandwich interval.

    Any oracle value outside [max rho - slack, min sigma + slack] is
    flagged INCONSISTENT and turns the exit code into 4.
    """
    matrix = _resolve_matrix(config.source)
    report = sandwich(matrix, config.k_max, config.gap_tol, config.eig_tol)
    gelfand = gelfand_radius(matrix)
    jacobi = None
    if matrix.n <= JACOBI_MAX_DIM and matrix.is_symmetric():
        jacobi = jacobi_radius(SymmetricNonnegMatrix.from_matrix(matrix))
    lo, hi = report.final_interval
    slack = max(ORACLE_SLACK_FLOOR, ORACLE_SLACK_RELATIVE * max(1.0, hi))
    offenders = [
        result.method
        for result in (gelfand, jacobi)
        if result is not None and not (lo - slack <= result.value <= hi + slack)
    ]
    if config.output_format == "json":
        payload = _json_payload(report, matrix.n)
        payload["gelfand"] = gelfand.value
        payload["jacobi"] = None if jacobi is None else jacobi.value
        payload["consistent"] = not offenders
        print(json.dumps(payload))
    else:
        print(_format_report(report, matrix.n, "table"))
        print(f"gelfand: {gelfand.value:.9g} (levels: {gelfand.steps}, residual: {gelfand.residual:.3g})")
        if jacobi is None:
            print("jacobi: n/a (needs exact symmetry and n <= 64)")
        else:
            print(f"jacobi: {jacobi.value:.9g} (sweeps: {jacobi.steps})")
        if offenders:
            names = ", ".join(offenders)
            print(f"verdict: INCONSISTENT ({names} outside [{lo:.9g}, {hi:.9g}])")
        else:
            print("verdict: CONSISTENT")
    return EXIT_INCONSISTENT if offenders else EXIT_OK


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kmax", type=int, default=CLI_DEFAULT_KMAX, help="deepest squaring level (0..30)")
    parser.add_argument("--gap-tol", type=float, default=1e-8, help="relative gap for declaring convergence")
    parser.add_argument("--eig-tol", type=float, default=1e-12, help="tolerance of the eigenvalue iteration")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=("table", "json", "csv"),
        default="table",
    )
    parser.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="reserved; all computations in this build are deterministic",
    )


def _add_file_source(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--csv", metavar="PATH", help="headerless CSV matrix file")
    group.add_argument("--mm", metavar="PATH", help="Matrix Market file (array or coordinate, real general)")
    return group


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specrad",
        description="Two-sided spectral-radius bounds for nonnegative matrices and positive kernels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser("bounds", help="sandwich bounds for a matrix file")
    _add_file_source(bounds)
    _add_common_options(bounds)

    kernel = sub.add_parser("kernel", help="sandwich bounds for a builtin kernel")
    kernel.add_argument("--name", required=True, help='"min" or "min-twisted:<alpha>"')
    kernel.add_argument("--grid", type=int, required=True, help="grid resolution of the discretization")
    _add_common_options(kernel)

    shift = sub.add_parser("shift", help="sandwich bounds for a truncated weighted shift")
    shift.add_argument("--p", type=int, required=True, help="family parameter (weight period 2^p)")
    shift.add_argument("--n", type=int, required=True, help="truncation dimension")
    _add_common_options(shift)

    oracle = sub.add_parser("oracle", help="independent radius estimates vs. the sandwich interval")
    group = oracle.add_mutually_exclusive_group(required=True)
    group.add_argument("--csv", metavar="PATH")
    group.add_argument("--mm", metavar="PATH")
    group.add_argument("--name", help='builtin: "min", "min-twisted:<alpha>", "shift:p=<p>,n=<n>"')
    oracle.add_argument("--grid", type=int, help="grid resolution for kernel builtins")
    _add_common_options(oracle)

    return parser


def _source_from_args(args: argparse.Namespace) -> MatrixFileSource | KernelSource | ShiftSource:
    if args.command == "kernel":
        source = parse_builtin(args.name, args.grid)
        if not isinstance(source, KernelSource):
            raise ValueError(f"{args.name!r} is not a kernel builtin")
        return source
    if args.command == "shift":
        return ShiftSource(ShiftSpec(args.p, args.n))
    if getattr(args, "csv", None):
        return MatrixFileSource(args.csv, FORMAT_CSV)
    if getattr(args, "mm", None):
        return MatrixFileSource(args.mm, FORMAT_MM)
    return parse_builtin(args.name, getattr(args, "grid", None))


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = RunConfig(
            source=_source_from_args(args),
            k_max=args.kmax,
            gap_tol=args.gap_tol,
            eig_tol=args.eig_tol,
            output_format=args.output_format,
            deterministic=args.deterministic,
        )
        if args.command == "oracle":
            return run_oracle(config)
        return run_bounds(config)
    except (NoConvergenceError, NoStabilizationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (SpecradError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
