#!/usr/bin/env python3
"""
ConeCheck - numerical verification of symmetric cone geometry

Batch command-line tool for Euclidean Jordan algebras: distances between
cone points, spectral decompositions, and seeded verification suites that
write schema-stable JSON reports.

Usage:
    # Full verification run, JSON report on stdout
    conecheck verify --algebra "sym:3 x spin:4"

    # Selected suites with a report file
    conecheck verify --algebra "rn:1 x rn:1" --suites isometries --out report.json

    # Distances between two cone points
    conecheck metric --algebra rn:3 --a 1,2,4 --b 2,1,1

    # Spectral decomposition
    conecheck decompose --algebra spin:3 --point 2,1,0
"""
import argparse
import asyncio
import sys
from pathlib import Path
from typing import Dict, List, Optional

from algebra import Algebra, make_algebra
from cone_metrics import ConePoint, MetricKind, distance
from config import Config
from exceptions import (
    ConeCheckError,
    ConfigurationError,
    InvalidDescriptorError,
    NotAProductError,
    NotInConeError,
    WrongRankError,
)
from logging_config import LogConfig, get_logger
from reports import dumps_stable
from spectral import spectral_decompose
from suites import SuiteContext, SuiteRegistry, default_registry
from validation import RunConfig, parse_point, parse_suites, validate_run_config

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130

# Errors that mean the request itself was unusable
USAGE_ERRORS = (
    ConfigurationError,
    InvalidDescriptorError,
    NotInConeError,
    WrongRankError,
    NotAProductError,
)


def format_value(value: float) -> str:
    """12 significant digits, negative zero printed as 0"""
    return format(float(value) + 0.0, ".12g")


class ConeCheck:
    """Main CLI application"""

    def __init__(self, registry: Optional[SuiteRegistry] = None):
        self.config = Config()
        self.registry = registry or default_registry()

    def _point(self, algebra: Algebra, text: str) -> ConePoint:
        return ConePoint.of(algebra.element(parse_point(text, algebra.dim)))

    async def cmd_verify(self, config: RunConfig, out: Optional[Path] = None, pretty: bool = False) -> int:
        """
        Run the selected suites and emit the report

        Returns:
            0 if every check met its expected verdict, else 1

        Raises:
            WrongRankError, NotAProductError: If an explicitly requested suite
                does not apply to the algebra
        """
        context = SuiteContext.from_run_config(config)
        logger.debug(f"Numerical settings: {Config.as_dict()}")
        logger.info(
            f"Verifying {config.algebra}: suites={','.join(config.suites)} "
            f"seed={config.seed} trials={config.trials} tol={config.tol:g}"
        )
        report, outcomes = await self.registry.run_all(context, config.suites, explicit=config.explicit_suites)
        for outcome in outcomes:
            logger.debug(f"{outcome.name}: {outcome.status.value} in {outcome.duration:.2f}s")

        text = report.to_json(config.as_report_dict())
        if out is not None:
            out = Path(out)
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(text, encoding="utf-8")
            logger.info(f"Report written to {out}")

        if pretty:
            frame = report.to_frame()
            print(f"\nConeCheck report for {config.algebra}")
            print("=" * 72)
            print(frame.to_string(index=False) if not frame.empty else "(no checks)")
            print("=" * 72)
            print(f"passed: {report.passed_count}   failed: {report.failed_count}")
        elif out is None:
            sys.stdout.write(text)
        else:
            print(f"passed: {report.passed_count}   failed: {report.failed_count}")

        return EXIT_OK if report.all_passed else EXIT_FAILED

    def cmd_metric(self, algebra: Algebra, point_a: str, point_b: str, kind: Optional[MetricKind] = None, as_json: bool = False) -> int:
        """Print d_T, d_H and d_R (or one of them) between two cone points"""
        a = self._point(algebra, point_a)
        b = self._point(algebra, point_b)
        kinds = [kind] if kind is not None else list(MetricKind)
        values: Dict[str, float] = {k.value: distance(k, a, b) for k in kinds}

        if as_json:
            sys.stdout.write(dumps_stable({"algebra": algebra.signature, "distances": values}))
            return EXIT_OK
        labels = {"thompson": "d_T", "hilbert": "d_H", "riemannian": "d_R"}
        for name, value in values.items():
            print(f"{labels[name]} = {format_value(value)}")
        return EXIT_OK

    def cmd_decompose(self, algebra: Algebra, point: str, as_json: bool = False) -> int:
        """Print ascending eigenvalues, the Jordan frame and the reconstruction residual"""
        x = algebra.element(parse_point(point, algebra.dim))
        decomposition = spectral_decompose(x)
        residual = decomposition.reconstruction_residual(x)

        if as_json:
            sys.stdout.write(dumps_stable({
                "algebra": algebra.signature,
                "eigenvalues": decomposition.eigenvalues.tolist(),
                "frame": decomposition.frame.tolist(),
                "residual": residual,
            }))
            return EXIT_OK

        print(f"eigenvalues: {', '.join(format_value(v) for v in decomposition.eigenvalues)}")
        for i, row in enumerate(decomposition.frame):
            print(f"p{i + 1}: {', '.join(format_value(c) for c in row)}")
        print(f"residual: {residual:.3e}")
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--algebra', required=True,
                        help='Factors joined by "x", each kind:n with kind in rn, spin, sym, herm')
    common.add_argument('--log-level', default=Config.LOG_LEVEL,
                        help=f'Log level (default: {Config.LOG_LEVEL})')
    common.add_argument('--log-file', type=Path, default=None,
                        help='Also write logs to this file')
    common.add_argument('--log-json', action='store_true',
                        help='One JSON object per log line')
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true', help='Machine-readable output')
    output.add_argument('--pretty', action='store_true', help='Human-readable table (verify)')

    parser = argparse.ArgumentParser(
        prog="conecheck",
        description="ConeCheck - numerical verification of symmetric cone geometry",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  conecheck verify --algebra "sym:3 x spin:4"              # All applicable suites
  conecheck verify --algebra rn:3 --suites metrics         # One suite
  conecheck verify --algebra "rn:1 x rn:1" --out r.json    # Report to file
  conecheck metric --algebra rn:3 --a 1,2,4 --b 2,1,1      # d_T, d_H, d_R
  conecheck decompose --algebra spin:3 --point 2,1,0       # Eigenvalues and frame

Point format:
  Comma separated ambient coordinates, factor by factor.
  rn:n     n coordinates
  spin:n   (s, u_1, ..., u_{n-1}), eigenvalues s +/- |u|
  sym:n    upper triangle row by row; off-diagonal entries times sqrt(2)
  herm:n   upper triangle row by row; off-diagonal entries as (re, im) pairs,
           each times sqrt(2)

Exit codes:
  0  every check met its expected verdict
  1  some check failed
  2  usage or configuration error (including an inapplicable suite
     requested with --suites)
        """
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser('verify', parents=[common], help='Run verification suites')
    verify.add_argument('--seed', type=int, default=Config.DEFAULT_SEED,
                        help=f'Base seed; trial i uses seed + i (default: {Config.DEFAULT_SEED})')
    verify.add_argument('--trials', type=int, default=Config.DEFAULT_TRIALS,
                        help=f'Random trials per check (default: {Config.DEFAULT_TRIALS})')
    verify.add_argument('--tol', type=float, default=Config.DEFAULT_TOL,
                        help=f'Run tolerance (default: {Config.DEFAULT_TOL:g})')
    verify.add_argument('--suites', default=None,
                        help=f'Comma list from {",".join(Config.SUITES)} (default: all applicable)')
    verify.add_argument('--r-max', type=int, default=Config.SIGMA_SWEEP_DEFAULT_RANK,
                        help=f'Largest rank for the Σ cardinality sweep (default: {Config.SIGMA_SWEEP_DEFAULT_RANK})')
    verify.add_argument('--out', type=Path, default=None, help='Write the JSON report to this file')

    metric = sub.add_parser('metric', parents=[common], help='Distances between two cone points')
    metric.add_argument('--a', required=True, help='First point')
    metric.add_argument('--b', required=True, help='Second point')
    metric.add_argument('--kind', choices=[k.value for k in MetricKind], default=None,
                        help='Only this metric (default: all three)')

    decompose = sub.add_parser('decompose', parents=[common], help='Spectral decomposition of a point')
    decompose.add_argument('--point', required=True, help='Point coordinates')
    return parser


async def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    LogConfig.setup_logging(args.log_level, args.log_file, json_format=args.log_json)
    app = ConeCheck()

    try:
        if args.command == 'verify':
            requested = parse_suites(args.suites)
            config = validate_run_config(
                algebra=args.algebra,
                seed=args.seed,
                trials=args.trials,
                tol=args.tol,
                suites=requested if requested is not None else Config.suite_names(),
                explicit_suites=requested is not None,
                r_max=args.r_max,
            )
            return await app.cmd_verify(config, out=args.out, pretty=args.pretty)

        algebra = make_algebra(args.algebra)
        if args.command == 'metric':
            kind = MetricKind(args.kind) if args.kind else None
            return app.cmd_metric(algebra, args.a, args.b, kind, as_json=args.json)
        return app.cmd_decompose(algebra, args.point, as_json=args.json)

    except USAGE_ERRORS as e:
        logger.debug(f"Usage error: {e!r}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConeCheckError as e:
        logger.error(f"Run failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED


def main_sync():
    """Synchronous wrapper for console script entry point"""
    try:
        code = asyncio.run(main())
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        sys.exit(EXIT_INTERRUPTED)
    sys.exit(code)


if __name__ == "__main__":
    main_sync()
