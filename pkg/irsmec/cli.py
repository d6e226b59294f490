"""
IRS-MEC CLI - delay-optimal two-user offloading simulator.

Usage:
    irsmec [--verbose|--quiet] run --config <path|preset> --out <path> [--format csv|json]
    irsmec certify --config <path|preset> --instances <n>
    irsmec presets --list | --show NAME

Environment Variables:
    IRSMEC_SEED: Overrides the scenario seed
    IRSMEC_WORKERS: Worker threads for the trial runner
    IRSMEC_TRIALS: Monte-Carlo trials per sweep point
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from irsmec.config import list_presets, preset_path, resolve_scenario
from irsmec.errors import IrsMecError, ResultsIOError, ScenarioSchemaError
from irsmec.sim import certify, emit_results, run_experiment

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_CERTIFICATION = 2
EXIT_IO = 3

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="irsmec",
        description="IRS-aided two-user MEC offloading simulator",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    # List and inspect the shipped presets
    irsmec presets --list
    irsmec presets --show symmetric

    # Run a preset and write plot-ready CSV
    irsmec run --config symmetric --out results/symmetric.csv

    # Run a custom scenario file with 4 worker threads, JSON output
    irsmec run --config my_scenario.yaml --out out.json --format json --workers 4

    # Check the closed forms against the brute-force oracles
    irsmec certify --config symmetric --instances 1000
        """,
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Only warnings and errors")

    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run a Monte-Carlo experiment")
    run.add_argument("--config", required=True, help="Scenario file (.yaml/.json) or preset name")
    run.add_argument("--out", required=True, help="Output file path")
    run.add_argument(
        "--format",
        choices=("csv", "json"),
        default=None,
        help="Output format (default: from --out suffix, else csv)",
    )
    run.add_argument("--workers", type=int, default=None, help="Worker threads (overrides config)")
    run.add_argument("--trials", type=int, default=None, help="Trials per sweep point (overrides config)")

    cert = commands.add_parser("certify", help="Run oracle-vs-closed-form certification")
    cert.add_argument("--config", required=True, help="Scenario file (.yaml/.json) or preset name")
    cert.add_argument("--instances", type=int, default=1000, help="Random instances per suite")
    cert.add_argument(
        "--grid-resolution", type=int, default=10**5, help="Grid points of the finite-capacity oracle"
    )

    presets = commands.add_parser("presets", help="List or show shipped scenario presets")
    action = presets.add_mutually_exclusive_group(required=True)
    action.add_argument("--list", action="store_true", help="List preset names")
    action.add_argument("--show", metavar="NAME", help="Print a preset file")

    return parser.parse_args(argv)


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)


def _resolve_format(args: argparse.Namespace) -> str:
    if args.format:
        return args.format
    return "json" if Path(args.out).suffix.lower() == ".json" else "csv"


def cmd_run(args: argparse.Namespace) -> int:
    config = resolve_scenario(args.config)
    if args.trials is not None:
        if args.trials < 1:
            raise ScenarioSchemaError("Invalid command line", [f"--trials: must be >= 1, got {args.trials}"])
        config.trials = args.trials
    if args.workers is not None and args.workers < 1:
        raise ScenarioSchemaError("Invalid command line", [f"--workers: must be >= 1, got {args.workers}"])

    print(f"🚀 Running scenario '{config.name}'")
    if config.description:
        print(f"   {config.description}")
    print("-" * 50)
    rows = run_experiment(config, args.workers)
    fmt = _resolve_format(args)
    emit_results(rows, fmt, args.out)

    for row in rows:
        sweep = "-" if row.sweep_value is None else f"{row.sweep_value:g}"
        print(
            f"  {sweep:>10}  {row.scheme:<18} {row.mean_delay_s:.6f} s "
            f"± {row.stderr_s:.2e}  t_no={row.mean_tno_fraction:.3f}"
        )
    print("-" * 50)
    print(f"✅ Wrote {len(rows)} row(s) to {args.out} ({fmt})")
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    config = resolve_scenario(args.config)
    if args.instances < 1:
        raise ScenarioSchemaError("Invalid command line", [f"--instances: must be >= 1, got {args.instances}"])
    report = certify(config, args.instances, args.grid_resolution)
    print("-" * 50)
    for line in report.lines():
        print(line)
    print("-" * 50)
    if not report.passed:
        print("❌ Certification failed")
        return EXIT_CERTIFICATION
    print("✅ All suites passed")
    return EXIT_OK


def cmd_presets(args: argparse.Namespace) -> int:
    if args.list:
        print("Available presets:")
        for name in list_presets():
            print(f"  - {name}")
        return EXIT_OK
    print(preset_path(args.show).read_text(encoding="utf-8"), end="")
    return EXIT_OK


COMMANDS = {"run": cmd_run, "certify": cmd_certify, "presets": cmd_presets}


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    args = parse_args(argv)
    configure_logging(args)
    try:
        return COMMANDS[args.command](args)
    except ScenarioSchemaError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResultsIOError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_IO
    except IrsMecError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"❌ I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
