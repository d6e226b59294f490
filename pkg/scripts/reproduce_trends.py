#!/usr/bin/env python3
"""Run every shipped preset and write one CSV per preset."""

from __future__ import annotations

import argparse
import logging
import time
from pathlib import Path

from irsmec.config import list_presets, load_preset
from irsmec.sim import emit_results, run_experiment


def main() -> None:
    parser = argparse.ArgumentParser(description="Reproduce the preset sweeps")
    parser.add_argument("--out-dir", default="results", help="Directory for the CSV files")
    parser.add_argument("--presets", nargs="*", default=None, help="Preset names (default: all)")
    parser.add_argument("--workers", type=int, default=None, help="Worker threads")
    parser.add_argument("--trials", type=int, default=None, help="Override trials per sweep point")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")
    out_dir = Path(args.out_dir)

    for name in args.presets or list_presets():
        config = load_preset(name)
        if args.trials:
            config.trials = args.trials
        started = time.perf_counter()
        rows = run_experiment(config, args.workers)
        path = out_dir / f"{name}.csv"
        emit_results(rows, "csv", path)
        print(f"{name}: {len(rows)} rows -> {path} ({time.perf_counter() - started:.1f}s)")


if __name__ == "__main__":
    main()
