#!/usr/bin/env python3
"""
IRS-MEC CLI entry point.

Usage:
    python main.py presets --list
    python main.py run --config symmetric --out results/symmetric.csv
    python main.py certify --config symmetric --instances 1000

Environment Variables:
    IRSMEC_SEED: Overrides the scenario seed
    IRSMEC_WORKERS: Worker threads for the trial runner
    IRSMEC_TRIALS: Monte-Carlo trials per sweep point
"""

import sys

from irsmec.cli import main

if __name__ == "__main__":
    sys.exit(main())
