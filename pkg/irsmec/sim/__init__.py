"""Experiment driver, result emission and certification."""

from irsmec.sim.certify import CertificationReport, SuiteResult, certify
from irsmec.sim.reporting import CSV_COLUMNS, ResultRow, emit_results, load_results_json
from irsmec.sim.runner import (
    SCHEME_ORDER,
    TrialRecord,
    TrialRunner,
    aggregate,
    run_experiment,
    run_trials,
    solve_trial,
    trial_seed,
)

__all__ = [
    "CSV_COLUMNS",
    "CertificationReport",
    "ResultRow",
    "SCHEME_ORDER",
    "SuiteResult",
    "TrialRecord",
    "TrialRunner",
    "aggregate",
    "certify",
    "emit_results",
    "load_results_json",
    "run_experiment",
    "run_trials",
    "solve_trial",
    "trial_seed",
]
