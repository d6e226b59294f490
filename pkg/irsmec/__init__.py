"""
IRS-MEC - delay-optimal offloading for two users assisted by an IRS.

Time-sharing NOMA scheduling with closed-form time divisions, discrete IRS
phase search, brute-force oracles and a Monte-Carlo experiment driver.
"""

from irsmec.channel import ChannelSet, Geometry, PhaseVector, sample_channels
from irsmec.config import ScenarioConfig, load_preset, resolve_scenario
from irsmec.errors import IrsMecError, IrsMecErrorCode
from irsmec.rates import RadioParams, RateTuple
from irsmec.scheduling import Schedule, SolverControls, SolverMode, TaskSpec, solve_p1
from irsmec.sim import ResultRow, certify, emit_results, run_experiment

__version__ = "0.1.0"

__all__ = [
    "ChannelSet",
    "Geometry",
    "IrsMecError",
    "IrsMecErrorCode",
    "PhaseVector",
    "RadioParams",
    "RateTuple",
    "ResultRow",
    "Schedule",
    "ScenarioConfig",
    "SolverControls",
    "SolverMode",
    "TaskSpec",
    "certify",
    "emit_results",
    "load_preset",
    "resolve_scenario",
    "run_experiment",
    "sample_channels",
    "solve_p1",
]
