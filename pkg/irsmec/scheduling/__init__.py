"""Scheduler: closed-form time divisions, delays and the outer solver."""

from irsmec.scheduling.candidates import (
    DEFAULT_ETA_GRID_POINTS,
    DEFAULT_EXHAUSTIVE_BUDGET,
    eta_phase_matrix,
    exhaustive_phase_matrix,
    phase_candidates_eta,
    phase_candidates_exhaustive,
    random_phase_matrix,
)
from irsmec.scheduling.division import (
    compute_delays,
    task_compute_time,
    time_division_finite,
    time_division_infinite,
)
from irsmec.scheduling.solver import (
    SolverControls,
    SolverMode,
    noma_benchmark,
    solve_p1,
    tdma_benchmark,
)
from irsmec.scheduling.types import (
    DelayBreakdown,
    FiniteDivision,
    InfiniteDivision,
    Schedule,
    TaskSpec,
    TimeDivision,
)

__all__ = [
    "DEFAULT_ETA_GRID_POINTS",
    "DEFAULT_EXHAUSTIVE_BUDGET",
    "DelayBreakdown",
    "FiniteDivision",
    "InfiniteDivision",
    "Schedule",
    "SolverControls",
    "SolverMode",
    "TaskSpec",
    "TimeDivision",
    "compute_delays",
    "eta_phase_matrix",
    "exhaustive_phase_matrix",
    "noma_benchmark",
    "phase_candidates_eta",
    "phase_candidates_exhaustive",
    "random_phase_matrix",
    "solve_p1",
    "task_compute_time",
    "tdma_benchmark",
    "time_division_finite",
    "time_division_infinite",
]
