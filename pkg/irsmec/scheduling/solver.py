"""
Outer solver for the joint scheduling / reflection / time-division problem.

Every branch (scheduling order × decoding order) is evaluated over all phase
candidates at once with the closed-form divisions; powers are fixed at their
maxima.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from irsmec.channel import (
    ChannelSet,
    PhaseVector,
    effective_gain,
    effective_gains,
    tdma_optimal_phase,
)
from irsmec.errors import DomainError, UnoffloadableError
from irsmec.rates import ORDERS, RadioParams, RateTuple, UserPair, noma_rates, tdma_rate
from irsmec.scheduling.candidates import (
    DEFAULT_ETA_GRID_POINTS,
    DEFAULT_EXHAUSTIVE_BUDGET,
    eta_phase_matrix,
    exhaustive_phase_matrix,
    random_phase_matrix,
)
from irsmec.scheduling.division import (
    clip_negative,
    delay_arrays,
    finite_division_arrays,
    infinite_division_arrays,
    safe_ratio,
)
from irsmec.scheduling.types import Schedule, TaskSpec, TimeDivision

logger = logging.getLogger(__name__)


class SolverMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    ETA = "eta"
    RANDOM = "random"


@dataclass(frozen=True)
class SolverControls:
    levels: int = 4
    eta_grid_points: int = DEFAULT_ETA_GRID_POINTS
    exhaustive_budget: int = DEFAULT_EXHAUSTIVE_BUDGET
    random_draws: int = 5
    rng: np.random.Generator | None = None
    scheduling_orders: tuple[UserPair, ...] = ORDERS

    def __post_init__(self) -> None:
        orders = tuple(sorted(tuple(o) for o in self.scheduling_orders))
        if not orders or any(o not in ORDERS for o in orders):
            raise DomainError("Scheduling orders must be permutations of (0, 1)", {"orders": orders})
        object.__setattr__(self, "scheduling_orders", orders)


@dataclass(frozen=True)
class _Branch:
    """单个 (调度顺序, 解码顺序) 分支在所有候选上的最优值。"""

    delay: float
    order: UserPair
    decoding: UserPair
    candidate: int
    division: TimeDivision
    delay_first: float
    waiting: float
    r_no: tuple[float, float]


def _tdma_setup(channels: ChannelSet, params: RadioParams, levels: int):
    phases = tuple(tdma_optimal_phase(channels, k, levels) for k in (0, 1))
    r_td = tuple(
        float(tdma_rate(params.max_power_w[k], effective_gain(channels, k, phases[k]), params))
        for k in (0, 1)
    )
    if min(r_td) <= 0:
        raise UnoffloadableError("A user with zero TDMA rate cannot offload", {"r_td": r_td})
    return phases, r_td


def _candidate_matrix(
    channels: ChannelSet,
    mode: SolverMode,
    controls: SolverControls,
    tdma_phases: tuple[PhaseVector, PhaseVector],
) -> np.ndarray:
    n = channels.n_subsurfaces
    if n == 0:
        return np.zeros((1, 0))
    if mode is SolverMode.EXHAUSTIVE:
        return exhaustive_phase_matrix(n, controls.levels, controls.exhaustive_budget)
    if mode is SolverMode.ETA:
        return eta_phase_matrix(tdma_phases[0], tdma_phases[1], controls.eta_grid_points, controls.levels)
    if controls.rng is None:
        raise DomainError("Random phase search needs a random generator")
    return random_phase_matrix(n, controls.levels, controls.random_draws, controls.rng)


def _evaluate_branches(
    task: TaskSpec,
    r_td: tuple[float, float],
    gains: np.ndarray,
    params: RadioParams,
    orders: Sequence[UserPair],
    forced: str | None,
) -> _Branch:
    compute = task.compute_times()
    best: _Branch | None = None
    for order in orders:
        first, second = order
        L1, L2 = task.data_bits[first], task.data_bits[second]
        R1, R2 = r_td[first], r_td[second]
        tc1, tc2 = compute[first], compute[second]
        for decoding in ORDERS:
            by_user = noma_rates(params.max_power_w, gains, decoding, params)
            r1, r2 = np.asarray(by_user[first]), np.asarray(by_user[second])
            if forced == "tdma":
                zeros = np.zeros_like(r1)
                t1, t_no, t2 = zeros + L1 / R1, zeros, zeros + L2 / R2
            elif forced == "noma":
                t1, t_no, t2 = _forced_noma_arrays(L1, L2, R1, R2, r1, r2)
            elif task.infinite_capacity:
                t1, t_no, t2, _ = infinite_division_arrays(L1, L2, R1, R2, r1, r2)
            else:
                t1, t_no, t2, _ = finite_division_arrays(L1, L2, R1, R2, r1, r2, tc1)
            delay_first, delay_sum, waiting = delay_arrays(t1, t_no, t2, tc1, tc2)
            index = int(np.argmin(delay_sum))
            value = float(delay_sum[index])
            if best is None or value < best.delay:
                best = _Branch(
                    delay=value,
                    order=order,
                    decoding=decoding,
                    candidate=index,
                    division=TimeDivision(float(t1[index]), float(t_no[index]), float(t2[index])),
                    delay_first=float(delay_first[index]),
                    waiting=float(waiting[index]),
                    r_no=(float(np.atleast_1d(by_user[0])[index]), float(np.atleast_1d(by_user[1])[index])),
                )
            # only the sequencing differs in the tdma restriction
            if forced == "tdma":
                break
    assert best is not None
    return best


def _forced_noma_arrays(L1, L2, R1, R2, r1, r2):
    """NOMA 基准：共享阶段持续到某一用户发送完毕，剩余数据再 TDMA 发送。"""
    ratio1 = safe_ratio(L1, r1)
    ratio2 = safe_ratio(L2, r2)
    t_no = np.minimum(ratio1, ratio2)
    finite = np.isfinite(t_no)
    t_no = np.where(finite, t_no, 0.0)
    with np.errstate(invalid="ignore"):
        t1 = np.where(ratio1 <= ratio2, 0.0, (L1 - t_no * r1) / R1)
        t2 = np.where(ratio2 < ratio1, 0.0, (L2 - t_no * r2) / R2)
    # both users silent in the shared phase: fall back to sequential transmission
    t1 = np.where(finite, t1, L1 / R1)
    t2 = np.where(finite, t2, L2 / R2)
    return clip_negative("t_td_first", t1), clip_negative("t_no", t_no), clip_negative("t_td_second", t2)


def _solve(
    channels: ChannelSet,
    task: TaskSpec,
    params: RadioParams,
    mode: SolverMode,
    controls: SolverControls,
    forced: str | None,
    scheme: str,
) -> Schedule:
    mode = SolverMode(mode)
    tdma_phases, r_td = _tdma_setup(channels, params, controls.levels)
    if forced == "tdma":
        candidates = np.zeros((1, channels.n_subsurfaces))
    else:
        candidates = _candidate_matrix(channels, mode, controls, tdma_phases)
    gains = np.stack([effective_gains(channels, k, candidates) for k in (0, 1)])
    branch = _evaluate_branches(task, r_td, gains, params, controls.scheduling_orders, forced)

    rates = RateTuple(r_td=r_td, r_no=branch.r_no, decoding_order=branch.decoding)
    priority = rates.r_no[0] / r_td[0] + rates.r_no[1] / r_td[1] - 1.0
    compute = task.compute_times()
    first, second = branch.order
    levels = controls.levels if forced != "tdma" else 0
    schedule = Schedule(
        scheduling_order=branch.order,
        decoding_order=branch.decoding,
        phases=PhaseVector(candidates[branch.candidate], levels),
        powers=params.max_power_w,
        time_division=branch.division,
        delay_first=branch.delay_first,
        delay_sum=branch.delay,
        waiting_time=branch.waiting,
        compute_times=(compute[first], compute[second]),
        rates=rates,
        priority=priority,
        tdma_phases=tdma_phases,
        scheme=scheme,
    )
    logger.debug(
        "%s: order=%s decoding=%s lambda=%.4g t_no=%.4g delay=%.6g (%d candidates)",
        scheme,
        branch.order,
        branch.decoding,
        priority,
        branch.division.t_no,
        branch.delay,
        len(candidates),
    )
    return schedule


def solve_p1(
    channels: ChannelSet,
    task: TaskSpec,
    params: RadioParams,
    mode: SolverMode | str = SolverMode.EXHAUSTIVE,
    controls: SolverControls | None = None,
) -> Schedule:
    """
    最小化两用户总时延的时分共享 NOMA 调度。

    两种调度顺序 × 两种解码顺序 × 全部相位候选，功率取最大值；
    TDMA 速率使用各用户独立的最优相位。平局按
    (调度顺序字典序, 解码顺序字典序, 候选序号) 取第一个。
    """
    return _solve(channels, task, params, mode, controls or SolverControls(), None, "timeshare")


def tdma_benchmark(
    channels: ChannelSet,
    task: TaskSpec,
    params: RadioParams,
    controls: SolverControls | None = None,
) -> Schedule:
    """纯 TDMA 基准：t_no = 0，仅优化调度顺序。"""
    return _solve(
        channels, task, params, SolverMode.EXHAUSTIVE, controls or SolverControls(), "tdma", "tdma"
    )


def noma_benchmark(
    channels: ChannelSet,
    task: TaskSpec,
    params: RadioParams,
    mode: SolverMode | str = SolverMode.EXHAUSTIVE,
    controls: SolverControls | None = None,
) -> Schedule:
    """纯 NOMA 基准：t_no 强制为 min(L1/r1, L2/r2)。"""
    return _solve(channels, task, params, mode, controls or SolverControls(), "noma", "noma")
