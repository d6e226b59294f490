"""Power-grid and full-enumeration oracles for the joint problem."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from irsmec.channel import ChannelSet, PhaseVector, tdma_optimal_phase
from irsmec.errors import (
    BudgetExceededError,
    ChannelDimensionError,
    DomainError,
    UnoffloadableError,
)
from irsmec.oracle.inner import grid_oracle_p4
from irsmec.rates import ORDERS, RadioParams, RateTuple, UserPair
from irsmec.scheduling.types import Schedule, TaskSpec

logger = logging.getLogger(__name__)

EXHAUSTIVE_ORACLE_BUDGET = 10**4


@dataclass(frozen=True)
class PowerGridResult:
    best_powers: tuple[float, float]
    objective: float
    full_power_objective: float
    full_power_p3: float


def _gain(channels: ChannelSet, user: int, phases: np.ndarray) -> float:
    total = channels.direct[user] + np.sum(channels.cascaded[user] * np.exp(1j * phases))
    return float(abs(total) ** 2)


def _log_rate(bandwidth: float, snr):
    return bandwidth * np.log2(1.0 + snr)


def _ratio(bits: float, rate: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(rate > 0, bits / np.where(rate > 0, rate, 1.0), np.inf)
    return np.where(bits == 0, 0.0, out)


def power_grid_oracle_p3(
    channels: ChannelSet,
    phases: PhaseVector,
    params: RadioParams,
    data_bits: Sequence[float],
    decoding_order: UserPair = (0, 1),
    grid: int = 50,
) -> PowerGridResult:
    """
    在 [0,P1]×[0,P2] 的均匀网格上最大化 max(λ,0)·min(L1/r1, L2/r2)。

    TDMA 速率按最大功率和各自最优相位固定；r = 0 时 L/r 视为 inf，
    两个 NOMA 速率均为零时目标取 0。
    """
    if grid < 10:
        raise DomainError("Power grid needs at least 10 points per axis", {"grid": grid})
    if tuple(decoding_order) not in ORDERS:
        raise DomainError("Decoding order must be a permutation of (0, 1)")
    if phases.size != channels.n_subsurfaces:
        raise ChannelDimensionError(
            "Phase vector length does not match the IRS",
            {"phases": phases.size, "subsurfaces": channels.n_subsurfaces},
        )
    L1, L2 = (float(v) for v in data_bits)
    bandwidth, noise = params.bandwidth_hz, params.noise_power_w

    r_td = []
    for k in (0, 1):
        gain = _gain(channels, k, tdma_optimal_phase(channels, k, phases.levels).phases)
        r_td.append(float(_log_rate(bandwidth, params.max_power_w[k] * gain / noise)))
    if min(r_td) <= 0:
        raise UnoffloadableError("A user with zero TDMA rate cannot offload", {"r_td": tuple(r_td)})

    gains_no = [_gain(channels, k, phases.phases) for k in (0, 1)]
    p1, p2 = np.meshgrid(
        np.linspace(0.0, params.max_power_w[0], grid),
        np.linspace(0.0, params.max_power_w[1], grid),
        indexing="ij",
    )
    snr = [p1 * gains_no[0] / noise, p2 * gains_no[1] / noise]
    first, second = decoding_order
    r_no = [None, None]
    r_no[first] = _log_rate(bandwidth, snr[first] / (snr[second] + 1.0))
    r_no[second] = _log_rate(bandwidth, snr[second])

    priority = r_no[0] / r_td[0] + r_no[1] / r_td[1] - 1.0
    shortest = np.minimum(_ratio(L1, r_no[0]), _ratio(L2, r_no[1]))
    silent = (r_no[0] <= 0) & (r_no[1] <= 0)
    with np.errstate(invalid="ignore"):
        clipped = np.where(priority > 0, priority * np.where(silent, 0.0, shortest), 0.0)
        raw = np.where(silent, 0.0, priority * shortest)
    best = np.unravel_index(int(np.argmax(clipped)), clipped.shape)
    return PowerGridResult(
        best_powers=(float(p1[best]), float(p2[best])),
        objective=float(clipped[best]),
        full_power_objective=float(clipped[-1, -1]),
        full_power_p3=float(raw[-1, -1]),
    )


def exhaustive_p1_oracle(
    channels: ChannelSet,
    task: TaskSpec,
    params: RadioParams,
    levels: int,
    resolution: int = 10**3,
    budget: int = EXHAUSTIVE_ORACLE_BUDGET,
) -> Schedule:
    """
    逐一枚举 (调度顺序, 解码顺序, 全部 Q^N 相位)，每个组合用网格求解器求时间划分。

    TDMA 相位同样用穷举得到，不依赖方向扫描算法。
    """
    if levels < 1:
        raise DomainError("Exhaustive oracle needs a finite phase grid (Q >= 1)", {"levels": levels})
    n = channels.n_subsurfaces
    if levels**n > budget:
        raise BudgetExceededError(
            "Exhaustive oracle exceeds its budget", {"candidates": levels**n, "budget": budget}
        )
    step = 2.0 * math.pi / levels
    candidates = [
        np.array(index, dtype=float) * step
        for index in itertools.product(range(levels), repeat=n)
    ]
    gains = np.array([[_gain(channels, k, theta) for theta in candidates] for k in (0, 1)])

    bandwidth, noise = params.bandwidth_hz, params.noise_power_w
    tdma_index = [int(np.argmax(gains[k])) for k in (0, 1)]
    r_td = tuple(
        float(_log_rate(bandwidth, params.max_power_w[k] * gains[k, tdma_index[k]] / noise))
        for k in (0, 1)
    )
    if min(r_td) <= 0:
        raise UnoffloadableError("A user with zero TDMA rate cannot offload", {"r_td": r_td})
    compute = tuple(
        0.0 if task.infinite_capacity else task.cycles_per_bit[k] * task.data_bits[k] / task.cloud_freq_hz
        for k in (0, 1)
    )

    best = None
    for order in ORDERS:
        first, second = order
        for decoding in ORDERS:
            early, late = decoding
            for index, theta in enumerate(candidates):
                snr = [params.max_power_w[k] * gains[k, index] / noise for k in (0, 1)]
                r_no = [0.0, 0.0]
                r_no[early] = float(_log_rate(bandwidth, snr[early] / (snr[late] + 1.0)))
                r_no[late] = float(_log_rate(bandwidth, snr[late]))
                result = grid_oracle_p4(
                    (task.data_bits[first], task.data_bits[second]),
                    RateTuple((r_td[first], r_td[second]), (r_no[first], r_no[second])),
                    (compute[first], compute[second]),
                    resolution,
                )
                if best is None or result.sum_delay < best[0].sum_delay:
                    best = (result, order, decoding, index, tuple(r_no))

    result, order, decoding, index, r_no = best
    first, second = order
    division = result.division
    waiting = max(0.0, compute[first] - division.t_td_second)
    logger.debug("exhaustive oracle: order=%s decoding=%s delay=%.6g", order, decoding, result.sum_delay)
    return Schedule(
        scheduling_order=order,
        decoding_order=decoding,
        phases=PhaseVector(candidates[index], levels),
        powers=params.max_power_w,
        time_division=division,
        delay_first=division.t_td_first + division.t_no + compute[first],
        delay_sum=result.sum_delay,
        waiting_time=waiting,
        compute_times=(compute[first], compute[second]),
        rates=RateTuple(r_td, r_no, decoding),
        priority=r_no[0] / r_td[0] + r_no[1] / r_td[1] - 1.0,
        tdma_phases=tuple(PhaseVector(candidates[tdma_index[k]], levels) for k in (0, 1)),
        scheme="oracle",
    )
