"""Closed-form time divisions and delay accounting for two-user offloading."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from irsmec.errors import DivisionConsistencyError, DomainError
from irsmec.rates import RateTuple, noma_priority
from irsmec.scheduling.types import (
    DelayBreakdown,
    FiniteDivision,
    InfiniteDivision,
    TimeDivision,
)

NEGATIVE_TOLERANCE = 1e-12


def task_compute_time(bits: float, cycles_per_bit: float, cloud_freq: float) -> float:
    """云端计算时长 C·L/F；F = inf 时为 0。"""
    if math.isinf(cloud_freq):
        return 0.0
    if not cloud_freq > 0:
        raise DomainError("Cloud frequency must be positive or inf", {"F": cloud_freq})
    return (cycles_per_bit * bits) / cloud_freq


def safe_ratio(numerator, denominator) -> np.ndarray:
    """L/r，约定 0/r = 0、L/0 = inf。"""
    num = np.asarray(numerator, dtype=float)
    den = np.asarray(denominator, dtype=float)
    positive = den > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(positive, num / np.where(positive, den, 1.0), np.inf)
    return np.where(num == 0, 0.0, out)


def clip_negative(name: str, values) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if np.any(values < -NEGATIVE_TOLERANCE) or np.any(np.isnan(values)):
        raise DivisionConsistencyError(
            "Computed time component is negative", {"component": name, "min": float(np.nanmin(values))}
        )
    return np.where(values < 0, 0.0, values)


def priority_arrays(r_td1, r_td2, r_no1, r_no2) -> np.ndarray:
    return np.asarray(r_no1) / r_td1 + np.asarray(r_no2) / r_td2 - 1.0


def infinite_division_arrays(L1, L2, r_td1, r_td2, r_no1, r_no2):
    """
    无限云算力下的最优时间划分，数组化。

    λ ≥ 0 时 NOMA 阶段持续到某一用户数据发送完毕，否则纯 TDMA。
    Returns:
        (t_td_first, t_no, t_td_second, λ)
    """
    lam = priority_arrays(r_td1, r_td2, r_no1, r_no2)
    ratio1 = safe_ratio(L1, r_no1)
    ratio2 = safe_ratio(L2, r_no2)
    use_noma = lam >= 0
    t_no = np.where(use_noma, np.minimum(ratio1, ratio2), 0.0)
    with np.errstate(invalid="ignore"):
        t1 = np.where(use_noma & (ratio1 <= ratio2), 0.0, (L1 - t_no * r_no1) / r_td1)
        t2 = np.where(use_noma & (ratio2 < ratio1), 0.0, (L2 - t_no * r_no2) / r_td2)
    return clip_negative("t_td_first", t1), clip_negative("t_no", t_no), clip_negative("t_td_second", t2), lam


def finite_division_arrays(L1, L2, r_td1, r_td2, r_no1, r_no2, tc1):
    """
    有限云算力下的最优时间划分，数组化；下标为调度位置。

    情形 1（t1c ≥ L2/R2 或 λ < 0）：纯 TDMA；
    情形 2：t2 = max((L2 - (L1/r1)·r2)/R2, t1c)，其余由数据约束确定。
    """
    lam = priority_arrays(r_td1, r_td2, r_no1, r_no2)
    r_no2 = np.asarray(r_no2, dtype=float)
    tdma_second = np.asarray(L2, dtype=float) / r_td2
    case_two = (tc1 < tdma_second) & (lam >= 0) & (r_no2 > 0)

    ratio1 = safe_ratio(L1, r_no1)
    with np.errstate(invalid="ignore", over="ignore"):
        t2_release = (L2 - ratio1 * r_no2) / r_td2
        # 第一个用户的数据先于 t1c 发完：NOMA 阶段由 L1 决定
        early = t2_release >= tc1
        t_no_kink = safe_ratio(np.asarray(L2) - np.asarray(tc1) * r_td2, r_no2)
        t_no = np.where(case_two, np.where(early, ratio1, t_no_kink), 0.0)
        t2 = np.where(case_two, np.where(early, t2_release, tc1), tdma_second)
        t1 = np.where(case_two & early, 0.0, (L1 - t_no * r_no1) / r_td1)
    return clip_negative("t_td_first", t1), clip_negative("t_no", t_no), clip_negative("t_td_second", t2), lam


def delay_arrays(t1, t_no, t2, tc1, tc2):
    """返回 (T_first, T_sum, waiting)。"""
    waiting = np.maximum(0.0, np.asarray(tc1) - t2)
    delay_first = t1 + t_no + tc1
    delay_sum = t1 + t_no + t2 + waiting + tc2
    return delay_first, delay_sum, waiting


def _positional(rates: RateTuple) -> tuple[float, float, float, float]:
    noma_priority(rates)
    return rates.r_td[0], rates.r_td[1], rates.r_no[0], rates.r_no[1]


def _bits(L: Sequence[float]) -> tuple[float, float]:
    bits = tuple(float(v) for v in L)
    if len(bits) != 2 or min(bits) < 0:
        raise DomainError("Two non-negative data sizes are required", {"L": bits})
    return bits


def time_division_infinite(L: Sequence[float], rates: RateTuple) -> InfiniteDivision:
    """无限云算力下的最优划分；rates 按调度位置给出。"""
    L1, L2 = _bits(L)
    t1, t_no, t2, lam = infinite_division_arrays(L1, L2, *_positional(rates))
    division = TimeDivision(float(t1), float(t_no), float(t2))
    return InfiniteDivision(division, float(lam), division.transmission_time)


def time_division_finite(
    L: Sequence[float], rates: RateTuple, t_c: Sequence[float]
) -> FiniteDivision:
    """有限云算力下的最优划分；L、rates、t_c 均按调度位置给出。"""
    L1, L2 = _bits(L)
    tc1, tc2 = (float(v) for v in t_c)
    if min(tc1, tc2) < 0:
        raise DomainError("Compute times must be non-negative", {"t_c": (tc1, tc2)})
    t1, t_no, t2, _ = finite_division_arrays(L1, L2, *_positional(rates), tc1)
    division = TimeDivision(float(t1), float(t_no), float(t2))
    return FiniteDivision(division, compute_delays(division, (tc1, tc2)).delay_sum)


def compute_delays(division: TimeDivision, t_c: Sequence[float]) -> DelayBreakdown:
    tc1, tc2 = (float(v) for v in t_c)
    first, total, waiting = delay_arrays(
        division.t_td_first, division.t_no, division.t_td_second, tc1, tc2
    )
    return DelayBreakdown(float(first), float(total), float(waiting))
