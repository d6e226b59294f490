"""
Brute-force re-solvers for the time-division subproblems.

The feasible set is a segment: the two data equalities fix both TDMA times
once t_no is chosen, so each problem reduces to minimizing a piecewise-affine
function of t_no over [0, min(L1/r1, L2/r2)].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from irsmec.errors import DomainError
from irsmec.rates import RateTuple
from irsmec.scheduling.types import TimeDivision

LP_GRID_POINTS = 10**4
MIN_RESOLUTION = 10**3
# relative slack when deciding whether an endpoint keeps both TDMA times non-negative
_FEASIBILITY_RTOL = 1e-9


@dataclass(frozen=True)
class OracleResult:
    division: TimeDivision
    sum_delay: float
    error_bound: float = 0.0
    convex: bool = True


@dataclass(frozen=True)
class _Segment:
    L1: float
    L2: float
    R1: float
    R2: float
    r1: float
    r2: float

    @classmethod
    def build(cls, L: Sequence[float], rates: RateTuple) -> "_Segment":
        L1, L2 = (float(v) for v in L)
        if min(L1, L2) < 0:
            raise DomainError("Data sizes must be non-negative", {"L": (L1, L2)})
        if min(rates.r_td) <= 0:
            raise DomainError("Oracle needs positive TDMA rates", {"r_td": rates.r_td})
        return cls(L1, L2, rates.r_td[0], rates.r_td[1], rates.r_no[0], rates.r_no[1])

    @property
    def t_max(self) -> float:
        limits = []
        for bits, rate in ((self.L1, self.r1), (self.L2, self.r2)):
            if bits == 0:
                limits.append(0.0)
            elif rate > 0:
                limits.append(bits / rate)
        return min(limits) if limits else 0.0

    def tdma_times(self, t_no: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return (self.L1 - t_no * self.r1) / self.R1, (self.L2 - t_no * self.r2) / self.R2

    def feasible(self, t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
        tol1 = _FEASIBILITY_RTOL * max(self.L1 / self.R1, 1e-300)
        tol2 = _FEASIBILITY_RTOL * max(self.L2 / self.R2, 1e-300)
        return (t1 >= -tol1) & (t2 >= -tol2)

    def division(self, t_no: float) -> TimeDivision:
        t1, t2 = self.tdma_times(np.array(t_no))
        return TimeDivision(max(float(t1), 0.0), float(t_no), max(float(t2), 0.0))


def _pick(values: np.ndarray, feasible: np.ndarray) -> int:
    masked = np.where(feasible, values, np.inf)
    return int(np.argmin(masked))


def lp_oracle_p2(L: Sequence[float], rates: RateTuple) -> OracleResult:
    """无限云算力子问题：端点加 10^4 点安全网格，目标关于 t_no 为仿射函数。"""
    segment = _Segment.build(L, rates)
    t_max = segment.t_max
    points = np.concatenate([[0.0, t_max], np.linspace(0.0, t_max, LP_GRID_POINTS)])
    t1, t2 = segment.tdma_times(points)
    values = t1 + points + t2
    best = _pick(values, segment.feasible(t1, t2))
    return OracleResult(segment.division(float(points[best])), float(values[best]))


def grid_oracle_p4(
    L: Sequence[float],
    rates: RateTuple,
    t_c: Sequence[float],
    resolution: int = 10**5,
) -> OracleResult:
    """
    有限云算力子问题的网格求解。

    目标 t1 + t_no + t2 + max(0, t1c - t2) + t2c 关于 t_no 分段仿射且凸，
    唯一拐点 t_no = (L2 - t1c·R2)/r2 在区间内时单独求值。
    error_bound 为网格步长乘以最大斜率；convex 为沿网格的离散凸性检查结果。
    """
    if resolution < MIN_RESOLUTION:
        raise DomainError("Grid oracle resolution must be at least 1000", {"resolution": resolution})
    segment = _Segment.build(L, rates)
    tc1, tc2 = (float(v) for v in t_c)
    t_max = segment.t_max

    grid = np.linspace(0.0, t_max, resolution)
    special = [0.0, t_max]
    if segment.r2 > 0:
        kink = (segment.L2 - tc1 * segment.R2) / segment.r2
        if 0.0 < kink < t_max:
            special.append(kink)
    points = np.concatenate([grid, special])
    t1, t2 = segment.tdma_times(points)
    values = t1 + points + t2 + np.maximum(0.0, tc1 - t2) + tc2
    best = _pick(values, segment.feasible(t1, t2))

    priority = segment.r1 / segment.R1 + segment.r2 / segment.R2 - 1.0
    slope = max(abs(priority), abs(priority - segment.r2 / segment.R2))
    step = t_max / (resolution - 1)
    along_grid = values[:resolution]
    scale = max(1.0, float(np.max(np.abs(along_grid))))
    convex = bool(np.all(np.diff(along_grid, 2) >= -1e-9 * scale))
    return OracleResult(
        segment.division(float(points[best])),
        float(values[best]),
        error_bound=slope * step,
        convex=convex,
    )
