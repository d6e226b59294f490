"""Types for task specs, time divisions and offloading schedules."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from irsmec.channel import PhaseVector
from irsmec.errors import DomainError
from irsmec.rates import RateTuple, UserPair


@dataclass(frozen=True)
class TaskSpec:
    """两个用户的任务参数；cloud_freq_hz 可为 inf 表示无限云算力。"""

    data_bits: tuple[float, float]
    cycles_per_bit: tuple[float, float]
    cloud_freq_hz: float = math.inf

    def __post_init__(self) -> None:
        bits = tuple(float(v) for v in self.data_bits)
        cycles = tuple(float(v) for v in self.cycles_per_bit)
        if len(bits) != 2 or len(cycles) != 2:
            raise DomainError("Task specs describe exactly two users")
        if min(bits) < 0 or min(cycles) < 0:
            raise DomainError("Data sizes and cycles per bit must be non-negative")
        if not float(self.cloud_freq_hz) > 0:
            raise DomainError("Cloud frequency must be positive or inf", {"F": self.cloud_freq_hz})
        object.__setattr__(self, "data_bits", bits)
        object.__setattr__(self, "cycles_per_bit", cycles)
        object.__setattr__(self, "cloud_freq_hz", float(self.cloud_freq_hz))

    @property
    def infinite_capacity(self) -> bool:
        return math.isinf(self.cloud_freq_hz)

    def compute_times(self) -> tuple[float, float]:
        """按用户编号返回云端计算时长 C_k·L_k/F。"""
        from irsmec.scheduling.division import task_compute_time

        return tuple(
            task_compute_time(self.data_bits[k], self.cycles_per_bit[k], self.cloud_freq_hz)
            for k in (0, 1)
        )


@dataclass(frozen=True)
class TimeDivision:
    """按调度位置的时间划分：先调度用户单独、NOMA 共享、后调度用户单独。"""

    t_td_first: float
    t_no: float
    t_td_second: float

    def __post_init__(self) -> None:
        values = (self.t_td_first, self.t_no, self.t_td_second)
        if any(not v >= 0 for v in values):
            raise DomainError("Time components must be non-negative", {"division": values})

    @property
    def transmission_time(self) -> float:
        return self.t_td_first + self.t_no + self.t_td_second

    def completes(
        self,
        data_bits: tuple[float, float],
        r_td: tuple[float, float],
        r_no: tuple[float, float],
        rtol: float = 1e-9,
    ) -> bool:
        """检查两个用户的数据量约束（均为调度位置顺序）。"""
        sent = (
            self.t_td_first * r_td[0] + self.t_no * r_no[0],
            self.t_td_second * r_td[1] + self.t_no * r_no[1],
        )
        return all(
            math.isclose(s, target, rel_tol=rtol, abs_tol=rtol) for s, target in zip(sent, data_bits)
        )


class DelayBreakdown(NamedTuple):
    delay_first: float
    delay_sum: float
    waiting_time: float


class InfiniteDivision(NamedTuple):
    division: TimeDivision
    priority: float
    sum_delay: float


class FiniteDivision(NamedTuple):
    division: TimeDivision
    sum_delay: float


@dataclass(frozen=True)
class Schedule:
    scheduling_order: UserPair
    decoding_order: UserPair
    phases: PhaseVector
    powers: tuple[float, float]
    time_division: TimeDivision
    delay_first: float
    delay_sum: float
    waiting_time: float
    compute_times: tuple[float, float]
    rates: RateTuple
    priority: float
    tdma_phases: tuple[PhaseVector, PhaseVector] = field(default=(), compare=False)
    scheme: str = "timeshare"

    @property
    def tno_fraction(self) -> float:
        total = self.time_division.transmission_time
        if total <= 0:
            return 0.0
        return self.time_division.t_no / total
