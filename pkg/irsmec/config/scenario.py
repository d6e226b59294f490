"""Scenario configuration for Monte-Carlo experiments.

Values come from preset/config files; a few run-level knobs can be
overridden from the environment:

    IRSMEC_SEED     base seed of all random streams
    IRSMEC_WORKERS  worker threads used by the trial runner
    IRSMEC_TRIALS   Monte-Carlo trials per sweep point
"""

from __future__ import annotations

import copy
import math
import os
from dataclasses import dataclass, field, replace

import numpy as np

from irsmec.channel import Geometry
from irsmec.errors import DomainError, ScenarioSchemaError
from irsmec.rates import RadioParams, tdma_rate
from irsmec.scheduling import SolverControls, SolverMode, TaskSpec

SWEEP_VARIABLES = ("L0", "L1_of_fixed_sum", "M", "N", "C1")
BENCHMARKS = ("timeshare", "tdma", "noma", "random_phase", "eta_phase", "no_irs_variants")
MIN_LINK_RATE = 1.0  # bit/s


def _env_int(name: str, default: int, errors: list[str]) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        errors.append(f"{name}: expected an integer, got {raw!r}")
        return default


def default_geometry() -> Geometry:
    """对称部署：两个用户到 AP、到 IRS 的距离分别相等。"""
    return Geometry(
        ap_position=(0.0, 0.0),
        irs_position=(30.0, 0.0),
        user_positions=((30.0, 2.0), (30.0, -2.0)),
    )


def default_task() -> TaskSpec:
    return TaskSpec(data_bits=(1e6, 1e6), cycles_per_bit=(300.0, 300.0), cloud_freq_hz=5e9)


@dataclass
class RadioConfig:
    """无线参数（配置文件中使用 dBm）。"""

    bandwidth_hz: float = 250e3
    noise_density_dbm_hz: float = -140.0
    max_power_dbm: tuple[float, float] = (5.0, 5.0)

    def to_params(self) -> RadioParams:
        return RadioParams.from_dbm(
            self.bandwidth_hz, self.noise_density_dbm_hz, tuple(self.max_power_dbm)
        )


@dataclass
class SolverConfig:
    mode: str = SolverMode.EXHAUSTIVE.value
    eta_grid_points: int = 101
    exhaustive_budget: int = 10**6
    random_draws: int = 5
    # 1-based user labels, as written in config files
    scheduling_orders: tuple[tuple[int, int], ...] = ((1, 2), (2, 1))

    def zero_based_orders(self) -> tuple[tuple[int, int], ...]:
        return tuple((a - 1, b - 1) for a, b in self.scheduling_orders)


@dataclass
class SweepConfig:
    variable: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise DomainError("Unknown sweep variable", {"variable": self.variable})
        self.values = tuple(float(v) for v in self.values)
        if not self.values:
            raise DomainError("Sweep needs at least one value")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise DomainError("Sweep values must be strictly increasing", {"values": self.values})


@dataclass
class ScenarioConfig:
    """一次仿真实验的完整配置。"""

    name: str = "custom"
    description: str = ""
    geometry: Geometry = field(default_factory=default_geometry)
    n_subsurfaces: int = 5
    elements_per_subsurface: int = 20
    phase_levels: int = 4
    radio: RadioConfig = field(default_factory=RadioConfig)
    task: TaskSpec = field(default_factory=default_task)
    solver: SolverConfig = field(default_factory=SolverConfig)
    trials: int = 100
    seed: int = 2024
    sweep: SweepConfig | None = None
    benchmarks: tuple[str, ...] = ("timeshare", "tdma", "noma")
    fixed_sum_bits: float = 6.7e6
    workers: int = 1
    paired_sweep: bool = True

    def __post_init__(self):
        """若存在环境变量则加载其值。"""
        # 关键步骤：从环境变量覆盖运行参数
        env_errors: list[str] = []
        self.seed = _env_int("IRSMEC_SEED", self.seed, env_errors)
        self.workers = _env_int("IRSMEC_WORKERS", self.workers, env_errors)
        self.trials = _env_int("IRSMEC_TRIALS", self.trials, env_errors)
        self.benchmarks = tuple(self.benchmarks)
        self.validate(env_errors)

    def validate(self, extra_errors: list[str] | None = None) -> None:
        errors: list[str] = list(extra_errors or [])
        if self.trials < 1:
            errors.append(f"trials: must be >= 1, got {self.trials}")
        if self.workers < 1:
            errors.append(f"workers: must be >= 1, got {self.workers}")
        if not 0 <= self.seed < 2**64:
            errors.append(f"seed: must fit in 64 unsigned bits, got {self.seed}")
        unknown = [b for b in self.benchmarks if b not in BENCHMARKS]
        if unknown:
            errors.append(f"benchmarks: unknown entries {unknown}")
        if not self.benchmarks:
            errors.append("benchmarks: at least one scheme is required")
        try:
            SolverMode(self.solver.mode)
        except ValueError:
            errors.append(f"solver.mode: expected one of exhaustive|eta|random, got {self.solver.mode!r}")
        for order in self.solver.scheduling_orders:
            if tuple(order) not in ((1, 2), (2, 1)):
                errors.append(f"solver.scheduling_orders: {order} is not a permutation of (1, 2)")
        errors.extend(self._budget_errors())
        if errors:
            raise ScenarioSchemaError(f"Scenario invalid: {self.name}", errors)

    def _budget_errors(self) -> list[str]:
        if self.solver.mode != SolverMode.EXHAUSTIVE.value:
            return []
        if self.phase_levels < 1:
            return ["phase_levels: exhaustive search needs Q >= 1"]
        counts = [self.n_subsurfaces]
        if self.sweep is not None and self.sweep.variable == "N":
            counts.extend(int(v) for v in self.sweep.values)
        largest = self.phase_levels ** max(counts)
        if largest > self.solver.exhaustive_budget:
            return [
                f"solver.exhaustive_budget: Q^N = {largest} exceeds {self.solver.exhaustive_budget}; "
                "use mode 'eta'"
            ]
        return []

    @property
    def solver_mode(self) -> SolverMode:
        return SolverMode(self.solver.mode)

    def radio_params(self) -> RadioParams:
        return self.radio.to_params()

    def solver_controls(self, rng: np.random.Generator | None = None) -> SolverControls:
        return SolverControls(
            levels=self.phase_levels,
            eta_grid_points=self.solver.eta_grid_points,
            exhaustive_budget=self.solver.exhaustive_budget,
            random_draws=self.solver.random_draws,
            rng=rng,
            scheduling_orders=self.solver.zero_based_orders(),
        )

    def sweep_points(self) -> list[float | None]:
        if self.sweep is None:
            return [None]
        return list(self.sweep.values)

    def at_sweep_value(self, value: float | None) -> "ScenarioConfig":
        """返回把扫描变量设为 value 的配置副本；value 为 None 时原样返回副本。"""
        clone = copy.copy(self)
        if value is None or self.sweep is None:
            return clone
        variable = self.sweep.variable
        task = self.task
        if variable == "L0":
            clone.task = replace(task, data_bits=(value, value))
        elif variable == "L1_of_fixed_sum":
            if value > self.fixed_sum_bits:
                raise DomainError("L1 exceeds the fixed sum", {"L1": value, "sum": self.fixed_sum_bits})
            clone.task = replace(task, data_bits=(value, self.fixed_sum_bits - value))
        elif variable == "C1":
            clone.task = replace(task, cycles_per_bit=(value, task.cycles_per_bit[1]))
        elif variable == "M":
            clone.elements_per_subsurface = int(value)
        elif variable == "N":
            clone.n_subsurfaces = int(value)
        return clone

    def check_link_budget(self) -> None:
        """按直射链路的平均路损检查每个用户的 TDMA 速率是否可用。"""
        params = self.radio_params()
        gains = self.geometry.link_gains().user_ap
        errors = []
        for k in (0, 1):
            rate = tdma_rate(params.max_power_w[k], gains[k], params)
            if not rate >= MIN_LINK_RATE or math.isnan(rate):
                errors.append(
                    f"radio.max_power_dbm[{k}]: mean direct TDMA rate {rate:.3g} bit/s "
                    f"is below {MIN_LINK_RATE:g} bit/s"
                )
        if errors:
            raise ScenarioSchemaError(f"Link budget too weak: {self.name}", errors)
