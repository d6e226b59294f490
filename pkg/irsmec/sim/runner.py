"""Monte-Carlo trial runner: paired schemes per channel realization."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from irsmec.channel import sample_channels
from irsmec.config import ScenarioConfig
from irsmec.scheduling import Schedule, SolverMode, noma_benchmark, solve_p1, tdma_benchmark
from irsmec.sim.reporting import ResultRow

logger = logging.getLogger(__name__)

# row order of emitted results
SCHEME_ORDER = (
    "timeshare",
    "eta_phase",
    "random_phase",
    "tdma",
    "noma",
    "timeshare_no_irs",
    "tdma_no_irs",
    "noma_no_irs",
)
DOMINANCE_SLACK = 1e-12
CHANNEL_STREAM = 0
PHASE_STREAM = 1


@dataclass(frozen=True)
class TrialRecord:
    sweep_index: int
    sweep_value: float | None
    trial: int
    schedules: dict[str, Schedule] = field(default_factory=dict)

    def delay(self, scheme: str) -> float:
        return self.schedules[scheme].delay_sum

    def dominance_violations(self, slack: float = DOMINANCE_SLACK) -> list[str]:
        """时分共享方案不应比同一信道下的纯 TDMA / 纯 NOMA 更差。"""
        violations = []
        for base, pure in (
            ("timeshare", ("tdma", "noma")),
            ("timeshare_no_irs", ("tdma_no_irs", "noma_no_irs")),
        ):
            if base not in self.schedules:
                continue
            for name in pure:
                if name in self.schedules and self.delay(base) > self.delay(name) + slack:
                    violations.append(f"{base} > {name}")
        return violations


def trial_seed(config: ScenarioConfig, sweep_index: int, trial: int, stream: int) -> np.random.SeedSequence:
    """
    每个 (扫描点, 试验, 随机流) 的独立种子。

    paired_sweep 打开时所有扫描点共用同一组信道实现（公共随机数）。
    """
    sweep_key = 0 if config.paired_sweep else sweep_index
    return np.random.SeedSequence(config.seed, spawn_key=(sweep_key, trial, stream))


def _enabled(config: ScenarioConfig) -> set[str]:
    names = set(config.benchmarks)
    if "no_irs_variants" in names:
        names.discard("no_irs_variants")
        names.update(f"{base}_no_irs" for base in ("timeshare", "tdma", "noma") if base in names)
    return names


def solve_trial(
    config: ScenarioConfig, sweep_index: int, sweep_value: float | None, trial: int
) -> TrialRecord:
    """在一次信道实现上求解所有启用的方案。"""
    # 关键步骤：同一试验内所有方案共享信道与随机相位序列
    point = config.at_sweep_value(sweep_value)
    channel_rng = np.random.default_rng(trial_seed(config, sweep_index, trial, CHANNEL_STREAM))
    phase_seed = trial_seed(config, sweep_index, trial, PHASE_STREAM)
    channels = sample_channels(
        point.geometry, point.n_subsurfaces, point.elements_per_subsurface, channel_rng
    )
    params = point.radio_params()
    task = point.task
    mode = point.solver_mode
    enabled = _enabled(point)

    def controls():
        # a fresh generator per scheme keeps random candidates identical across schemes
        return point.solver_controls(np.random.default_rng(phase_seed))

    schedules: dict[str, Schedule] = {}
    realizations = [("", channels)]
    if any(name.endswith("_no_irs") for name in enabled):
        realizations.append(("_no_irs", channels.without_irs()))
    for suffix, realization in realizations:
        if f"timeshare{suffix}" in enabled:
            schedules[f"timeshare{suffix}"] = solve_p1(realization, task, params, mode, controls())
        if f"tdma{suffix}" in enabled:
            schedules[f"tdma{suffix}"] = tdma_benchmark(realization, task, params, controls())
        if f"noma{suffix}" in enabled:
            schedules[f"noma{suffix}"] = noma_benchmark(realization, task, params, mode, controls())
    if "eta_phase" in enabled:
        schedules["eta_phase"] = solve_p1(channels, task, params, SolverMode.ETA, controls())
    if "random_phase" in enabled:
        schedules["random_phase"] = solve_p1(channels, task, params, SolverMode.RANDOM, controls())

    record = TrialRecord(sweep_index, sweep_value, trial, schedules)
    for violation in record.dominance_violations():
        logger.warning(
            "Dominance violated at sweep=%s trial=%d: %s", sweep_value, trial, violation
        )
    return record


class TrialRunner:
    """按配置的工作线程数执行所有 (扫描点, 试验) 组合，结果顺序固定。"""

    def __init__(self, config: ScenarioConfig, workers: int | None = None) -> None:
        self.config = config
        self.workers = workers or config.workers

    def run(self) -> list[TrialRecord]:
        jobs = [
            (index, value, trial)
            for index, value in enumerate(self.config.sweep_points())
            for trial in range(self.config.trials)
        ]
        logger.info(
            "Running %s: %d sweep points x %d trials on %d worker(s)",
            self.config.name,
            len(self.config.sweep_points()),
            self.config.trials,
            self.workers,
        )
        if self.workers > 1 and len(jobs) > 1:
            return self._run_parallel(jobs)
        return self._run_sequential(jobs)

    def _run_parallel(self, jobs) -> list[TrialRecord]:
        # executor.map keeps submission order
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(lambda job: solve_trial(self.config, *job), jobs))

    def _run_sequential(self, jobs) -> list[TrialRecord]:
        return [solve_trial(self.config, *job) for job in jobs]


def run_trials(config: ScenarioConfig, workers: int | None = None) -> list[TrialRecord]:
    return TrialRunner(config, workers).run()


def aggregate(records: list[TrialRecord], config: ScenarioConfig) -> list[ResultRow]:
    """把逐试验记录汇总为每个 (扫描点, 方案) 一行。"""
    rows: list[ResultRow] = []
    for index, value in enumerate(config.sweep_points()):
        point_records = [r for r in records if r.sweep_index == index]
        present = set().union(*(r.schedules for r in point_records)) if point_records else set()
        for scheme in SCHEME_ORDER:
            if scheme not in present:
                continue
            delays = np.array([r.schedules[scheme].delay_sum for r in point_records])
            fractions = np.array([r.schedules[scheme].tno_fraction for r in point_records])
            count = len(delays)
            stderr = float(np.std(delays, ddof=1) / math.sqrt(count)) if count > 1 else 0.0
            rows.append(
                ResultRow(
                    sweep_value=value,
                    scheme=scheme,
                    mean_delay_s=float(np.mean(delays)),
                    stderr_s=stderr,
                    mean_tno_fraction=float(np.mean(fractions)),
                    trials=count,
                )
            )
    return rows


def run_experiment(config: ScenarioConfig, workers: int | None = None) -> list[ResultRow]:
    """运行完整实验并返回汇总结果行。"""
    records = run_trials(config, workers)
    violations = sum(len(r.dominance_violations()) for r in records)
    if violations:
        logger.warning("%d dominance violation(s) across %d trials", violations, len(records))
    rows = aggregate(records, config)
    logger.info("Finished %s: %d result rows", config.name, len(rows))
    return rows
