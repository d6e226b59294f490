"""Oracle-versus-closed-form certification suites."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from irsmec.channel import CONTINUOUS, PhaseVector, sample_channels
from irsmec.config import ScenarioConfig
from irsmec.errors import DomainError, UnoffloadableError
from irsmec.oracle import exhaustive_p1_oracle, grid_oracle_p4, lp_oracle_p2, power_grid_oracle_p3
from irsmec.rates import RateTuple
from irsmec.scheduling import (
    SolverControls,
    SolverMode,
    random_phase_matrix,
    solve_p1,
    time_division_finite,
    time_division_infinite,
)

logger = logging.getLogger(__name__)

DIVISION_TOLERANCE = 1e-9
FULL_POWER_TOLERANCE = 1e-9
TINY_P1_TOLERANCE = 1e-9
# separates certification streams from the (sweep, trial, stream) keys of the runner
_CERTIFY_KEY = 2**31


@dataclass
class SuiteResult:
    name: str
    samples: int = 0
    skipped: int = 0
    failures: int = 0
    max_deviation: float = 0.0
    tolerance: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.samples > 0

    def record(self, deviation: float, ok: bool) -> None:
        self.samples += 1
        self.max_deviation = max(self.max_deviation, deviation)
        if not ok:
            self.failures += 1


@dataclass
class CertificationReport:
    scenario: str
    instances: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    def lines(self) -> list[str]:
        out = [f"Certification of '{self.scenario}' ({self.instances} instance(s) per suite)"]
        for suite in self.suites:
            mark = "✅" if suite.passed else "❌"
            out.append(
                f"{mark} {suite.name:<10} samples={suite.samples} skipped={suite.skipped} "
                f"failures={suite.failures} max_deviation={suite.max_deviation:.3e} "
                f"(tolerance {suite.tolerance:.0e})"
            )
            out.extend(f"    {note}" for note in suite.notes[:5])
        return out


def _relative(value: float, reference: float) -> float:
    return abs(value - reference) / max(abs(reference), 1e-300)


def _random_rates(rng: np.random.Generator) -> RateTuple:
    r_td = tuple(rng.uniform(0.2e6, 3e6, size=2))
    r_no = tuple(rng.uniform(0.0, 1.0, size=2) * np.asarray(r_td))
    return RateTuple(r_td, r_no)


def certify_infinite_capacity(instances: int, rng: np.random.Generator) -> SuiteResult:
    suite = SuiteResult("infinite", tolerance=DIVISION_TOLERANCE)
    for _ in range(instances):
        rates = _random_rates(rng)
        L = tuple(rng.uniform(0.0, 5e6, size=2))
        closed = time_division_infinite(L, rates).sum_delay
        oracle = lp_oracle_p2(L, rates).sum_delay
        deviation = _relative(closed, oracle)
        suite.record(deviation, deviation <= DIVISION_TOLERANCE)
    return suite


def certify_finite_capacity(instances: int, rng: np.random.Generator, resolution: int = 10**5) -> SuiteResult:
    """随机实例加上 t1c = L2/R2 ± ε 的边界实例。"""
    suite = SuiteResult("finite", tolerance=DIVISION_TOLERANCE)
    for index in range(instances):
        rates = _random_rates(rng)
        L = tuple(rng.uniform(0.0, 5e6, size=2))
        boundary = L[1] / rates.r_td[1]
        if index % 4 == 0:
            tc1 = max(0.0, boundary * (1.0 + rng.choice([-1.0, 0.0, 1.0]) * 1e-9))
        else:
            tc1 = rng.uniform(0.0, 2.0 * boundary + 1e-9)
        t_c = (tc1, rng.uniform(0.0, 1.0))
        closed = time_division_finite(L, rates, t_c).sum_delay
        oracle = grid_oracle_p4(L, rates, t_c, resolution)
        allowed = oracle.error_bound + DIVISION_TOLERANCE * max(oracle.sum_delay, 1.0)
        ok = oracle.convex and abs(closed - oracle.sum_delay) <= allowed
        suite.record(_relative(closed, oracle.sum_delay), ok)
        if not oracle.convex:
            suite.notes.append(f"non-convex grid objective for L={L}, t_c={t_c}")
    return suite


def _random_phases(n: int, levels: int, rng: np.random.Generator) -> PhaseVector:
    return PhaseVector(random_phase_matrix(n, levels, 1, rng)[0], levels)


def certify_full_power(
    config: ScenarioConfig, instances: int, rng: np.random.Generator, grid: int = 50
) -> SuiteResult:
    """满功率应在功率网格上取得最大目标值（先调度用户先解码）。"""
    suite = SuiteResult("full_power", tolerance=FULL_POWER_TOLERANCE)
    params = config.radio_params()
    for _ in range(instances):
        channels = sample_channels(
            config.geometry, config.n_subsurfaces, config.elements_per_subsurface, rng
        )
        phases = _random_phases(channels.n_subsurfaces, config.phase_levels, rng)
        try:
            result = power_grid_oracle_p3(channels, phases, params, config.task.data_bits, (0, 1), grid)
        except UnoffloadableError:
            suite.skipped += 1
            continue
        shortfall = max(0.0, result.objective - result.full_power_objective)
        deviation = shortfall / max(result.objective, 1e-300)
        suite.record(deviation, deviation <= FULL_POWER_TOLERANCE)
        if deviation > FULL_POWER_TOLERANCE:
            suite.notes.append(f"grid maximizer {result.best_powers} beats full power")
    return suite


def certify_tiny_p1(config: ScenarioConfig, instances: int, rng: np.random.Generator) -> SuiteResult:
    """N ≤ 4、Q = 2 的小规模实例上比较 solve_p1 与穷举预言机。"""
    suite = SuiteResult("tiny_p1", tolerance=TINY_P1_TOLERANCE)
    params = config.radio_params()
    controls = SolverControls(levels=2)
    for _ in range(instances):
        n = int(rng.integers(1, 5))
        channels = sample_channels(config.geometry, n, config.elements_per_subsurface, rng)
        try:
            solved = solve_p1(channels, config.task, params, SolverMode.EXHAUSTIVE, controls)
            oracle = exhaustive_p1_oracle(channels, config.task, params, levels=2)
        except UnoffloadableError:
            suite.skipped += 1
            continue
        deviation = _relative(solved.delay_sum, oracle.delay_sum)
        suite.record(deviation, deviation <= TINY_P1_TOLERANCE)
    return suite


def certify(config: ScenarioConfig, instances: int, grid_resolution: int = 10**5) -> CertificationReport:
    """运行全部认证套件；任一套件失败时 report.passed 为 False。"""
    if instances < 1:
        raise DomainError("Certification needs at least one instance", {"instances": instances})
    if config.phase_levels == CONTINUOUS:
        logger.info("Continuous phases: full_power suite draws uniform phases")

    suites: list[tuple[str, Callable[[np.random.Generator], SuiteResult]]] = [
        ("infinite", lambda rng: certify_infinite_capacity(instances, rng)),
        ("finite", lambda rng: certify_finite_capacity(instances, rng, grid_resolution)),
        ("full_power", lambda rng: certify_full_power(config, instances, rng)),
        ("tiny_p1", lambda rng: certify_tiny_p1(config, instances, rng)),
    ]
    report = CertificationReport(config.name, instances)
    for index, (name, run) in enumerate(suites):
        rng = np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(_CERTIFY_KEY, index)))
        result = run(rng)
        logger.info("%s: %d samples, max deviation %.3e", name, result.samples, result.max_deviation)
        report.suites.append(result)
    return report
