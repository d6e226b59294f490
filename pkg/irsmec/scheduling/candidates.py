"""Candidate generators for the shared NOMA reflection vector."""

from __future__ import annotations

import logging
from typing import Iterator

import numpy as np

from irsmec.channel import CONTINUOUS, PhaseVector, phase_step, quantize_phases
from irsmec.errors import BudgetExceededError, DomainError

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_BUDGET = 10**6
DEFAULT_ETA_GRID_POINTS = 101
# below this magnitude an η-combination has no meaningful angle
_ZERO_COMBINATION = 1e-12


def exhaustive_phase_matrix(
    n: int, levels: int, budget: int = DEFAULT_EXHAUSTIVE_BUDGET
) -> np.ndarray:
    """全部 Q^N 个离散相位组合，按字典序排列（最后一维变化最快）。"""
    if n < 0:
        raise DomainError("Subsurface count must be non-negative", {"n": n})
    if levels == CONTINUOUS or levels < 1:
        raise DomainError("Exhaustive search needs a finite phase grid (Q >= 1)", {"levels": levels})
    count = levels**n
    if count > budget:
        raise BudgetExceededError(
            "Exhaustive phase search exceeds the budget; use the eta search instead",
            {"candidates": count, "budget": budget},
        )
    if n == 0:
        return np.zeros((1, 0))
    indices = np.indices((levels,) * n).reshape(n, -1).T
    return indices * phase_step(levels)


def phase_candidates_exhaustive(
    n: int, levels: int, budget: int = DEFAULT_EXHAUSTIVE_BUDGET
) -> Iterator[PhaseVector]:
    for row in exhaustive_phase_matrix(n, levels, budget):
        yield PhaseVector(row, levels)


def eta_phase_matrix(
    theta1: PhaseVector,
    theta2: PhaseVector,
    grid_points: int = DEFAULT_ETA_GRID_POINTS,
    levels: int | None = None,
) -> np.ndarray:
    """
    一维 η 搜索的候选矩阵。

    对 [0, 1] 上均匀取的每个 η，逐元素取 η·e^{jθ1} + (1-η)·e^{jθ2} 的相角并量化，
    去重后保留首次出现的顺序。组合为零的元素沿用 θ1。
    """
    if grid_points < 2:
        raise DomainError("Eta search needs at least two grid points", {"grid_points": grid_points})
    if theta1.size != theta2.size:
        raise DomainError(
            "Eta endpoints must have equal length", {"theta1": theta1.size, "theta2": theta2.size}
        )
    levels = theta1.levels if levels is None else levels
    eta = np.linspace(0.0, 1.0, grid_points)[:, None]
    combined = eta * theta1.reflection()[None, :] + (1.0 - eta) * theta2.reflection()[None, :]
    angles = np.where(
        np.abs(combined) < _ZERO_COMBINATION,
        theta1.phases[None, :],
        np.angle(combined),
    )
    matrix = quantize_phases(angles, levels)
    _, first_seen = np.unique(matrix, axis=0, return_index=True)
    return matrix[np.sort(first_seen)]


def phase_candidates_eta(
    theta1: PhaseVector,
    theta2: PhaseVector,
    grid_points: int = DEFAULT_ETA_GRID_POINTS,
    levels: int | None = None,
) -> list[PhaseVector]:
    resolved = theta1.levels if levels is None else levels
    matrix = eta_phase_matrix(theta1, theta2, grid_points, resolved)
    logger.debug("eta search: %d distinct candidates from %d grid points", len(matrix), grid_points)
    return [PhaseVector(row, resolved) for row in matrix]


def random_phase_matrix(
    n: int, levels: int, draws: int, rng: np.random.Generator
) -> np.ndarray:
    """从 Q 级网格均匀抽取 draws 个相位向量（Q = 0 时在 [0, 2π) 上均匀抽取）。"""
    if draws < 1:
        raise DomainError("Random phase search needs at least one draw", {"draws": draws})
    if levels == CONTINUOUS:
        return quantize_phases(rng.uniform(0.0, 2.0 * np.pi, size=(draws, n)), CONTINUOUS)
    return rng.integers(0, levels, size=(draws, n)) * phase_step(levels)
