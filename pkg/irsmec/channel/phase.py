"""Discrete IRS phase shifts, effective gains and per-user TDMA reflection."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from irsmec.channel.channels import ChannelSet
from irsmec.errors import ChannelDimensionError, DomainError

TWO_PI = 2.0 * math.pi

# Q = 0 means no quantization (continuous phases).
CONTINUOUS = 0


def phase_step(levels: int) -> float:
    if levels < 1:
        raise DomainError("Phase step is only defined for Q >= 1", {"levels": levels})
    return TWO_PI / levels


def quantize_phases(angles, levels: int) -> np.ndarray:
    """向量化的最近相位量化；平局时取较小的量化级。"""
    wrapped = np.mod(np.asarray(angles, dtype=float), TWO_PI)
    if levels == CONTINUOUS:
        return np.where(wrapped >= TWO_PI, 0.0, wrapped)
    if levels < 0:
        raise DomainError("Phase levels must be non-negative", {"levels": levels})
    step = TWO_PI / levels
    x = wrapped / step
    index = np.mod(np.ceil(x - 0.5), levels)
    # exact tie between level Q-1 and the wrapped level 0
    index = np.where(x == levels - 0.5, 0.0, index)
    return index * step


def quantize_phase(angle: float, levels: int) -> float:
    """将角度量化到 {0, Δω, ..., (Q-1)Δω} 中圆周距离最近的点。"""
    return float(quantize_phases(angle, levels))


@dataclass(frozen=True, eq=False)
class PhaseVector:
    phases: np.ndarray
    levels: int

    def __post_init__(self) -> None:
        phases = np.array(self.phases, dtype=float).reshape(-1)
        if self.levels < 0:
            raise DomainError("Phase levels must be non-negative", {"levels": self.levels})
        if phases.size and (phases.min() < 0 or phases.max() >= TWO_PI):
            raise DomainError("Phases must lie in [0, 2π)")
        if self.levels != CONTINUOUS and phases.size:
            ratio = phases / (TWO_PI / self.levels)
            if not np.allclose(ratio, np.round(ratio), rtol=0.0, atol=1e-9):
                raise DomainError("Phases must lie on the Q-level grid", {"levels": self.levels})
        phases.setflags(write=False)
        object.__setattr__(self, "phases", phases)

    @classmethod
    def zeros(cls, n: int, levels: int) -> "PhaseVector":
        return cls(np.zeros(n), levels)

    @classmethod
    def from_indices(cls, indices, levels: int) -> "PhaseVector":
        return cls(np.asarray(indices, dtype=float) * phase_step(levels), levels)

    @property
    def size(self) -> int:
        return int(self.phases.shape[0])

    @property
    def indices(self) -> np.ndarray:
        """每个子表面的量化级下标（连续模式下不可用）。"""
        return np.rint(self.phases / phase_step(self.levels)).astype(int)

    def reflection(self) -> np.ndarray:
        return np.exp(1j * self.phases)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseVector):
            return NotImplemented
        return self.levels == other.levels and np.array_equal(self.phases, other.phases)

    def __hash__(self) -> int:
        return hash((self.levels, self.phases.tobytes()))

    def __repr__(self) -> str:
        return f"PhaseVector(levels={self.levels}, phases={np.round(self.phases, 6).tolist()})"


def _check_user(channels: ChannelSet, user: int) -> None:
    if user not in (0, 1):
        raise ChannelDimensionError("User index must be 0 or 1", {"user": user})


def effective_gains(channels: ChannelSet, user: int, phase_matrix) -> np.ndarray:
    """对多组候选相位（每行一组）批量计算用户的有效信道功率增益。"""
    _check_user(channels, user)
    matrix = np.asarray(phase_matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[1] != channels.n_subsurfaces:
        raise ChannelDimensionError(
            "Phase matrix does not match the number of subsurfaces",
            {"shape": matrix.shape, "n": channels.n_subsurfaces},
        )
    combined = np.exp(1j * matrix) @ channels.cascaded[user] + channels.direct[user]
    return np.abs(combined) ** 2


def effective_gain(channels: ChannelSet, user: int, phases: PhaseVector) -> float:
    """f_k(θ) = |Σ_n c_{k,n} e^{jω_n} + h_{d,k}|²。"""
    if phases.size != channels.n_subsurfaces:
        raise ChannelDimensionError(
            "Phase vector length does not match the channel set",
            {"phases": phases.size, "n": channels.n_subsurfaces},
        )
    return float(effective_gains(channels, user, phases.phases[None, :])[0])


def aligned_phase(channels: ChannelSet, user: int, levels: int) -> PhaseVector:
    """把每条反射路径的相位对齐到直射信道相位后再做最近量化。"""
    _check_user(channels, user)
    direct = channels.direct[user]
    reference = float(np.angle(direct)) if direct != 0 else 0.0
    target = reference - np.angle(channels.cascaded[user])
    return PhaseVector(quantize_phases(target, levels), levels)


def tdma_optimal_phase(channels: ChannelSet, user: int, levels: int) -> PhaseVector:
    """
    单用户 TDMA 传输时使有效增益最大的离散相位。

    先取对齐规则的结果；离散网格下逐项量化不一定最优，
    因此再沿合成方向 φ 扫描全部 N·Q 个分界点之间的弧段，
    每段内各项取 quantize(φ - ∠c_n)，最优解必在这些配置之中。
    只有严格更优时才替换对齐结果。
    """
    aligned = aligned_phase(channels, user, levels)
    n = channels.n_subsurfaces
    if levels in (CONTINUOUS, 1) or n == 0:
        return aligned

    step = TWO_PI / levels
    coeff_angle = np.angle(channels.cascaded[user])
    breakpoints = np.mod(
        coeff_angle[:, None] + (np.arange(levels)[None, :] + 0.5) * step, TWO_PI
    ).reshape(-1)
    breakpoints = np.sort(breakpoints)
    following = np.append(breakpoints[1:], breakpoints[0] + TWO_PI)
    directions = 0.5 * (breakpoints + following)

    candidates = quantize_phases(directions[:, None] - coeff_angle[None, :], levels)
    gains = effective_gains(channels, user, candidates)
    best = int(np.argmax(gains))
    if gains[best] > effective_gain(channels, user, aligned) * (1.0 + 1e-12):
        return PhaseVector(candidates[best], levels)
    return aligned
