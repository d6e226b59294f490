"""TDMA / NOMA achievable rates and the IRS-dependent NOMA priority."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from irsmec.errors import DomainError, UnoffloadableError

UserPair = tuple[int, int]
ORDERS: tuple[UserPair, UserPair] = ((0, 1), (1, 0))


def dbm_to_watts(value_dbm: float) -> float:
    return 10.0 ** ((value_dbm - 30.0) / 10.0)


@dataclass(frozen=True)
class RadioParams:
    """线性单位的无线参数；dBm 只在配置边界出现。"""

    bandwidth_hz: float
    noise_power_w: float
    max_power_w: tuple[float, float]

    def __post_init__(self) -> None:
        if not self.bandwidth_hz > 0:
            raise DomainError("Bandwidth must be positive", {"bandwidth_hz": self.bandwidth_hz})
        if not self.noise_power_w > 0:
            raise DomainError("Noise power must be positive", {"noise_power_w": self.noise_power_w})
        powers = tuple(float(p) for p in self.max_power_w)
        if len(powers) != 2 or min(powers) < 0:
            raise DomainError("Two non-negative maximum powers are required", {"max_power_w": powers})
        object.__setattr__(self, "max_power_w", powers)

    @classmethod
    def from_dbm(
        cls,
        bandwidth_hz: float,
        noise_density_dbm_hz: float,
        max_power_dbm: tuple[float, float],
    ) -> "RadioParams":
        """由 dBm 参数构造：噪声功率 = 功率谱密度 × 带宽。"""
        # 关键步骤：唯一的 dBm -> W 换算点
        return cls(
            bandwidth_hz=float(bandwidth_hz),
            noise_power_w=dbm_to_watts(noise_density_dbm_hz) * float(bandwidth_hz),
            max_power_w=tuple(dbm_to_watts(p) for p in max_power_dbm),
        )


@dataclass(frozen=True)
class RateTuple:
    """按用户编号存放的 TDMA/NOMA 速率（bit/s）及 NOMA 解码顺序。"""

    r_td: tuple[float, float]
    r_no: tuple[float, float]
    decoding_order: UserPair = (0, 1)

    def __post_init__(self) -> None:
        r_td = tuple(float(r) for r in self.r_td)
        r_no = tuple(float(r) for r in self.r_no)
        if len(r_td) != 2 or len(r_no) != 2:
            raise DomainError("Rate tuples hold exactly two users")
        if min(r_td + r_no) < 0:
            raise DomainError("Rates must be non-negative", {"r_td": r_td, "r_no": r_no})
        if tuple(self.decoding_order) not in ORDERS:
            raise DomainError("Decoding order must be a permutation of (0, 1)")
        object.__setattr__(self, "r_td", r_td)
        object.__setattr__(self, "r_no", r_no)
        object.__setattr__(self, "decoding_order", tuple(self.decoding_order))

    def positional(self, order: UserPair) -> tuple[tuple[float, float], tuple[float, float]]:
        """按调度顺序（先调度者在前）返回 (r_td, r_no)。"""
        first, second = order
        return (self.r_td[first], self.r_td[second]), (self.r_no[first], self.r_no[second])


def tdma_rate(power, gain, params: RadioParams):
    """B·log2(1 + p·f/σ²)；支持 numpy 数组输入。"""
    snr = np.asarray(power, dtype=float) * np.asarray(gain, dtype=float) / params.noise_power_w
    rate = params.bandwidth_hz * np.log2(1.0 + snr)
    return float(rate) if np.ndim(rate) == 0 else rate


def noma_rates(powers, gains, decoding_order: UserPair, params: RadioParams):
    """
    SIC 上行 NOMA 速率，按用户编号返回 (r_0, r_1)。

    先解码的用户把后解码用户的信号视为干扰；后解码用户无干扰。
    """
    if tuple(decoding_order) not in ORDERS:
        raise DomainError("Decoding order must be a permutation of (0, 1)")
    first, second = decoding_order
    snr = [
        np.asarray(powers[k], dtype=float) * np.asarray(gains[k], dtype=float) / params.noise_power_w
        for k in (0, 1)
    ]
    bandwidth = params.bandwidth_hz
    rates = [None, None]
    rates[first] = bandwidth * np.log2(1.0 + snr[first] / (snr[second] + 1.0))
    rates[second] = bandwidth * np.log2(1.0 + snr[second])
    if all(np.ndim(r) == 0 for r in rates):
        return float(rates[0]), float(rates[1])
    return rates[0], rates[1]


def noma_priority(rates: RateTuple) -> float:
    """λ = r_1^no/r_1^td + r_2^no/r_2^td - 1，可能为负。"""
    if min(rates.r_td) <= 0:
        raise UnoffloadableError("A user with zero TDMA rate cannot offload", {"r_td": rates.r_td})
    return rates.r_no[0] / rates.r_td[0] + rates.r_no[1] / rates.r_td[1] - 1.0
