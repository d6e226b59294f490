"""Channel realizations for one fading draw and their Rayleigh sampler."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from irsmec.channel.geometry import Geometry
from irsmec.errors import ChannelDimensionError, DomainError


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ChannelSet:
    """
    单次衰落实现下的全部基带信道。

    cascaded[k, n] 为有效信道中乘以 e^{jω_n} 的系数，
    即 conj(irs_to_ap[n]) * user_to_irs[k, n]。
    """

    direct: np.ndarray
    user_to_irs: np.ndarray
    irs_to_ap: np.ndarray
    cascaded: np.ndarray

    @classmethod
    def from_links(
        cls,
        direct,
        user_to_irs,
        irs_to_ap,
    ) -> "ChannelSet":
        direct_arr = np.asarray(direct, dtype=complex).reshape(-1)
        irs_ap = np.asarray(irs_to_ap, dtype=complex).reshape(-1)
        n = irs_ap.shape[0]
        if n:
            user_irs = np.asarray(user_to_irs, dtype=complex).reshape(-1, n)
        else:
            user_irs = np.zeros((2, 0), dtype=complex)
        if direct_arr.shape != (2,) or user_irs.shape != (2, n):
            raise ChannelDimensionError(
                "Channel vectors must describe two users over N subsurfaces",
                {"direct": direct_arr.shape, "user_to_irs": user_irs.shape, "n": n},
            )
        cascaded = np.conj(irs_ap)[None, :] * user_irs
        return cls(
            direct=_frozen(direct_arr),
            user_to_irs=_frozen(user_irs),
            irs_to_ap=_frozen(irs_ap),
            cascaded=_frozen(cascaded),
        )

    @property
    def n_subsurfaces(self) -> int:
        return int(self.irs_to_ap.shape[0])

    def without_irs(self) -> "ChannelSet":
        """返回同一实现下去掉反射路径（N = 0）的信道集合。"""
        return ChannelSet.from_links(self.direct, np.zeros((2, 0)), np.zeros(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChannelSet):
            return NotImplemented
        return (
            np.array_equal(self.direct, other.direct)
            and np.array_equal(self.user_to_irs, other.user_to_irs)
            and np.array_equal(self.irs_to_ap, other.irs_to_ap)
        )

    __hash__ = None  # type: ignore[assignment]


def _complex_gaussian(rng: np.random.Generator, variance, shape: tuple[int, ...]) -> np.ndarray:
    # real/imag parts drawn together on the last axis, each with variance/2
    draws = rng.standard_normal(size=(*shape, 2))
    scale = np.sqrt(np.asarray(variance, dtype=float) / 2.0)
    return scale * (draws[..., 0] + 1j * draws[..., 1])


def sample_channels(
    geometry: Geometry,
    n_subsurfaces: int,
    elements_per_subsurface: int,
    rng: np.random.Generator,
) -> ChannelSet:
    """
    按几何路损采样一次瑞利衰落信道实现。

    每个子表面的用户-IRS 信道是 M 个独立同分布阵元信道的相干和，
    阵元轴放在最外层并最后采样，因此增大 M 只会在同一随机流上追加阵元。
    """
    if n_subsurfaces < 1 or elements_per_subsurface < 1:
        raise DomainError(
            "Subsurface and element counts must be at least 1",
            {"n": n_subsurfaces, "m": elements_per_subsurface},
        )
    gains = geometry.link_gains()
    n, m = n_subsurfaces, elements_per_subsurface

    direct = _complex_gaussian(rng, np.asarray(gains.user_ap), (2,))
    irs_to_ap = _complex_gaussian(rng, gains.irs_ap, (n,))
    user_irs_var = np.asarray(gains.user_irs)[None, :, None]
    elements = _complex_gaussian(rng, user_irs_var, (m, 2, n))
    user_to_irs = elements.sum(axis=0)
    return ChannelSet.from_links(direct, user_to_irs, irs_to_ap)
