"""Two-user / IRS / AP deployment geometry and large-scale path loss."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from irsmec.errors import DomainError

EXPONENT_RANGE = (1.5, 6.0)

Point = tuple[float, float]


def path_loss(distance: float, exponent: float, ref_gain_db: float) -> float:
    """按参考距离 1 m 的增益与路损指数计算线性功率增益。"""
    if not distance > 0:
        raise DomainError("Path-loss distance must be positive", {"distance": distance})
    return 10.0 ** (ref_gain_db / 10.0) * float(distance) ** (-exponent)


@dataclass(frozen=True)
class LinkDistances:
    user_ap: tuple[float, float]
    user_irs: tuple[float, float]
    irs_ap: float


@dataclass(frozen=True)
class LinkGains:
    user_ap: tuple[float, float]
    user_irs: tuple[float, float]
    irs_ap: float


@dataclass(frozen=True)
class Geometry:
    """AP、IRS 与两个用户的平面部署（单位：米）。"""

    ap_position: Point
    irs_position: Point
    user_positions: tuple[Point, Point]
    pathloss_exponent_user_ap: float = 3.2
    pathloss_exponent_user_irs: float = 2.6
    pathloss_exponent_irs_ap: float = 2.6
    ref_gain_db: float = -30.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "ap_position", _as_point(self.ap_position))
        object.__setattr__(self, "irs_position", _as_point(self.irs_position))
        users = tuple(_as_point(p) for p in self.user_positions)
        if len(users) != 2:
            raise DomainError("Geometry needs exactly two users", {"users": len(users)})
        object.__setattr__(self, "user_positions", users)

        low, high = EXPONENT_RANGE
        for name in (
            "pathloss_exponent_user_ap",
            "pathloss_exponent_user_irs",
            "pathloss_exponent_irs_ap",
        ):
            value = getattr(self, name)
            if not low <= value <= high:
                raise DomainError(f"{name} outside [{low}, {high}]", {name: value})

        distances = self.distances()
        every = [*distances.user_ap, *distances.user_irs, distances.irs_ap]
        every.append(_distance(*self.user_positions))
        if min(every) <= 0:
            raise DomainError("All pairwise distances must be strictly positive")

    def distances(self) -> LinkDistances:
        return LinkDistances(
            user_ap=tuple(_distance(u, self.ap_position) for u in self.user_positions),
            user_irs=tuple(_distance(u, self.irs_position) for u in self.user_positions),
            irs_ap=_distance(self.irs_position, self.ap_position),
        )

    def link_gains(self) -> LinkGains:
        """返回三类链路（用户-AP、用户-IRS、IRS-AP）的路损线性增益。"""
        # 关键步骤：逐链路计算大尺度衰落
        d = self.distances()
        ref = self.ref_gain_db
        return LinkGains(
            user_ap=tuple(
                path_loss(x, self.pathloss_exponent_user_ap, ref) for x in d.user_ap
            ),
            user_irs=tuple(
                path_loss(x, self.pathloss_exponent_user_irs, ref) for x in d.user_irs
            ),
            irs_ap=path_loss(d.irs_ap, self.pathloss_exponent_irs_ap, ref),
        )


def _as_point(value) -> Point:
    arr = np.asarray(value, dtype=float).reshape(-1)
    if arr.shape != (2,):
        raise DomainError("Positions must be 2-D coordinates", {"value": value})
    return (float(arr[0]), float(arr[1]))


def _distance(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])
