"""Shared fixtures."""

import math

import numpy as np
import pytest

from irsmec.channel import Geometry, sample_channels
from irsmec.config import ScenarioConfig
from irsmec.rates import RadioParams, RateTuple
from irsmec.scheduling import TaskSpec


@pytest.fixture(autouse=True)
def _clear_env(monkeypatch):
    for name in ("IRSMEC_SEED", "IRSMEC_WORKERS", "IRSMEC_TRIALS"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def geometry():
    return Geometry(
        ap_position=(0.0, 0.0),
        irs_position=(30.0, 0.0),
        user_positions=((30.0, 2.0), (30.0, -2.0)),
    )


@pytest.fixture
def params():
    return RadioParams.from_dbm(250e3, -140.0, (5.0, 5.0))


@pytest.fixture
def finite_task():
    return TaskSpec(data_bits=(1e6, 1e6), cycles_per_bit=(300.0, 300.0), cloud_freq_hz=5e9)


@pytest.fixture
def infinite_task():
    return TaskSpec(data_bits=(1e6, 1e6), cycles_per_bit=(300.0, 300.0), cloud_freq_hz=math.inf)


@pytest.fixture
def channels(geometry, rng):
    return sample_channels(geometry, 3, 20, rng)


@pytest.fixture
def worked_rates():
    """r_td = (2, 2), r_no = (1.5, 1.0): λ = 0.25."""
    return RateTuple(r_td=(2.0, 2.0), r_no=(1.5, 1.0))


@pytest.fixture
def small_config():
    return ScenarioConfig(name="small", n_subsurfaces=2, elements_per_subsurface=4, trials=3)

