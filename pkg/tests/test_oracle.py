import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irsmec.channel import PhaseVector, sample_channels
from irsmec.errors import BudgetExceededError, ChannelDimensionError, DomainError
from irsmec.oracle import exhaustive_p1_oracle, grid_oracle_p4, lp_oracle_p2, power_grid_oracle_p3
from irsmec.rates import RateTuple
from irsmec.scheduling import SolverControls, solve_p1, time_division_finite, time_division_infinite

SHARES = st.one_of(st.just(0.0), st.floats(1e-3, 1.0))


class TestLpOracle:
    def test_noma_branch(self, worked_rates):
        result = lp_oracle_p2((4.0, 4.0), worked_rates)
        assert result.sum_delay == pytest.approx(10 / 3)
        assert result.division.t_no == pytest.approx(8 / 3)

    def test_tdma_branch(self):
        result = lp_oracle_p2((4.0, 4.0), RateTuple((2.0, 2.0), (0.5, 0.8)))
        assert result.sum_delay == pytest.approx(4.0)
        assert result.division.t_no == 0.0

    def test_needs_tdma_rates(self):
        with pytest.raises(DomainError):
            lp_oracle_p2((1.0, 1.0), RateTuple((0.0, 1.0), (0.0, 0.5)))


class TestGridOracle:
    def test_kink(self, worked_rates):
        result = grid_oracle_p4((4.0, 4.0), worked_rates, (1.0, 1.0))
        assert result.sum_delay == pytest.approx(4.5)
        assert result.division.t_no == pytest.approx(2.0)
        assert result.division.t_td_first == pytest.approx(0.5)
        assert result.convex
        assert result.error_bound > 0

    def test_long_compute(self, worked_rates):
        result = grid_oracle_p4((4.0, 4.0), worked_rates, (3.0, 1.0))
        assert result.sum_delay == pytest.approx(6.0)

    def test_resolution_floor(self, worked_rates):
        with pytest.raises(DomainError):
            grid_oracle_p4((4.0, 4.0), worked_rates, (1.0, 1.0), resolution=100)

    @settings(max_examples=60, deadline=None)
    @given(
        st.floats(0.5, 10.0),
        st.floats(0.5, 10.0),
        SHARES,
        SHARES,
        st.floats(0.1, 10.0),
        st.floats(0.1, 10.0),
        st.floats(0.0, 10.0),
        st.floats(0.0, 2.0),
    )
    def test_agrees_with_closed_form(self, R1, R2, share1, share2, L1, L2, tc1, tc2):
        rates = RateTuple((R1, R2), (share1 * R1, share2 * R2))
        _, closed = time_division_finite((L1, L2), rates, (tc1, tc2))
        oracle = grid_oracle_p4((L1, L2), rates, (tc1, tc2), resolution=2000)
        assert oracle.convex
        assert oracle.sum_delay == pytest.approx(closed, rel=1e-8, abs=1e-10)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.5, 10.0), st.floats(0.5, 10.0), SHARES, SHARES)
    def test_lp_agrees_with_closed_form(self, R1, R2, share1, share2):
        rates = RateTuple((R1, R2), (share1 * R1, share2 * R2))
        _, _, closed = time_division_infinite((3.0, 5.0), rates)
        assert lp_oracle_p2((3.0, 5.0), rates).sum_delay == pytest.approx(closed, rel=1e-8, abs=1e-10)


class TestPowerOracle:
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_full_power_is_optimal(self, geometry, params, seed):
        rng = np.random.default_rng(seed)
        channels = sample_channels(geometry, 3, 10, rng)
        phases = PhaseVector.from_indices(rng.integers(0, 4, size=3), 4)
        result = power_grid_oracle_p3(channels, phases, params, (1e6, 1e6))
        assert result.objective >= result.full_power_objective
        assert result.full_power_objective >= result.objective * (1 - 1e-9)

    def test_phase_length_checked(self, channels, params):
        with pytest.raises(ChannelDimensionError):
            power_grid_oracle_p3(channels, PhaseVector.zeros(2, 4), params, (1e6, 1e6))

    def test_grid_floor(self, channels, params):
        with pytest.raises(DomainError):
            power_grid_oracle_p3(channels, PhaseVector.zeros(3, 4), params, (1e6, 1e6), grid=5)


class TestExhaustiveOracle:
    @pytest.mark.parametrize("task_fixture", ["finite_task", "infinite_task"])
    def test_agrees_with_solver(self, request, task_fixture, geometry, params):
        task = request.getfixturevalue(task_fixture)
        channels = sample_channels(geometry, 2, 10, np.random.default_rng(21))
        oracle = exhaustive_p1_oracle(channels, task, params, levels=2)
        schedule = solve_p1(channels, task, params, controls=SolverControls(levels=2))
        assert oracle.scheme == "oracle"
        assert schedule.delay_sum == pytest.approx(oracle.delay_sum, rel=1e-8)

    def test_without_irs(self, channels, finite_task, params):
        bare = channels.without_irs()
        oracle = exhaustive_p1_oracle(bare, finite_task, params, levels=4)
        assert oracle.phases.size == 0
        assert solve_p1(bare, finite_task, params).delay_sum == pytest.approx(oracle.delay_sum, rel=1e-8)

    def test_budget(self, channels, finite_task, params):
        with pytest.raises(BudgetExceededError):
            exhaustive_p1_oracle(channels, finite_task, params, levels=4, budget=10)
