import math

import numpy as np
import pytest

from irsmec.channel import CONTINUOUS, PhaseVector
from irsmec.errors import BudgetExceededError, DomainError
from irsmec.scheduling import (
    eta_phase_matrix,
    exhaustive_phase_matrix,
    phase_candidates_eta,
    phase_candidates_exhaustive,
    random_phase_matrix,
)


class TestExhaustive:
    @pytest.mark.parametrize("n,levels,count", [(2, 2, 4), (5, 2, 32), (3, 4, 64), (1, 1, 1)])
    def test_candidate_counts(self, n, levels, count):
        matrix = exhaustive_phase_matrix(n, levels)
        assert matrix.shape == (count, n)
        assert len(np.unique(matrix, axis=0)) == count

    def test_lexicographic_order(self):
        matrix = exhaustive_phase_matrix(2, 2)
        assert matrix.tolist() == [[0.0, 0.0], [0.0, math.pi], [math.pi, 0.0], [math.pi, math.pi]]

    def test_without_subsurfaces(self):
        assert exhaustive_phase_matrix(0, 4).shape == (1, 0)

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            exhaustive_phase_matrix(10, 4, budget=1000)
        assert info.value.details["candidates"] == 4**10

    def test_continuous_phases_cannot_be_enumerated(self):
        with pytest.raises(DomainError):
            exhaustive_phase_matrix(2, CONTINUOUS)

    def test_generator_yields_grid_vectors(self):
        vectors = list(phase_candidates_exhaustive(2, 4))
        assert len(vectors) == 16
        assert vectors[5] == PhaseVector.from_indices([1, 1], 4)


class TestEta:
    def test_endpoints_are_the_tdma_phases(self):
        theta1 = PhaseVector.from_indices([0, 2, 1], 4)
        theta2 = PhaseVector.from_indices([1, 1, 3], 4)
        matrix = eta_phase_matrix(theta1, theta2, grid_points=11)
        np.testing.assert_allclose(matrix[0], theta2.phases)
        np.testing.assert_allclose(matrix[-1], theta1.phases)
        assert len(matrix) <= 11

    def test_continuous_midpoint(self):
        theta1 = PhaseVector(np.zeros(1), CONTINUOUS)
        theta2 = PhaseVector(np.array([math.pi / 2]), CONTINUOUS)
        matrix = eta_phase_matrix(theta1, theta2, grid_points=3)
        np.testing.assert_allclose(matrix[:, 0], [math.pi / 2, math.pi / 4, 0.0], atol=1e-12)

    def test_cancelling_combination_falls_back_to_first_phase(self):
        theta1 = PhaseVector(np.zeros(1), CONTINUOUS)
        theta2 = PhaseVector(np.array([math.pi]), CONTINUOUS)
        matrix = eta_phase_matrix(theta1, theta2, grid_points=3)
        assert matrix.shape == (2, 1)
        assert matrix[0, 0] == pytest.approx(math.pi)
        assert matrix[1, 0] == 0.0

    def test_duplicates_removed(self):
        theta = PhaseVector.from_indices([1, 3], 4)
        assert eta_phase_matrix(theta, theta, grid_points=101).shape == (1, 2)

    def test_quantizes_on_requested_grid(self):
        theta1 = PhaseVector.from_indices([0, 1], 4)
        theta2 = PhaseVector.from_indices([2, 3], 4)
        vectors = phase_candidates_eta(theta1, theta2, grid_points=21, levels=8)
        assert all(v.levels == 8 for v in vectors)

    def test_validation(self):
        theta = PhaseVector.zeros(2, 4)
        with pytest.raises(DomainError):
            eta_phase_matrix(theta, theta, grid_points=1)
        with pytest.raises(DomainError):
            eta_phase_matrix(theta, PhaseVector.zeros(3, 4))


class TestRandom:
    def test_draws_on_grid(self, rng):
        matrix = random_phase_matrix(4, 4, 5, rng)
        assert matrix.shape == (5, 4)
        steps = matrix / (math.pi / 2)
        np.testing.assert_allclose(steps, np.round(steps))

    def test_reproducible(self):
        a = random_phase_matrix(3, 8, 5, np.random.default_rng(7))
        b = random_phase_matrix(3, 8, 5, np.random.default_rng(7))
        np.testing.assert_array_equal(a, b)

    def test_continuous(self, rng):
        matrix = random_phase_matrix(3, CONTINUOUS, 5, rng)
        assert matrix.min() >= 0 and matrix.max() < 2 * math.pi

    def test_needs_a_draw(self, rng):
        with pytest.raises(DomainError):
            random_phase_matrix(3, 4, 0, rng)
