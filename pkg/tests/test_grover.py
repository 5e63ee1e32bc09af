"""Tests for oracle enumeration and amplitude-amplified search."""

import math

import numpy as np
import pytest

from qregsim import RandomSource
from qregsim.algorithms import (
    Oracle,
    amplified_state,
    count_marked,
    grover_search,
    uniform_superposition,
)


class TestCountMarked:
    def test_singleton(self):
        assert count_marked(Oracle(3, lambda i: i == 5)) == 1

    def test_empty(self):
        assert count_marked(Oracle(4, lambda i: False)) == 0

    def test_even_indices(self):
        assert count_marked(Oracle(4, lambda i: i % 2 == 0)) == 8


class TestUniformSuperposition:
    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_amplitudes(self, n):
        state = uniform_superposition(n)
        np.testing.assert_allclose(
            state.amplitudes, np.full(1 << n, 1 / math.sqrt(1 << n)), atol=1e-15
        )


class TestGroverSearch:
    def test_two_qubits_single_mark_is_certain(self):
        oracle = Oracle(2, lambda i: i == 2)
        result = grover_search(oracle, 1, RandomSource(0))
        assert result.iterations == 1
        assert result.predicted_success == 1.0
        assert result.outcome == 2

    def test_three_qubits_closed_form(self):
        """sin^2(5 * asin(sqrt(1/8))) = 0.9453125 with k = 2."""
        oracle = Oracle(3, lambda i: i == 5)
        result = grover_search(oracle, 1, RandomSource(1))
        assert result.iterations == 2
        assert abs(result.predicted_success - 0.9453125) < 1e-12

    def test_all_marked_degenerate(self):
        oracle = Oracle(3, lambda i: True)
        result = grover_search(oracle, 8, RandomSource(2))
        assert result.iterations == 0
        assert 0 <= result.outcome < 8

    def test_empirical_success_tracks_prediction(self):
        oracle = Oracle(4, lambda i: i == 11)
        hits = sum(
            grover_search(oracle, 1, RandomSource(seed)).outcome == 11
            for seed in range(400)
        )
        predicted = grover_search(oracle, 1, RandomSource(0)).predicted_success
        assert abs(hits / 400 - predicted) < 5 * math.sqrt(0.25 / 400)

    def test_zero_marked_rejected(self):
        with pytest.raises(ValueError, match="nothing to find"):
            grover_search(Oracle(3, lambda i: False), 0, RandomSource(0))

    def test_inconsistent_count_rejected(self):
        with pytest.raises(ValueError, match="disagrees"):
            grover_search(Oracle(3, lambda i: i == 5), 2, RandomSource(0))


class TestAmplitudeSchedule:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_marked_amplitude_matches_rotation(self, n):
        """After k rounds the marked amplitude is sin((2k+1) theta) to 1e-9."""
        total = 1 << n
        rng = np.random.default_rng(50 + n)
        for marked_count in {1, 2, max(1, total // 4), total}:
            marked = set(
                int(i) for i in rng.choice(total, size=marked_count, replace=False)
            )
            oracle = Oracle(n, lambda i, s=marked: i in s)
            state, k, theta = amplified_state(oracle, marked_count)
            amp = math.sqrt(
                sum(state.probability(i) for i in marked)
            )
            assert abs(amp - abs(math.sin((2 * k + 1) * theta))) < 1e-9
            assert k <= math.ceil(math.pi / 4 * math.sqrt(total / marked_count))
