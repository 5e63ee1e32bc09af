"""Tests for chunked random bit generation."""

import numpy as np
import pytest
from scipy import stats

from oracles import chi_square_statistic

from qregsim import RandomSource
from qregsim.algorithms import qrng


class TestChunking:
    def test_one_round_per_chunk(self):
        rng = RandomSource(2)
        qrng(8, 8, rng)
        assert rng.draw_count == 1

    def test_eight_rounds_for_single_qubit_chunks(self):
        """N=8, M=1 runs exactly 8 prepare-measure rounds (one draw each)."""
        rng = RandomSource(2)
        qrng(8, 1, rng)
        assert rng.draw_count == 8

    def test_partial_last_round_discards_high_bits(self):
        rng = RandomSource(3)
        value = qrng(5, 3, rng)
        assert rng.draw_count == 2
        assert 0 <= value < 32

    def test_range(self):
        for seed in range(30):
            assert 0 <= qrng(4, 2, RandomSource(seed)) < 16

    def test_deterministic(self):
        assert qrng(16, 4, RandomSource(11)) == qrng(16, 4, RandomSource(11))

    def test_chunk_cap_validated(self):
        with pytest.raises(ValueError, match="cap"):
            qrng(8, 1000, RandomSource(0))

    def test_bits_validated(self):
        with pytest.raises(ValueError):
            qrng(0, 1, RandomSource(0))


class TestUniformity:
    def test_chi_square_sixteen_bins(self):
        """10^4 4-bit samples stay under the alpha=0.001 threshold."""
        samples = 10_000
        rng = RandomSource(17)
        counts = np.bincount(
            [qrng(4, 4, rng) for _ in range(samples)], minlength=16
        )
        threshold = stats.chi2.ppf(1 - 0.001, df=15)
        assert chi_square_statistic(counts, samples / 16) < threshold

    def test_single_qubit_chunks_unbiased(self):
        rng = RandomSource(19)
        values = [qrng(1, 1, rng) for _ in range(20_000)]
        assert abs(sum(values) / 20_000 - 0.5) < 5 * (0.25 / 20_000) ** 0.5
