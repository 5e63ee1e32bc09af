"""Tests for the Fourier transform circuit against the definitional matrix."""

import math

import numpy as np
import pytest

from oracles import dft_matrix, random_state_vector

from qregsim import basis_state, from_amplitudes
from qregsim.algorithms import inverse_qft, qft


class TestForward:
    def test_ground_state_goes_uniform(self):
        for n in (1, 3, 5):
            state = qft(basis_state(n, 0))
            expected = np.full(1 << n, 1 / math.sqrt(1 << n))
            np.testing.assert_allclose(state.amplitudes, expected, atol=1e-12)
            assert np.abs(state.amplitudes.imag).max() < 1e-12

    def test_period_two_comb(self):
        amps = np.zeros(8)
        amps[[0, 2, 4, 6]] = 0.5
        transformed = qft(from_amplitudes(3, amps))
        probs = transformed.probabilities()
        assert abs(probs[0] - 0.5) < 1e-12
        assert abs(probs[4] - 0.5) < 1e-12
        assert probs[[1, 2, 3, 5, 6, 7]].max() < 1e-12

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_definitional_matrix(self, n):
        reference = dft_matrix(n)
        for j in range(1 << n):
            column = qft(basis_state(n, j)).amplitudes
            np.testing.assert_allclose(column, reference[:, j], atol=1e-10)


class TestInverse:
    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_inverse_of_forward_is_identity(self, n):
        rng = np.random.default_rng(60 + n)
        state = from_amplitudes(n, random_state_vector(n, rng))
        round_tripped = inverse_qft(qft(state))
        np.testing.assert_allclose(
            round_tripped.amplitudes, state.amplitudes, atol=1e-10
        )

    def test_forward_of_inverse_is_identity(self):
        rng = np.random.default_rng(61)
        state = from_amplitudes(5, random_state_vector(5, rng))
        round_tripped = qft(inverse_qft(state))
        np.testing.assert_allclose(
            round_tripped.amplitudes, state.amplitudes, atol=1e-10
        )


class TestSubRegister:
    def test_transform_on_low_qubits_leaves_high_factor(self):
        rng = np.random.default_rng(62)
        low = from_amplitudes(2, random_state_vector(2, rng))
        from qregsim import tensor

        joint = tensor(basis_state(1, 1), low)  # qubit 2 set, low register random
        transformed = qft(joint, qubits=[0, 1])
        expected = np.kron([0, 1], dft_matrix(2) @ low.amplitudes)
        np.testing.assert_allclose(transformed.amplitudes, expected, atol=1e-10)

    def test_duplicate_qubits_rejected(self):
        with pytest.raises(ValueError):
            qft(basis_state(3, 0), qubits=[0, 0])
