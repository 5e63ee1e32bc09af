import math

import numpy as np
import pytest

from qregsim import from_amplitudes


@pytest.fixture
def triple_state():
    """5-qubit register in an equal superposition of |00000>, |10000>, |11111>."""
    amps = np.zeros(32)
    amps[[0, 16, 31]] = 1.0 / math.sqrt(3.0)
    return from_amplitudes(5, amps)


@pytest.fixture
def plus_state():
    """Single qubit in (|0> + |1>) / sqrt(2)."""
    return from_amplitudes(1, [1.0 / math.sqrt(2.0)] * 2)
