"""Quantum Fourier transform built from Hadamards and controlled phases.

The transform maps |j> to 2**(-n/2) * sum_k exp(2*pi*i*j*k / 2**n) |k>,
extended linearly.  It is compiled to the standard ladder: for each qubit
from the most significant down, a Hadamard followed by controlled phase
rotations pi/2, pi/4, ... conditioned on the lower qubits, finished by a
qubit-reversal swap stage.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from .. import gates
from ..gates import GateApplication
from ..state import QuantumState


def qft_applications(qubits: Sequence[int]) -> list[GateApplication]:
    """Gate sequence realizing the transform on a sub-register.

    ``qubits`` lists the register's qubit indices; significance follows the
    listed order with the last entry most significant.
    """
    order = list(qubits)
    steps: list[GateApplication] = []
    m = len(order)
    for i in range(m - 1, -1, -1):
        steps.append(GateApplication(gates.HADAMARD, (order[i],)))
        for d in range(1, i + 1):
            phi = math.pi / (1 << d)
            steps.append(
                GateApplication(gates.controlled_phase(phi), (order[i - d], order[i]))
            )
    for i in range(m // 2):
        steps.append(GateApplication(gates.EXCHANGE, (order[i], order[m - 1 - i])))
    return steps


def _inverse(steps: list[GateApplication]) -> list[GateApplication]:
    inverted = []
    for step in reversed(steps):
        gate = step.gate
        if gate.phi is not None:
            gate = gates.controlled_phase(-gate.phi)
        inverted.append(GateApplication(gate, step.targets))
    return inverted


def _resolve_qubits(state: QuantumState, qubits: Sequence[int] | None) -> list[int]:
    if qubits is None:
        return list(range(state.num_qubits))
    qubits = [int(q) for q in qubits]
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"duplicate qubit indices in {qubits}")
    for q in qubits:
        if not 0 <= q < state.num_qubits:
            raise ValueError(f"qubit {q} out of range for {state.num_qubits}-qubit state")
    return sorted(qubits)


def qft(state: QuantumState, qubits: Sequence[int] | None = None) -> QuantumState:
    """Apply the transform to a sub-register (default: the whole register).

    Sub-register significance follows qubit index order, matching the basis
    index convention.
    """
    for step in qft_applications(_resolve_qubits(state, qubits)):
        state = gates.apply(state, step)
    return state


def inverse_qft(state: QuantumState, qubits: Sequence[int] | None = None) -> QuantumState:
    """Inverse transform; inverse_qft(qft(s)) recovers s."""
    for step in _inverse(qft_applications(_resolve_qubits(state, qubits))):
        state = gates.apply(state, step)
    return state
