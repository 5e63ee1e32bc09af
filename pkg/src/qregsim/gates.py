"""Gate definitions and the strided amplitude-update kernel.

Every gate is a small unitary matrix over its bound qubits.  The matrix
basis follows the register convention: the first bound qubit is the most
significant bit of the matrix row/column index, so CNOT with targets
``[control, target]`` is the familiar ``[[1,0,0,0],[0,1,0,0],[0,0,0,1],
[0,0,1,0]]``.  Applying a gate never materializes the full 2**n x 2**n
operator; amplitudes are updated in 2**k-element blocks addressed by bit
masks.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from .state import QuantumState

#: Per-entry tolerance for the unitarity check U^dagger U = I.
UNITARY_TOLERANCE = 1e-12

_SQRT1_2 = 1.0 / math.sqrt(2.0)


class Gate:
    """A named unitary acting on a fixed number of qubits.

    Instances are immutable.  Use the module-level constants (IDENTITY, NOT,
    HADAMARD, CNOT, EXCHANGE, TOFFOLI, FREDKIN) and the factories
    phase_shift(), controlled_phase() and custom_gate().
    """

    __slots__ = ("name", "arity", "matrix", "phi")

    def __init__(self, name: str, arity: int, matrix: np.ndarray, phi: float | None = None):
        matrix = np.asarray(matrix, dtype=np.complex128)
        if matrix.shape != (1 << arity, 1 << arity):
            raise ValueError(
                f"gate {name!r} needs a {1 << arity}x{1 << arity} matrix, "
                f"got shape {matrix.shape}"
            )
        matrix.flags.writeable = False
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "phi", phi)

    def __setattr__(self, key, value):
        raise AttributeError("Gate instances are immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gate):
            return NotImplemented
        return (
            self.name == other.name
            and self.phi == other.phi
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.name, self.phi))

    def __repr__(self) -> str:
        if self.phi is not None:
            return f"Gate({self.name}, phi={self.phi!r})"
        return f"Gate({self.name})"


def _permutation_matrix(arity: int, mapping: dict[int, int]) -> np.ndarray:
    dim = 1 << arity
    m = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        m[mapping.get(col, col), col] = 1.0
    return m


IDENTITY = Gate("id", 1, np.eye(2))
NOT = Gate("x", 1, [[0, 1], [1, 0]])
HADAMARD = Gate("h", 1, np.array([[1, 1], [1, -1]]) * _SQRT1_2)
CNOT = Gate("cnot", 2, _permutation_matrix(2, {0b10: 0b11, 0b11: 0b10}))
EXCHANGE = Gate("swap", 2, _permutation_matrix(2, {0b01: 0b10, 0b10: 0b01}))
TOFFOLI = Gate("toffoli", 3, _permutation_matrix(3, {0b110: 0b111, 0b111: 0b110}))
FREDKIN = Gate("fredkin", 3, _permutation_matrix(3, {0b101: 0b110, 0b110: 0b101}))


def phase_shift(phi: float) -> Gate:
    """diag(1, e^{i*phi}): phase on the |1> component of one qubit."""
    return Gate("phase", 1, np.diag([1.0, cmath.exp(1j * phi)]), phi=float(phi))


def controlled_phase(phi: float) -> Gate:
    """Two-qubit diag(1, 1, 1, e^{i*phi}); symmetric in its qubits."""
    return Gate("cphase", 2, np.diag([1.0, 1.0, 1.0, cmath.exp(1j * phi)]), phi=float(phi))


def custom_gate(arity: int, entries) -> Gate:
    """A user-supplied unitary on ``arity`` qubits, validated on construction."""
    if not isinstance(arity, int) or arity < 1:
        raise ValueError(f"arity must be a positive integer, got {arity!r}")
    matrix = np.array(entries, dtype=np.complex128)
    dim = 1 << arity
    if matrix.shape != (dim, dim):
        raise ValueError(
            f"custom gate of arity {arity} needs a {dim}x{dim} matrix, "
            f"got shape {matrix.shape}"
        )
    if not (np.all(np.isfinite(matrix.real)) and np.all(np.isfinite(matrix.imag))):
        raise ValueError("custom gate matrix contains a non-finite entry")
    deviation = np.abs(matrix.conj().T @ matrix - np.eye(dim))
    worst = np.unravel_index(np.argmax(deviation), deviation.shape)
    if deviation[worst] > UNITARY_TOLERANCE:
        raise ValueError(
            "custom gate matrix is not unitary: max deviation "
            f"{deviation[worst]:.3e} at entry {tuple(int(i) for i in worst)}"
        )
    return Gate("custom", arity, matrix)


def matrix_of(gate: Gate) -> np.ndarray:
    """The gate's unitary matrix (read-only view)."""
    return gate.matrix


class GateApplication:
    """A gate bound to an ordered tuple of distinct target qubits.

    Control qubits come first: CNOT is [control, target], Toffoli is
    [control1, control2, target], Fredkin is [control, swap_a, swap_b].
    """

    __slots__ = ("gate", "targets")

    def __init__(self, gate: Gate, targets: Sequence[int]):
        targets = tuple(int(q) for q in targets)
        if len(targets) != gate.arity:
            raise ValueError(
                f"gate {gate.name!r} acts on {gate.arity} qubit(s), "
                f"got targets {targets}"
            )
        if len(set(targets)) != len(targets):
            raise ValueError(f"duplicate target qubits in {targets}")
        if any(q < 0 for q in targets):
            raise ValueError(f"negative qubit index in {targets}")
        object.__setattr__(self, "gate", gate)
        object.__setattr__(self, "targets", targets)

    def __setattr__(self, key, value):
        raise AttributeError("GateApplication instances are immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GateApplication):
            return NotImplemented
        return self.gate == other.gate and self.targets == other.targets

    def __repr__(self) -> str:
        return f"GateApplication({self.gate!r}, targets={self.targets})"


def _block_indices(num_qubits: int, targets: tuple[int, ...]) -> np.ndarray:
    """Flat amplitude indices grouped by target-bit pattern.

    Row r of the result lists every basis index whose target bits spell r
    (targets[0] as the most significant bit of r); each basis index appears
    exactly once.  Shape (2**k, 2**(n-k)).
    """
    # Index tables for small registers are cached; wide registers rebuild
    # them per call to keep the cache bounded (<= 0.5 MiB per entry).
    if num_qubits <= 16:
        return _block_indices_cached(num_qubits, targets)
    return _build_block_indices(num_qubits, targets)


@lru_cache(maxsize=512)
def _block_indices_cached(num_qubits: int, targets: tuple[int, ...]) -> np.ndarray:
    return _build_block_indices(num_qubits, targets)


def _build_block_indices(num_qubits: int, targets: tuple[int, ...]) -> np.ndarray:
    k = len(targets)
    rest = [q for q in range(num_qubits) if q not in targets]
    base = np.arange(1 << (num_qubits - k), dtype=np.intp)
    stride = np.zeros_like(base)
    for j, q in enumerate(rest):
        stride |= ((base >> j) & 1) << q
    offsets = np.zeros(1 << k, dtype=np.intp)
    for r in range(1 << k):
        for j, q in enumerate(targets):
            if (r >> (k - 1 - j)) & 1:
                offsets[r] |= 1 << q
    idx = offsets[:, None] + stride[None, :]
    idx.flags.writeable = False
    return idx


def apply(state: QuantumState, application: GateApplication) -> QuantumState:
    """Apply a gate to the given qubits of a register, returning a new state.

    Equivalent to multiplying by the gate embedded on its targets with
    identity elsewhere, computed in O(2**n * 4**k) via strided block
    updates on a private copy.
    """
    n = state.num_qubits
    targets = application.targets
    if max(targets) >= n:
        raise ValueError(
            f"target qubit {max(targets)} out of range for {n}-qubit state"
        )
    idx = _block_indices(n, targets)
    out = np.empty(state.dim, dtype=np.complex128)
    out[idx.reshape(-1)] = (application.gate.matrix @ state.amplitudes[idx]).reshape(-1)
    return QuantumState(n, out, copy=False)
