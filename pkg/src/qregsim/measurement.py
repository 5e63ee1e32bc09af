"""Born-rule sampling, measurement collapse, marginals, and a product check.

Measurement is simulated classically: a seeded deterministic RandomSource
replaces physical randomness so every run is reproducible.  Collapse
projects the state onto the observed bits (inconsistent amplitudes become
exactly zero) and renormalizes.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from .state import QuantumState, basis_state

#: Second singular value below this means the bipartition factorizes.
PRODUCT_TOLERANCE = 1e-9


class RandomSource:
    """Seeded deterministic stream of uniform doubles in [0, 1).

    Backed by numpy's PCG64 generator, so the same 64-bit seed always
    reproduces the same stream.  ``draw_count`` tracks how many values have
    been consumed, which makes round-trip accounting testable.
    """

    __slots__ = ("_seed", "_generator", "_draws")

    def __init__(self, seed: int):
        if not isinstance(seed, (int, np.integer)) or seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {seed!r}")
        self._seed = int(seed)
        self._generator = np.random.Generator(np.random.PCG64(self._seed))
        self._draws = 0

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def draw_count(self) -> int:
        return self._draws

    def uniform(self) -> float:
        self._draws += 1
        return float(self._generator.random())

    def uniforms(self, count: int) -> np.ndarray:
        self._draws += count
        return self._generator.random(count)

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in [low, high); counts as one draw."""
        self._draws += 1
        return int(self._generator.integers(low, high))

    def __repr__(self) -> str:
        return f"RandomSource(seed={self._seed})"


@dataclass(frozen=True)
class MeasurementOutcome:
    """Observed bits plus the collapsed, renormalized post-measurement state."""

    measured_bits: dict[int, int]
    post_state: QuantumState


def _check_qubits(state: QuantumState, qubits: Iterable[int]) -> list[int]:
    qubits = [int(q) for q in qubits]
    for q in qubits:
        if not 0 <= q < state.num_qubits:
            raise ValueError(
                f"qubit index {q} out of range for {state.num_qubits}-qubit state"
            )
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"duplicate qubit indices in {qubits}")
    return qubits


def marginal(state: QuantumState, bits: Mapping[int, int]) -> float:
    """Probability that the given qubits read the given bits.

    ``bits`` maps qubit index to 0 or 1; an empty mapping yields 1.
    """
    qubits = _check_qubits(state, bits.keys())
    if not qubits:
        return 1.0
    mask = 0
    want = 0
    for q in qubits:
        bit = bits[q]
        if bit not in (0, 1):
            raise ValueError(f"bit for qubit {q} must be 0 or 1, got {bit!r}")
        mask |= 1 << q
        want |= bit << q
    indices = np.arange(state.dim)
    consistent = (indices & mask) == want
    return float(state.probabilities()[consistent].sum())


def marginal_distribution(state: QuantumState, qubits: Sequence[int]) -> np.ndarray:
    """Joint distribution over a qubit subset.

    Entry ``a`` is the probability that qubit ``qubits[j]`` reads bit ``j``
    of ``a``, for all ``j`` simultaneously.
    """
    qubits = _check_qubits(state, qubits)
    indices = np.arange(state.dim)
    keys = np.zeros(state.dim, dtype=np.intp)
    for j, q in enumerate(qubits):
        keys |= ((indices >> q) & 1) << j
    return np.bincount(keys, weights=state.probabilities(), minlength=1 << len(qubits))


def _draw_index(distribution: np.ndarray, u: float) -> int:
    """Inverse-CDF draw over basis order; zero-probability bins unreachable."""
    cum = np.cumsum(distribution)
    cum /= cum[-1]
    return int(np.searchsorted(cum, u, side="right"))


def _project(state: QuantumState, bits: Mapping[int, int]) -> QuantumState:
    """Zero every amplitude inconsistent with ``bits`` and renormalize."""
    mask = 0
    want = 0
    for q, bit in bits.items():
        mask |= 1 << q
        want |= bit << q
    indices = np.arange(state.dim)
    amps = state.amplitudes.copy()
    amps[(indices & mask) != want] = 0.0
    norm = np.linalg.norm(amps)
    if norm == 0.0:
        raise ValueError(f"projection onto {dict(bits)} has zero probability")
    amps /= norm
    return QuantumState(state.num_qubits, amps, copy=False)


def measure_all(
    state: QuantumState, rng: RandomSource
) -> tuple[int, MeasurementOutcome]:
    """Sample a basis index by the Born rule and collapse onto it."""
    index = _draw_index(state.probabilities(), rng.uniform())
    n = state.num_qubits
    bits = {q: (index >> q) & 1 for q in range(n)}
    return index, MeasurementOutcome(bits, basis_state(n, index))


def measure_qubits(
    state: QuantumState, qubits: Sequence[int], rng: RandomSource
) -> MeasurementOutcome:
    """Measure a subset of qubits jointly; the rest may stay in superposition.

    The joint assignment is drawn directly from the subset's marginal
    distribution with a single uniform, then the state is projected once.
    """
    qubits = _check_qubits(state, qubits)
    if not qubits:
        return MeasurementOutcome({}, state)
    assignment = _draw_index(marginal_distribution(state, qubits), rng.uniform())
    bits = {q: (assignment >> j) & 1 for j, q in enumerate(qubits)}
    return MeasurementOutcome(bits, _project(state, bits))


def sample_counts(
    state: QuantumState,
    shots: int,
    rng: RandomSource,
    qubits: Sequence[int] | None = None,
) -> dict[int, int]:
    """Repeated terminal measurement of a fixed state: counts per outcome.

    With ``qubits`` given, outcomes are packed over that subset with the
    highest qubit index as the most significant bit; otherwise outcomes are
    full basis indices.  One uniform is drawn per shot.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    if qubits is None:
        distribution = state.probabilities()
    else:
        distribution = marginal_distribution(state, sorted(_check_qubits(state, qubits)))
    cum = np.cumsum(distribution)
    cum /= cum[-1]
    outcomes = np.searchsorted(cum, rng.uniforms(shots), side="right")
    values, freq = np.unique(outcomes, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, freq)}


def is_product(state: QuantumState, left_qubits: Iterable[int]) -> bool:
    """True iff the state factors across (left_qubits, remaining qubits).

    The amplitude vector reshaped into a (left, rest) matrix has numerical
    rank 1 exactly for product states; checked via the second singular value.
    """
    left = sorted(_check_qubits(state, left_qubits))
    n = state.num_qubits
    if not left or len(left) == n:
        raise ValueError("left_qubits must be a nonempty proper subset")
    right = [q for q in range(n) if q not in left]
    indices = np.arange(state.dim)
    rows = np.zeros(state.dim, dtype=np.intp)
    cols = np.zeros(state.dim, dtype=np.intp)
    for j, q in enumerate(left):
        rows |= ((indices >> q) & 1) << j
    for j, q in enumerate(right):
        cols |= ((indices >> q) & 1) << j
    matrix = np.zeros((1 << len(left), 1 << len(right)), dtype=np.complex128)
    matrix[rows, cols] = state.amplitudes
    singular = np.linalg.svd(matrix, compute_uv=False)
    return bool(singular[1] < PRODUCT_TOLERANCE)
