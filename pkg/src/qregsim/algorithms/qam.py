"""Associative memory over superimposed bit patterns.

An n-qubit register stores up to 2**n distinct n-bit patterns as the
uniform superposition with amplitude 1/sqrt(p) on each - exponentially
more patterns than a comparable classical associative network holds.
Retrieval amplifies the stored patterns within a Hamming ball around the
query, reflecting about the memory state so support never leaves the
stored set.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..measurement import RandomSource, measure_all
from ..state import QuantumState
from .grover import amplify, iteration_count


@dataclass(frozen=True)
class PatternMemory:
    """Distinct stored bit patterns and their superposition state."""

    pattern_length: int
    patterns: tuple[str, ...]
    state: QuantumState


class QamResult(NamedTuple):
    pattern: str
    predicted_success: float


def _validate_pattern(pattern: str, length: int | None = None) -> str:
    if not pattern or set(pattern) - {"0", "1"}:
        raise ValueError(f"pattern must be a nonempty string of 0s and 1s, got {pattern!r}")
    if length is not None and len(pattern) != length:
        raise ValueError(
            f"pattern {pattern!r} has length {len(pattern)}, expected {length}"
        )
    return pattern


def qam_store(patterns: Iterable[str]) -> PatternMemory:
    """Store distinct equal-length bit patterns as their uniform superposition."""
    patterns = tuple(patterns)
    if not patterns:
        raise ValueError("cannot store an empty pattern set")
    length = len(_validate_pattern(patterns[0]))
    for pattern in patterns[1:]:
        _validate_pattern(pattern, length)
    if len(set(patterns)) != len(patterns):
        raise ValueError("stored patterns must be distinct")
    amps = np.zeros(1 << length, dtype=np.complex128)
    amps[[int(p, 2) for p in patterns]] = 1.0 / math.sqrt(len(patterns))
    return PatternMemory(length, patterns, QuantumState(length, amps, copy=False))


def _hamming(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))


def qam_query(
    memory: PatternMemory, query: str, radius: int, rng: RandomSource
) -> QamResult:
    """Retrieve a stored pattern within Hamming distance ``radius`` of ``query``.

    Amplifies the matching patterns inside the memory superposition (the
    reflection is about the memory state, not the uniform state) and
    measures.  Raises ValueError when no stored pattern is close enough,
    reporting the minimum achievable distance.
    """
    _validate_pattern(query, memory.pattern_length)
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    distances = {p: _hamming(p, query) for p in memory.patterns}
    matches = [p for p, d in distances.items() if d <= radius]
    if not matches:
        raise ValueError(
            f"no stored pattern within distance {radius} of {query!r}; "
            f"closest is at distance {min(distances.values())}"
        )
    k, theta = iteration_count(len(matches), len(memory.patterns))
    marked = np.array([int(p, 2) for p in matches], dtype=np.intp)
    amps = amplify(memory.state.amplitudes, marked, memory.state.amplitudes, k)
    final = QuantumState(memory.pattern_length, amps, copy=False)
    outcome, _ = measure_all(final, rng)
    pattern = format(outcome, f"0{memory.pattern_length}b")
    return QamResult(pattern, math.sin((2 * k + 1) * theta) ** 2)
