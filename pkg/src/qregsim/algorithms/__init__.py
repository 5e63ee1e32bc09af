"""Algorithm library built on the simulator core."""

from .grover import (
    GroverResult,
    Oracle,
    amplified_state,
    count_marked,
    grover_search,
    uniform_superposition,
)
from .qam import PatternMemory, QamResult, qam_query, qam_store
from .qft import inverse_qft, qft, qft_applications
from .qrng import qrng
from .shor import RetryLimitExceeded, shor_factor, shor_period
from .walk import (
    SYMMETRIC_COIN,
    WalkDistribution,
    classical_walk_line,
    quantum_walk_line,
)

__all__ = [
    "GroverResult",
    "Oracle",
    "PatternMemory",
    "QamResult",
    "RetryLimitExceeded",
    "SYMMETRIC_COIN",
    "WalkDistribution",
    "amplified_state",
    "classical_walk_line",
    "count_marked",
    "grover_search",
    "inverse_qft",
    "qam_query",
    "qam_store",
    "qft",
    "qft_applications",
    "qrng",
    "quantum_walk_line",
    "shor_factor",
    "shor_period",
    "uniform_superposition",
]
