"""Interpolation search for ideal solutions with congruence sieving and resume."""

from .checkpoint import Checkpoint, CheckpointError, CheckpointMismatchError
from .completion import (
    SearchInconsistencyError,
    complete,
    complete_general,
    complete_sym_even,
    complete_sym_odd,
)
from .config import (
    Chunk,
    SearchConfig,
    SearchConfigError,
    SearchMode,
    candidate_grid,
    default_split,
    plan_chunks,
)
from .dedup import conjugate_pairs, dedup_canonical
from .engine import (
    ChunkResult,
    search,
    search_chunk,
    search_general,
    search_sym_even,
    search_sym_odd,
)
from .runner import run
from .sieve import (
    Prefix,
    PrefixError,
    admissible,
    auto_sieve_primes,
    cycle_order,
    resolve_sieve_primes,
    sieve_stream,
    sym_odd_cycle_order,
)

__all__ = [
    "Checkpoint",
    "CheckpointError",
    "CheckpointMismatchError",
    "Chunk",
    "ChunkResult",
    "Prefix",
    "PrefixError",
    "SearchConfig",
    "SearchConfigError",
    "SearchInconsistencyError",
    "SearchMode",
    "admissible",
    "auto_sieve_primes",
    "candidate_grid",
    "complete",
    "complete_general",
    "complete_sym_even",
    "complete_sym_odd",
    "conjugate_pairs",
    "cycle_order",
    "dedup_canonical",
    "default_split",
    "plan_chunks",
    "resolve_sieve_primes",
    "run",
    "search",
    "search_chunk",
    "search_general",
    "search_sym_even",
    "search_sym_odd",
    "sieve_stream",
    "sym_odd_cycle_order",
]
