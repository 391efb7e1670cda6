"""Chunk execution: stream prefixes, complete them and keep the verified solutions."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

from opentelemetry import trace

from ..gint import FactorizationBudgetExceeded
from ..pte import PteSolution
from .completion import complete
from .config import Chunk, SearchConfig, SearchConfigError, SearchMode, plan_chunks
from .dedup import dedup_canonical
from .sieve import check_sieve_primes, sieve_stream

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)


@dataclass(frozen=True)
class ChunkResult:
    """Deduplicated solutions of one chunk and its counters."""

    chunk_id: int
    solutions: Tuple[PteSolution, ...]
    candidates: int
    accepted: int
    unresolved: int


def search_chunk(cfg: SearchConfig, chunk: Chunk) -> ChunkResult:
    candidates = accepted = unresolved = 0
    found: List[PteSolution] = []
    with tracer.start_as_current_span("search.chunk") as span:
        span.set_attribute("search.mode", cfg.mode.value)
        span.set_attribute("search.n", cfg.n)
        span.set_attribute("search.chunk", chunk.chunk_id)
        for prefix in sieve_stream(cfg, chunk):
            candidates += 1
            try:
                solution = complete(cfg, prefix)
            except FactorizationBudgetExceeded as exc:
                unresolved += 1
                logger.warning("candidate %s/%s left unresolved: %s", prefix.xs, prefix.ys, exc)
                continue
            if solution is not None:
                accepted += 1
                found.append(solution)
        span.set_attribute("search.candidates", candidates)
        span.set_attribute("search.accepted", accepted)
        span.set_attribute("search.unresolved", unresolved)
    logger.debug(
        "chunk %d: %d candidates, %d accepted, %d unresolved",
        chunk.chunk_id,
        candidates,
        accepted,
        unresolved,
    )
    return ChunkResult(
        chunk_id=chunk.chunk_id,
        solutions=tuple(dedup_canonical(found)),
        candidates=candidates,
        accepted=accepted,
        unresolved=unresolved,
    )


def _search_all(cfg: SearchConfig) -> List[PteSolution]:
    check_sieve_primes(cfg)
    found: List[PteSolution] = []
    for chunk in plan_chunks(cfg):
        found.extend(search_chunk(cfg, chunk).solutions)
    return dedup_canonical(found)


def _require_mode(cfg: SearchConfig, mode: SearchMode) -> None:
    if cfg.mode is not mode:
        raise SearchConfigError(f"expected a {mode.value} configuration, got {cfg.mode.value}")


def search_general(cfg: SearchConfig) -> List[PteSolution]:
    """In-process general-mode search; ``x_1 = 0`` and ``y_1`` canonical."""

    _require_mode(cfg, SearchMode.GENERAL)
    return _search_all(cfg)


def search_sym_even(cfg: SearchConfig) -> List[PteSolution]:
    """In-process search for ``{±a} =_{n-1} {±b}`` through the squared values."""

    _require_mode(cfg, SearchMode.SYM_EVEN)
    return _search_all(cfg)


def search_sym_odd(cfg: SearchConfig) -> List[PteSolution]:
    """In-process search for ``X =_{n-1} -X``."""

    _require_mode(cfg, SearchMode.SYM_ODD)
    return _search_all(cfg)


def search(cfg: SearchConfig) -> List[PteSolution]:
    return _search_all(cfg)


__all__ = [
    "ChunkResult",
    "search",
    "search_chunk",
    "search_general",
    "search_sym_even",
    "search_sym_odd",
]
