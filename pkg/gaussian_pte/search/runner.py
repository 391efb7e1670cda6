"""Run a search over all chunks with optional worker processes and resume."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Iterable, List

from opentelemetry import trace

from ..logging_integration import correlation_context
from ..pte import PteSolution, emit_solutions, parse_solutions
from .checkpoint import Checkpoint, atomic_write_text
from .config import Chunk, SearchConfig, SearchConfigError, plan_chunks
from .dedup import dedup_canonical
from .engine import ChunkResult, search_chunk
from .sieve import check_sieve_primes

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)


def _drop_partial_tail(path: Path) -> None:
    # a crash mid-append can leave a line without its newline
    text = path.read_text(encoding="utf-8")
    if text and not text.endswith("\n"):
        atomic_write_text(path, text[: text.rfind("\n") + 1])


def _append(path: Path, solutions: Iterable[PteSolution]) -> None:
    text = emit_solutions(solutions)
    if not text:
        return
    with open(path, "a", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
        handle.flush()
        os.fsync(handle.fileno())


class _Collector:
    """Single writer for result lines and checkpoint updates."""

    def __init__(self, cfg: SearchConfig, checkpoint: Checkpoint | None) -> None:
        self.cfg = cfg
        self.checkpoint = checkpoint
        self.fingerprint = cfg.fingerprint()
        self.collected: List[PteSolution] = []

    def accept(self, result: ChunkResult) -> None:
        with correlation_context(
            {"search.fingerprint": self.fingerprint, "search.chunk": str(result.chunk_id)}
        ):
            if self.cfg.output is not None:
                _append(self.cfg.output, result.solutions)
            else:
                self.collected.extend(result.solutions)
            if self.checkpoint is not None:
                self.checkpoint.mark_done(result.chunk_id)
            logger.info(
                "chunk %d complete: %d solutions from %d candidates (%d unresolved)",
                result.chunk_id,
                len(result.solutions),
                result.candidates,
                result.unresolved,
            )

    def finish(self) -> List[PteSolution]:
        if self.cfg.output is None:
            return dedup_canonical(self.collected)
        solutions = dedup_canonical(parse_solutions(self.cfg.output.read_text(encoding="utf-8")))
        atomic_write_text(self.cfg.output, emit_solutions(solutions))
        return solutions


def _prepare(cfg: SearchConfig) -> Checkpoint | None:
    if cfg.checkpoint is None:
        if cfg.output is not None:
            atomic_write_text(cfg.output, "")
        return None
    if cfg.output is None:
        raise SearchConfigError("a checkpointed search needs an output file")
    resuming = cfg.checkpoint.exists()
    checkpoint = Checkpoint.open(cfg.checkpoint, cfg.fingerprint())
    if resuming and cfg.output.exists():
        _drop_partial_tail(cfg.output)
    else:
        atomic_write_text(cfg.output, "")
    return checkpoint


def run(cfg: SearchConfig) -> List[PteSolution]:
    """Search every pending chunk and return the deduplicated solutions.

    With ``cfg.output`` set the results are also written there, one per line.

    Raises:
        CheckpointMismatchError: before any work, if the checkpoint belongs to another configuration.
        SearchInconsistencyError: if a completed candidate fails verification.
    """

    checkpoint = _prepare(cfg)
    check_sieve_primes(cfg)
    pending: List[Chunk] = [
        chunk
        for chunk in plan_chunks(cfg)
        if checkpoint is None or not checkpoint.is_done(chunk.chunk_id)
    ]
    collector = _Collector(cfg, checkpoint)
    with tracer.start_as_current_span("search.run") as span:
        span.set_attribute("search.fingerprint", collector.fingerprint)
        span.set_attribute("search.mode", cfg.mode.value)
        span.set_attribute("search.n", cfg.n)
        span.set_attribute("search.pending_chunks", len(pending))
        logger.info(
            "search n=%d mode=%s box=%d: %d of %d chunks pending",
            cfg.n,
            cfg.mode.value,
            cfg.box,
            len(pending),
            cfg.chunk_count,
        )
        if cfg.workers == 1 or len(pending) <= 1:
            for chunk in pending:
                collector.accept(search_chunk(cfg, chunk))
        else:
            with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
                futures = [executor.submit(search_chunk, cfg, chunk) for chunk in pending]
                for future in as_completed(futures):
                    collector.accept(future.result())
        solutions = collector.finish()
        span.set_attribute("search.solutions", len(solutions))
    return solutions


__all__ = ["run"]
