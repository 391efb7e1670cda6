"""Search configuration, candidate grid and chunk planning."""

from __future__ import annotations

import hashlib
import operator
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Tuple

from ..gint import GaussianInt, is_gaussian_prime
from ..symfunc import DEFAULT_BUDGET_BITS


class SearchConfigError(ValueError):
    """Raised when a search configuration is inconsistent."""


class SearchMode(str, Enum):
    GENERAL = "general"
    SYM_EVEN = "sym-even"
    SYM_ODD = "sym-odd"


def _ceil_half(value: int) -> int:
    return -(-value // 2)


def default_split(n: int, mode: SearchMode) -> int | None:
    """Default interpolation split: ``ceil((n+1)/2)``, taken in w-space for sym-even."""

    if mode is SearchMode.GENERAL:
        return _ceil_half(n + 1)
    if mode is SearchMode.SYM_EVEN:
        m = n // 2
        return max(1, min(_ceil_half(m + 1), m - 1))
    return None


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search; paths and worker count are not part of its identity."""

    n: int
    mode: SearchMode = SearchMode.GENERAL
    box: int = 2
    k: int | None = None
    sieve_primes: Tuple[GaussianInt, ...] = field(default_factory=tuple)
    chunk_count: int = 1
    output: Path | None = None
    checkpoint: Path | None = None
    workers: int = 1
    budget_bits: int = DEFAULT_BUDGET_BITS

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        try:
            mode = SearchMode(self.mode)
        except ValueError as exc:
            raise SearchConfigError(f"unknown search mode {self.mode!r}") from exc
        box = operator.index(self.box)
        if box < 1:
            raise SearchConfigError("box must be at least 1")

        if mode is SearchMode.GENERAL:
            if n < 3:
                raise SearchConfigError("general search needs n >= 3")
        elif mode is SearchMode.SYM_EVEN:
            if n < 4 or n % 2:
                raise SearchConfigError("sym-even search needs an even n >= 4")
        elif n < 3 or n % 2 == 0:
            raise SearchConfigError("sym-odd search needs an odd n >= 3")

        k = default_split(n, mode) if self.k is None else operator.index(self.k)
        if mode is SearchMode.GENERAL and not 2 <= k <= n - 1:
            raise SearchConfigError(f"k={k} outside 2..{n - 1}")
        if mode is SearchMode.SYM_EVEN and not 1 <= k <= n // 2 - 1:
            raise SearchConfigError(f"k={k} outside 1..{n // 2 - 1} for the squared half")
        if mode is SearchMode.SYM_ODD:
            if self.k is not None:
                raise SearchConfigError("sym-odd search has no interpolation split")
            k = None

        primes = tuple(GaussianInt.coerce(q) for q in self.sieve_primes)
        if len(primes) > 2:
            raise SearchConfigError("at most two sieve primes are supported")
        for q in primes:
            if not q.is_canonical() or not is_gaussian_prime(q):
                raise SearchConfigError(f"sieve prime {q} is not a canonical Gaussian prime")
        if len(set(primes)) != len(primes):
            raise SearchConfigError("sieve primes must differ")

        if operator.index(self.chunk_count) < 1:
            raise SearchConfigError("chunk_count must be positive")
        if operator.index(self.workers) < 1:
            raise SearchConfigError("workers must be positive")

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "box", box)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "sieve_primes", primes)
        if self.output is not None:
            object.__setattr__(self, "output", Path(self.output))
        if self.checkpoint is not None:
            object.__setattr__(self, "checkpoint", Path(self.checkpoint))

    def canonical_text(self) -> str:
        sieve = ",".join(str(q) for q in self.sieve_primes) or "none"
        return (
            f"n={self.n};mode={self.mode.value};k={self.k};box={self.box};"
            f"sieve={sieve};chunks={self.chunk_count};budget={self.budget_bits}"
        )

    def fingerprint(self) -> str:
        return hashlib.sha256(self.canonical_text().encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Chunk:
    """A contiguous slice ``[start, stop)`` of the candidate grid."""

    chunk_id: int
    start: int
    stop: int

    def __len__(self) -> int:
        return max(self.stop - self.start, 0)


@lru_cache(maxsize=16)
def candidate_grid(box: int) -> Tuple[GaussianInt, ...]:
    """All points with ``|re|, |im| <= box``, ordered by ``(norm, re, im)``."""

    points = (
        GaussianInt(re, im)
        for re in range(-box, box + 1)
        for im in range(-box, box + 1)
    )
    return tuple(sorted(points, key=GaussianInt.sort_key))


def plan_chunks(cfg: SearchConfig) -> Tuple[Chunk, ...]:
    """Split the grid of first-variable values into ``chunk_count`` contiguous pieces."""

    total = len(candidate_grid(cfg.box))
    size = -(-total // cfg.chunk_count)
    return tuple(
        Chunk(chunk_id=i, start=min(i * size, total), stop=min((i + 1) * size, total))
        for i in range(cfg.chunk_count)
    )


__all__ = [
    "Chunk",
    "SearchConfig",
    "SearchConfigError",
    "SearchMode",
    "candidate_grid",
    "default_split",
    "plan_chunks",
]
