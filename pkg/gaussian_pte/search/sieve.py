"""Candidate prefixes for the completion step, filtered by prime pairings.

If ``q`` divides the constant of an ideal solution then ``x`` and ``y`` have
equal residue multisets modulo ``q``. With two such primes the solution can be
listed in an order where ``x_i = y_i (mod q1)`` for every pair and, modulo
``q2``, either ``x_{i+1} = y_i`` or the running sum of ``x_j - y_j`` vanishes.
Enumerating in that order lets both congruences prune as early as possible.

In the symmetric modes a unit rotation, together with a swap of sides for
sym-even, makes the first value the nonzero value of least norm, so the
sieved streams never list a later nonzero value of smaller norm.
"""

from __future__ import annotations

import logging
import re
from collections import defaultdict
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, Iterator, List, Mapping, NamedTuple, Sequence, Tuple

from ..bounds import lower_bound
from ..gint import ZERO, GaussianInt, divides, divrem, prime_sort_key
from .config import Chunk, SearchConfig, SearchConfigError, SearchMode, candidate_grid

logger = logging.getLogger(__name__)

Residue = Tuple[int, int]


class PrefixError(ValueError):
    """Raised when a prefix violates the completion preconditions."""


class Prefix(NamedTuple):
    """Enumerated values: ``xs`` then ``ys`` (base values in the symmetric modes)."""

    xs: Tuple[GaussianInt, ...]
    ys: Tuple[GaussianInt, ...]


# Sieve primes ---------------------------------------------------------------


def auto_sieve_primes(n: int, mode: SearchMode) -> Tuple[GaussianInt, ...]:
    """The largest-norm primes of the engine lower bound, ties in prime order."""

    primes = sorted(
        (prime for prime, _ in lower_bound(n).lower.factors),
        key=lambda p: (-p.norm(), prime_sort_key(p)),
    )
    if SearchMode(mode) is SearchMode.SYM_ODD:
        return tuple(p for p in primes if p.norm() % 2)[:1]
    return tuple(primes[:2])


_PRIME_TEXT = re.compile(r"\(\s*[+-]?\d+\s*,\s*[+-]?\d+\s*\)")


def resolve_sieve_primes(option: str, n: int, mode: SearchMode) -> Tuple[GaussianInt, ...]:
    """Interpret ``auto``, ``none`` or an explicit ``(a,b),(c,d)`` list."""

    text = option.strip()
    if text == "auto":
        return auto_sieve_primes(n, mode)
    if text in ("none", ""):
        return ()
    items = _PRIME_TEXT.findall(text)
    if not items or _PRIME_TEXT.sub("", text).replace(",", "").strip():
        raise SearchConfigError(f"malformed sieve option {option!r}")
    return tuple(GaussianInt.parse(item) for item in items)


def unsound_sieve_primes(cfg: SearchConfig) -> Tuple[GaussianInt, ...]:
    """Sieve primes that do not divide the engine lower bound for ``cfg.n``."""

    lower = lower_bound(cfg.n).lower
    return tuple(q for q in cfg.sieve_primes if lower.exponent(q) == 0)


def effective_sieve_primes(cfg: SearchConfig) -> Tuple[GaussianInt, ...]:
    """The primes the stream actually applies; sym-odd keeps one prime of odd norm."""

    if cfg.mode is SearchMode.SYM_ODD:
        if cfg.sieve_primes and cfg.sieve_primes[0].norm() % 2:
            return cfg.sieve_primes[:1]
        return ()
    return cfg.sieve_primes


def check_sieve_primes(cfg: SearchConfig) -> None:
    """Log the cases where the sieve weakens or drops out."""

    for q in unsound_sieve_primes(cfg):
        logger.warning(
            "sieve prime %s does not divide the lower bound for n=%d; completeness is no longer guaranteed",
            q,
            cfg.n,
        )
    if cfg.mode is SearchMode.SYM_ODD and cfg.sieve_primes:
        if not effective_sieve_primes(cfg):
            logger.warning("sym-odd sieve needs a prime of odd norm; sieving disabled")
        elif len(cfg.sieve_primes) > 1:
            logger.info("sym-odd sieve uses only %s", cfg.sieve_primes[0])


# Grid orders ------------------------------------------------------------------


def _rank_order(points: Sequence[GaussianInt]) -> Tuple[GaussianInt, ...]:
    # canonical points first so that a sorted tuple can start with one
    return tuple(sorted(points, key=lambda z: (not z.is_canonical(), z.sort_key())))


def is_half_plane(z: GaussianInt) -> bool:
    return z.re > 0 or (z.re == 0 and z.im >= 0)


@lru_cache(maxsize=16)
def _orders(box: int) -> Dict[str, Tuple[GaussianInt, ...]]:
    grid = candidate_grid(box)
    return {
        "all": _rank_order(grid),
        "nonzero": _rank_order([z for z in grid if z]),
        "bases": _rank_order([z for z in grid if is_half_plane(z)]),
    }


def _first_values(cfg: SearchConfig, chunk: Chunk) -> List[GaussianInt]:
    grid = candidate_grid(cfg.box)
    return [z for z in grid[chunk.start : chunk.stop] if z.is_canonical()]


class _ResidueIndex:
    """Residues of ``value(z)`` modulo ``q`` for every point, plus the inverse index."""

    def __init__(
        self,
        q: GaussianInt,
        points: Sequence[GaussianInt],
        value: Callable[[GaussianInt], GaussianInt],
    ) -> None:
        self.q = q
        self.of: Dict[GaussianInt, Residue] = {}
        self.groups: Dict[Residue, List[GaussianInt]] = defaultdict(list)
        for z in points:
            key = self.residue(value(z))
            self.of[z] = key
            self.groups[key].append(z)

    def residue(self, w: GaussianInt) -> Residue:
        r = divrem(w, self.q)[1]
        return (r.re, r.im)

    def matching(self, w: GaussianInt) -> List[GaussianInt]:
        return self.groups.get(self.residue(w), [])


def _identity(z: GaussianInt) -> GaussianInt:
    return z


def _square(z: GaussianInt) -> GaussianInt:
    return z * z


# Paired enumeration (general and sym-even with a sieve) ------------------------


class _PairedStream:
    """Ordered enumeration ``x_0, y_0, x_1, y_1, ...`` with congruence pruning."""

    def __init__(
        self,
        nx: int,
        ny: int,
        points: Sequence[GaussianInt],
        x0_choices: Sequence[GaussianInt],
        y0_allowed: Sequence[GaussianInt] | None,
        value: Callable[[GaussianInt], GaussianInt],
        primes: Sequence[GaussianInt],
        *,
        least_first: bool = False,
    ) -> None:
        self.nx = nx
        self.ny = ny
        self.points = tuple(points)
        self.x0_choices = tuple(x0_choices)
        self.y0_allowed = None if y0_allowed is None else frozenset(y0_allowed)
        self.value: Mapping[GaussianInt, GaussianInt] = {z: value(z) for z in self.points}
        self.norms: Mapping[GaussianInt, int] = {z: z.norm() for z in self.points}
        self.least_first = least_first
        self.first = _ResidueIndex(primes[0], self.points, value) if primes else None
        self.second = _ResidueIndex(primes[1], self.points, value) if len(primes) > 1 else None

    def __iter__(self) -> Iterator[Prefix]:
        return self._extend([], [], ZERO)

    def _floor(self, xs: List[GaussianInt]) -> int:
        return self.norms[xs[0]] if self.least_first and xs else 0

    def _y_candidates(self, xs: List[GaussianInt], ys: List[GaussianInt]) -> Sequence[GaussianInt]:
        index = len(ys)
        if self.first is not None and index < len(xs):
            candidates: Sequence[GaussianInt] = self.first.groups.get(self.first.of[xs[index]], [])
        else:
            candidates = self.points
        if index == 0 and self.y0_allowed is not None:
            candidates = [y for y in candidates if y in self.y0_allowed]
        return candidates

    def _x_candidates(
        self, xs: List[GaussianInt], ys: List[GaussianInt], running: GaussianInt
    ) -> Sequence[GaussianInt]:
        index = len(xs)
        if index == 0:
            return self.x0_choices
        if self.second is not None and index - 1 < len(ys) and not divides(self.second.q, running):
            return self.second.groups.get(self.second.of[ys[index - 1]], [])
        return self.points

    def _extend(
        self, xs: List[GaussianInt], ys: List[GaussianInt], running: GaussianInt
    ) -> Iterator[Prefix]:
        if len(xs) == self.nx and len(ys) == self.ny:
            yield Prefix(tuple(xs), tuple(ys))
            return
        value = self.value
        norms = self.norms
        floor = self._floor(xs)
        if len(ys) < self.ny and (len(ys) < len(xs) or len(xs) == self.nx):
            x_values = {value[x] for x in xs}
            y_values = {value[y] for y in ys}
            paired = len(ys) < len(xs)
            for y in self._y_candidates(xs, ys):
                w = value[y]
                if w in y_values or w in x_values or 0 < norms[y] < floor:
                    continue
                ys.append(y)
                step = running + (value[xs[len(ys) - 1]] - w) if paired else running
                yield from self._extend(xs, ys, step)
                ys.pop()
        else:
            y_values = {value[y] for y in ys}
            for x in self._x_candidates(xs, ys, running):
                if value[x] in y_values or 0 < norms[x] < floor:
                    continue
                xs.append(x)
                yield from self._extend(xs, ys, running)
                xs.pop()


# Mode streams -------------------------------------------------------------------


def _general_stream(cfg: SearchConfig, chunk: Chunk) -> Iterator[Prefix]:
    assert cfg.k is not None
    nx, ny = cfg.n - cfg.k + 1, cfg.k
    orders = _orders(cfg.box)
    first = _first_values(cfg, chunk)
    primes = effective_sieve_primes(cfg)
    if primes:
        yield from _PairedStream(nx, ny, orders["all"], (ZERO,), first, _identity, primes)
        return

    grid = orders["all"]
    rank = {z: i for i, z in enumerate(grid)}
    for y0 in first:
        later = grid[rank[y0] + 1 :]
        for rest in combinations_with_replacement(grid, nx - 1):
            xs = (ZERO,) + rest
            if y0 in xs:
                continue
            pool = [y for y in later if y not in xs]
            for more in combinations(pool, ny - 1):
                yield Prefix(xs, (y0,) + more)


def _sym_even_stream(cfg: SearchConfig, chunk: Chunk) -> Iterator[Prefix]:
    assert cfg.k is not None
    m = cfg.n // 2
    nx, ny = m - cfg.k + 1, cfg.k
    bases = _orders(cfg.box)["bases"]
    first = _first_values(cfg, chunk)
    primes = effective_sieve_primes(cfg)
    if primes:
        yield from _PairedStream(nx, ny, bases, first, None, _square, primes, least_first=True)
        return

    rank = {z: i for i, z in enumerate(bases)}
    for x0 in first:
        for rest in combinations_with_replacement(bases[rank[x0] :], nx - 1):
            xs = (x0,) + rest
            squares = {x * x for x in xs}
            pool = [y for y in bases if y * y not in squares]
            for ys in combinations(pool, ny):
                yield Prefix(xs, ys)


def _sym_odd_sieved(
    count: int, points: Sequence[GaussianInt], first: Sequence[GaussianInt], q: GaussianInt
) -> Iterator[Prefix]:
    index = _ResidueIndex(q, points, _identity)
    norms = {z: z.norm() for z in points}

    def extend(xs: List[GaussianInt], running: GaussianInt) -> Iterator[Prefix]:
        if len(xs) == count:
            yield Prefix(tuple(xs), ())
            return
        if divides(q, running):
            candidates: Sequence[GaussianInt] = points
        else:
            candidates = index.matching(-xs[-1])
        taken = set(xs) | {-x for x in xs}
        floor = norms[xs[0]]
        for x in candidates:
            if x in taken or norms[x] < floor:
                continue
            xs.append(x)
            yield from extend(xs, running + x)
            xs.pop()

    for x0 in first:
        yield from extend([x0], x0)


def _sym_odd_stream(cfg: SearchConfig, chunk: Chunk) -> Iterator[Prefix]:
    count = (cfg.n - 1) // 2 + 1
    points = _orders(cfg.box)["nonzero"]
    first = _first_values(cfg, chunk)
    primes = effective_sieve_primes(cfg)
    if primes:
        yield from _sym_odd_sieved(count, points, first, primes[0])
        return

    rank = {z: i for i, z in enumerate(points)}
    for x0 in first:
        later = [z for z in points[rank[x0] + 1 :] if z != -x0]
        for rest in combinations(later, count - 1):
            members = set(rest)
            if any(-z in members for z in rest):
                continue
            yield Prefix((x0,) + rest, ())


def sieve_stream(cfg: SearchConfig, chunk: Chunk) -> Iterator[Prefix]:
    """Stream the prefixes of ``chunk`` in enumeration order."""

    if cfg.mode is SearchMode.GENERAL:
        return _general_stream(cfg, chunk)
    if cfg.mode is SearchMode.SYM_EVEN:
        return _sym_even_stream(cfg, chunk)
    return _sym_odd_stream(cfg, chunk)


# Orderings of known solutions -------------------------------------------------


def _residue(z: GaussianInt, q: GaussianInt) -> GaussianInt:
    return divrem(z, q)[1]


def cycle_order(
    x: Sequence[GaussianInt],
    y: Sequence[GaussianInt],
    q1: GaussianInt,
    q2: GaussianInt | None = None,
    *,
    start: int = 0,
) -> Tuple[Tuple[GaussianInt, ...], Tuple[GaussianInt, ...]]:
    """Reorder a solution so that the sieve congruences hold along the listing.

    ``start`` selects the ``x`` that comes first.
    """

    buckets: Dict[GaussianInt, List[GaussianInt]] = defaultdict(list)
    for v in y:
        buckets[_residue(v, q1)].append(v)
    pairs = []
    for v in x:
        bucket = buckets.get(_residue(v, q1))
        if not bucket:
            raise PrefixError(f"{v} has no partner modulo {q1}")
        pairs.append((v, bucket.pop(0)))
    if q2 is None:
        ordered = pairs[start:] + pairs[:start]
        return tuple(p[0] for p in ordered), tuple(p[1] for p in ordered)

    by_x: Dict[GaussianInt, List[int]] = defaultdict(list)
    for index, (v, _) in enumerate(pairs):
        by_x[_residue(v, q2)].append(index)
    successor = []
    for _, w in pairs:
        bucket = by_x.get(_residue(w, q2))
        if not bucket:
            raise PrefixError(f"{w} has no partner modulo {q2}")
        successor.append(bucket.pop(0))

    order: List[int] = []
    seen = set()
    for origin in [start] + list(range(len(pairs))):
        index = origin
        while index not in seen:
            seen.add(index)
            order.append(index)
            index = successor[index]
    return tuple(pairs[i][0] for i in order), tuple(pairs[i][1] for i in order)


def sym_odd_cycle_order(
    x: Sequence[GaussianInt], q: GaussianInt, *, start: int = 0
) -> Tuple[GaussianInt, ...]:
    """Order ``x`` so that ``x_{i+1} = -x_i (mod q)`` until a cycle closes."""

    by_residue: Dict[GaussianInt, List[int]] = defaultdict(list)
    for index, v in enumerate(x):
        by_residue[_residue(v, q)].append(index)
    successor = []
    for v in x:
        bucket = by_residue.get(_residue(-v, q))
        if not bucket:
            raise PrefixError(f"{v} has no partner modulo {q}")
        successor.append(bucket.pop(0))
    order: List[int] = []
    seen = set()
    for origin in [start] + list(range(len(x))):
        index = origin
        while index not in seen:
            seen.add(index)
            order.append(index)
            index = successor[index]
    return tuple(x[i] for i in order)


def admissible(cfg: SearchConfig, prefix: Prefix) -> bool:
    """``True`` when the stream yields ``prefix`` from the grid position of its first value."""

    grid = candidate_grid(cfg.box)
    first_value = prefix.ys[0] if cfg.mode is SearchMode.GENERAL else prefix.xs[0]
    if first_value not in grid:
        return False
    position = grid.index(first_value)
    single = Chunk(chunk_id=0, start=position, stop=position + 1)
    return any(candidate == prefix for candidate in sieve_stream(cfg, single))


__all__ = [
    "Prefix",
    "PrefixError",
    "admissible",
    "auto_sieve_primes",
    "check_sieve_primes",
    "cycle_order",
    "effective_sieve_primes",
    "is_half_plane",
    "resolve_sieve_primes",
    "sieve_stream",
    "sym_odd_cycle_order",
    "unsound_sieve_primes",
]
