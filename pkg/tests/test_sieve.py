from __future__ import annotations

import logging
from collections import Counter
from typing import List, Sequence, Tuple

import pytest

from gaussian_pte.gint import GaussianInt, divides
from gaussian_pte.pte import PteSolution
from gaussian_pte.search import (
    Chunk,
    Prefix,
    PrefixError,
    SearchConfig,
    SearchConfigError,
    SearchMode,
    admissible,
    auto_sieve_primes,
    complete,
    cycle_order,
    plan_chunks,
    resolve_sieve_primes,
    sieve_stream,
    sym_odd_cycle_order,
)
from gaussian_pte.search.sieve import (
    check_sieve_primes,
    effective_sieve_primes,
    is_half_plane,
    unsound_sieve_primes,
)


def g(re: int, im: int = 0) -> GaussianInt:
    return GaussianInt(re, im)


def _bases(values: Sequence[GaussianInt]) -> List[GaussianInt]:
    """Half-plane representatives of a multiset of the form ``{±b}``."""

    counts = Counter(values)
    bases = [v for v in values if v and is_half_plane(v)]
    return bases + [g(0)] * (counts[g(0)] // 2)


def _paired_order(
    x: Sequence[GaussianInt], y: Sequence[GaussianInt], q1: GaussianInt, q2: GaussianInt
) -> None:
    running = g(0)
    for i, (a, b) in enumerate(zip(x, y)):
        assert divides(q1, a - b)
        running = running + (a - b)
        if i + 1 < len(x):
            assert divides(q2, running) or divides(q2, x[i + 1] - b)


# Sieve primes -----------------------------------------------------------------


def test_auto_sieve_primes() -> None:
    assert auto_sieve_primes(10, SearchMode.GENERAL) == (g(3, 2), g(3, -2))
    assert auto_sieve_primes(5, SearchMode.GENERAL) == (g(2, 1), g(2, -1))
    assert auto_sieve_primes(3, SearchMode.GENERAL) == (g(1, 1),)
    assert auto_sieve_primes(4, SearchMode.SYM_EVEN) == ()
    assert auto_sieve_primes(5, SearchMode.SYM_ODD) == (g(2, 1),)
    assert auto_sieve_primes(3, SearchMode.SYM_ODD) == ()


def test_resolve_sieve_option() -> None:
    assert resolve_sieve_primes("auto", 10, SearchMode.SYM_EVEN) == (g(3, 2), g(3, -2))
    assert resolve_sieve_primes("none", 10, SearchMode.SYM_EVEN) == ()
    assert resolve_sieve_primes(" (2,1), (2,-1) ", 5, SearchMode.GENERAL) == (g(2, 1), g(2, -1))
    for bad in ("(2,1);(2,-1)", "bogus", "(2,1),x"):
        with pytest.raises(SearchConfigError):
            resolve_sieve_primes(bad, 5, SearchMode.GENERAL)


def test_unsound_primes_are_reported(caplog: pytest.LogCaptureFixture) -> None:
    cfg = SearchConfig(n=5, box=1, sieve_primes=(g(3),))
    assert unsound_sieve_primes(cfg) == (g(3),)
    with caplog.at_level(logging.WARNING, logger="gaussian_pte.search.sieve"):
        check_sieve_primes(cfg)
    assert "completeness is no longer guaranteed" in caplog.text


def test_sym_odd_keeps_one_prime_of_odd_norm(caplog: pytest.LogCaptureFixture) -> None:
    odd_first = SearchConfig(n=5, mode="sym-odd", box=1, sieve_primes=(g(2, 1), g(1, 1)))
    assert effective_sieve_primes(odd_first) == (g(2, 1),)
    even_first = SearchConfig(n=5, mode="sym-odd", box=1, sieve_primes=(g(1, 1),))
    assert effective_sieve_primes(even_first) == ()
    with caplog.at_level(logging.WARNING, logger="gaussian_pte.search.sieve"):
        check_sieve_primes(even_first)
    assert "sieving disabled" in caplog.text


# Streams ------------------------------------------------------------------------


def _all_prefixes(cfg: SearchConfig) -> List[Prefix]:
    return [p for chunk in plan_chunks(cfg) for p in sieve_stream(cfg, chunk)]


def test_general_sieved_stream_respects_the_pairing() -> None:
    q = g(1, 1)
    cfg = SearchConfig(n=3, box=2, sieve_primes=(q,))
    prefixes = _all_prefixes(cfg)
    assert prefixes
    for p in prefixes:
        assert p.xs[0] == 0 and len(p.xs) == 2 and len(p.ys) == 2
        assert p.ys[0].is_canonical()
        assert all(divides(q, x - y) for x, y in zip(p.xs, p.ys))
        assert len(set(p.ys)) == 2 and not set(p.xs) & set(p.ys)


def test_general_unsieved_stream_lists_sorted_prefixes() -> None:
    cfg = SearchConfig(n=3, box=1)
    prefixes = _all_prefixes(cfg)
    assert len(prefixes) == len(set(prefixes))
    for p in prefixes:
        assert p.xs[0] == 0
        assert p.ys[0].is_canonical()


def test_chunks_partition_the_stream() -> None:
    single = SearchConfig(n=3, box=2, sieve_primes=(g(1, 1),))
    split = SearchConfig(n=3, box=2, sieve_primes=(g(1, 1),), chunk_count=5)
    assert Counter(_all_prefixes(single)) == Counter(_all_prefixes(split))


def test_sym_odd_stream_values() -> None:
    cfg = SearchConfig(n=5, mode="sym-odd", box=2, sieve_primes=(g(2, 1),))
    prefixes = _all_prefixes(cfg)
    assert prefixes
    for p in prefixes:
        assert p.ys == () and len(p.xs) == 3
        assert p.xs[0].is_canonical()
        squares = {x * x for x in p.xs}
        assert len(squares) == 3 and all(p.xs)


def test_sym_even_stream_uses_half_plane_bases() -> None:
    cfg = SearchConfig(n=6, mode="sym-even", box=1)
    for p in _all_prefixes(cfg):
        assert all(is_half_plane(v) for v in p.xs + p.ys)
        assert p.xs[0].is_canonical()
        assert not {x * x for x in p.xs} & {y * y for y in p.ys}


@pytest.mark.parametrize(
    "cfg",
    [
        SearchConfig(n=5, mode="sym-odd", box=3, sieve_primes=(g(2, 1),)),
        SearchConfig(n=6, mode="sym-even", box=2, sieve_primes=(g(2, 1), g(2, -1))),
    ],
)
def test_sieved_symmetric_streams_start_at_the_least_norm(cfg: SearchConfig) -> None:
    prefixes = _all_prefixes(cfg)
    assert prefixes
    for p in prefixes:
        floor = p.xs[0].norm()
        assert all(v.norm() >= floor for v in p.xs + p.ys if v)


def test_least_norm_rule_keeps_swapped_solutions_reachable(corpus_by_id: dict) -> None:
    s = corpus_by_id["gauss-8-sym"]
    q1, q2 = g(2, 1), g(2, -1)
    cfg = SearchConfig(n=8, mode="sym-even", box=3, sieve_primes=(q1, q2))
    as_listed, _, _ = _sym_even_prefix(s, q1, q2, cfg.k)
    assert not admissible(cfg, as_listed)
    swapped, _, _ = _sym_even_prefix(s.swapped(), q1, q2, cfg.k)
    assert admissible(cfg, swapped)


def test_empty_chunk_streams_nothing() -> None:
    cfg = SearchConfig(n=3, box=1)
    assert list(sieve_stream(cfg, Chunk(chunk_id=0, start=9, stop=9))) == []


# Orderings of known solutions ---------------------------------------------------


def test_worked_example_is_admissible(worked_example: PteSolution) -> None:
    q = g(1, 1)
    shifted_x = tuple(v - 1 for v in worked_example.x)
    shifted_y = tuple(v - 1 for v in worked_example.y)
    xs, ys = cycle_order(shifted_x, shifted_y, q)
    assert xs[0] == 0
    cfg = SearchConfig(n=3, box=6, sieve_primes=(q,))
    prefix = Prefix(xs[:2], ys[:2])
    assert admissible(cfg, prefix)
    assert not admissible(cfg, Prefix((g(0), g(4)), (g(1), g(6))))
    assert complete(cfg, prefix) == PteSolution(x=shifted_x, y=shifted_y)


def test_cycle_order_rejects_unpaired_values() -> None:
    with pytest.raises(PrefixError):
        cycle_order((g(0), g(1)), (g(0), g(2)), g(1, 1))


def test_size_five_general_solution_from_its_cycle_order(corpus_by_id: dict) -> None:
    s = corpus_by_id["gauss-5a"]
    q1, q2 = g(2, 1), g(2, -1)
    xs, ys = cycle_order(s.x, s.y, q1, q2, start=s.x.index(g(0)))
    assert xs[0] == 0
    assert Counter(xs) == Counter(s.x) and Counter(ys) == Counter(s.y)
    _paired_order(xs, ys, q1, q2)
    cfg = SearchConfig(n=5, box=8, sieve_primes=(q1, q2))
    assert complete(cfg, Prefix(xs[:3], ys[:3])) == s


def test_size_five_odd_symmetric_solution_is_admissible(corpus_by_id: dict) -> None:
    s = corpus_by_id["gauss-5-sym"]
    q = g(2, 1)
    ordered = sym_odd_cycle_order(s.x, q, start=s.x.index(g(3, 3)))
    assert ordered[0] == g(3, 3)
    for i in range(len(ordered) - 1):
        running = sum(ordered[: i + 1], g(0))
        assert divides(q, running) or divides(q, ordered[i + 1] + ordered[i])
    cfg = SearchConfig(n=5, mode="sym-odd", box=8, sieve_primes=(q,))
    prefix = Prefix(ordered[:3], ())
    assert admissible(cfg, prefix)
    assert complete(cfg, prefix) == s


def _sym_even_prefix(
    s: PteSolution, q1: GaussianInt, q2: GaussianInt, split: int
) -> Tuple[Prefix, List[GaussianInt], List[GaussianInt]]:
    x_bases, y_bases = _bases(s.x), _bases(s.y)
    by_square = {b * b: b for b in x_bases + y_bases}
    start = next(i for i, b in enumerate(x_bases) if b.is_canonical())
    wx, wy = cycle_order([b * b for b in x_bases], [b * b for b in y_bases], q1, q2, start=start)
    m = len(x_bases)
    nx = m - split + 1
    prefix = Prefix(tuple(by_square[w] for w in wx[:nx]), tuple(by_square[w] for w in wy[:split]))
    return prefix, list(wx), list(wy)


def test_size_eight_even_symmetric_solution_is_admissible(corpus_by_id: dict) -> None:
    # the base of least norm, (1,0), sits on the y side
    s = corpus_by_id["gauss-8-sym"].swapped()
    q1, q2 = g(2, 1), g(2, -1)
    cfg = SearchConfig(n=8, mode="sym-even", box=3, sieve_primes=(q1, q2))
    prefix, wx, wy = _sym_even_prefix(s, q1, q2, cfg.k)
    _paired_order(wx, wy, q1, q2)
    assert prefix.xs[0].is_canonical()
    assert admissible(cfg, prefix)
    assert complete(cfg, prefix) == s


@pytest.mark.parametrize("entry_id", ["gauss-10a", "gauss-10b"])
def test_size_ten_solutions_survive_the_automatic_sieve(corpus_by_id: dict, entry_id: str) -> None:
    s = corpus_by_id[entry_id]
    q1, q2 = auto_sieve_primes(10, SearchMode.SYM_EVEN)
    cfg = SearchConfig(n=10, mode="sym-even", box=11, sieve_primes=(q1, q2))
    prefix, wx, wy = _sym_even_prefix(s, q1, q2, cfg.k)
    _paired_order(wx, wy, q1, q2)
    assert complete(cfg, prefix) == s
