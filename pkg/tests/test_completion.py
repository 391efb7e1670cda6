from __future__ import annotations

import pytest

from gaussian_pte.gint import GaussianInt, GaussianRational
from gaussian_pte.pte import PteSolution, constant
from gaussian_pte.search import (
    Prefix,
    PrefixError,
    SearchConfig,
    SearchInconsistencyError,
    complete,
    complete_general,
    complete_sym_even,
    complete_sym_odd,
)
from gaussian_pte.search import completion as completion_module
from gaussian_pte.search.sieve import is_half_plane
from gaussian_pte.symfunc import Polynomial, gaussian_roots, lagrange_interpolate, poly_from_roots


def g(re: int, im: int = 0) -> GaussianInt:
    return GaussianInt(re, im)


def test_worked_completion_trace(worked_example: PteSolution) -> None:
    result = complete_general(Prefix((g(1), g(5)), (g(2), g(3))), 3)
    assert result == worked_example
    assert constant(result) == 12


def test_worked_completion_intermediates(worked_example: PteSolution) -> None:
    known = poly_from_roots([g(1), g(5)])
    ys = [g(2), g(3)]
    values = [GaussianRational(g(1)) / known(y) for y in ys]
    assert values == [GaussianRational(g(-1), 3), GaussianRational(g(-1), 4)]

    f = lagrange_interpolate(list(zip(ys, values)))
    assert f == Polynomial.linear_root(6) * GaussianRational(g(1), 12)
    c = f.leading.reciprocal()
    assert c == 12
    assert gaussian_roots(f * c) == [(g(6), 1)]

    rest, remainder = divmod(known * Polynomial.linear_root(6) - c, poly_from_roots(ys))
    assert remainder.is_zero()
    assert rest == Polynomial.linear_root(7)
    assert complete_general(Prefix((g(1), g(5)), tuple(ys)), 3) == worked_example


def test_prefix_with_a_non_integral_constant_is_dropped() -> None:
    # 1 / (1/(-4) + 1/24) is not integral
    assert complete_general(Prefix((g(0), g(1)), (g(2), g(4))), 3) is None


@pytest.mark.parametrize(
    "prefix",
    [
        Prefix((g(1),), (g(2), g(3))),
        Prefix((g(1), g(5)), (g(2), g(2))),
        Prefix((g(1), g(5)), (g(1), g(3))),
    ],
)
def test_general_prefix_preconditions(prefix: Prefix) -> None:
    with pytest.raises(PrefixError):
        complete_general(prefix, 3)


def test_odd_symmetric_reconstruction(corpus_by_id: dict) -> None:
    prefix = Prefix((g(3, 3), g(3, 4), g(3, 5)), ())
    result = complete_sym_odd(prefix, 5)
    assert result == corpus_by_id["gauss-5-sym"]
    assert constant(result) == g(2040, 16320)


def test_odd_symmetric_prefix_preconditions() -> None:
    with pytest.raises(PrefixError):
        complete_sym_odd(Prefix((g(3, 3), g(3, 4)), ()), 5)
    with pytest.raises(PrefixError):
        complete_sym_odd(Prefix((g(3, 3), g(0), g(3, 5)), ()), 5)
    with pytest.raises(PrefixError):
        complete_sym_odd(Prefix((g(3, 3), g(-3, -3), g(3, 5)), ()), 5)


def test_even_symmetric_reconstruction_of_the_size_four_solution(corpus_by_id: dict) -> None:
    result = complete_sym_even(Prefix((g(1), g(0, 1)), (g(0),)), 4)
    assert result == corpus_by_id["gauss-4"].swapped()
    assert constant(result) == -1


def test_dispatch_follows_the_mode(worked_example: PteSolution) -> None:
    cfg = SearchConfig(n=3, box=2)
    assert complete(cfg, Prefix((g(1), g(5)), (g(2), g(3)))) == worked_example
    odd = SearchConfig(n=5, mode="sym-odd", box=5)
    assert complete(odd, Prefix((g(3, 3), g(3, 4), g(3, 5)), ())) is not None


def test_failed_verification_is_an_inconsistency(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(completion_module, "verify_degree", lambda s: 0)
    with pytest.raises(SearchInconsistencyError):
        complete_general(Prefix((g(1), g(5)), (g(2), g(3))), 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_general_completion_recovers_a_size_five_solution(k: int, corpus_by_id: dict) -> None:
    solution = corpus_by_id["gauss-5a"]
    prefix = Prefix(tuple(solution.x[: 6 - k]), tuple(solution.y[:k]))
    assert complete_general(prefix, 5) == solution


def test_even_symmetric_completion_through_square_roots(corpus_by_id: dict) -> None:
    solution = corpus_by_id["gauss-6-sym"]
    bases_x = sorted({v for v in solution.x if is_half_plane(v)}, key=GaussianInt.sort_key)
    bases_y = sorted({v for v in solution.y if is_half_plane(v)}, key=GaussianInt.sort_key)
    result = complete_sym_even(Prefix(tuple(bases_x[:2]), tuple(bases_y[:2])), 6)
    assert result == solution
