from __future__ import annotations

import pytest

from gaussian_pte.gint import GaussianInt, GaussianRational
from gaussian_pte.pte import (
    AffineMap,
    PteSolution,
    SolutionError,
    affine_apply,
    conjugate_solution,
    equivalence_key,
    equivalent,
    parse_solution,
    translate,
)


def g(re: int, im: int = 0) -> GaussianInt:
    return GaussianInt(re, im)


def _maps_onto(a: PteSolution, b: PteSolution) -> bool:
    f = equivalent(a, b)
    if f is None:
        return False
    image = affine_apply(a, f)
    return image == b or image == b.swapped()


def test_translated_and_rotated_copies_are_equivalent(worked_example: PteSolution) -> None:
    moved = affine_apply(worked_example, AffineMap(GaussianRational(g(1, 1)), GaussianRational(g(2, -3))))
    assert _maps_onto(worked_example, moved)
    assert _maps_onto(moved, worked_example)
    assert equivalence_key(moved) == equivalence_key(worked_example)


def test_swapping_sides_is_part_of_the_equivalence(worked_example: PteSolution) -> None:
    assert _maps_onto(worked_example, worked_example.swapped())
    assert equivalence_key(worked_example.swapped()) == equivalence_key(worked_example)


def test_scaled_integer_solutions_are_equivalent() -> None:
    small = parse_solution("n=3; X=(0,0),(3,0),(3,0); Y=(1,0),(1,0),(4,0)")
    doubled = parse_solution("n=3; X=(0,0),(6,0),(6,0); Y=(2,0),(2,0),(8,0)")
    f = equivalent(small, doubled)
    assert f is not None and f.m == 2


def test_constants_off_by_a_non_cube_are_inequivalent(worked_example: PteSolution) -> None:
    other = parse_solution("n=3; X=(0,0),(5,0),(7,0); Y=(1,0),(3,0),(8,0)")
    assert equivalent(worked_example, other) is None
    assert equivalence_key(worked_example) != equivalence_key(other)


def test_published_size_five_solutions_are_inequivalent(corpus_by_id: dict) -> None:
    a, b = corpus_by_id["gauss-5a"], corpus_by_id["gauss-5b"]
    assert equivalent(a, b) is None
    assert _maps_onto(a, translate(a, g(4, 4)))


def test_conjugates_are_not_identified(corpus_by_id: dict) -> None:
    s = corpus_by_id["gauss-7"]
    mirrored = conjugate_solution(s)
    assert equivalent(s, mirrored) is None
    assert equivalence_key(s) != equivalence_key(mirrored)


def test_size_mismatch_is_an_error(worked_example: PteSolution, corpus_by_id: dict) -> None:
    with pytest.raises(SolutionError):
        equivalent(worked_example, corpus_by_id["gauss-4"])
