from __future__ import annotations

from gaussian_pte.gint import GaussianInt, GaussianRational
from gaussian_pte.pte import AffineMap, PteSolution, affine_apply, conjugate_solution, parse_solution
from gaussian_pte.search import conjugate_pairs, dedup_canonical


def test_equivalent_copies_collapse_to_one(worked_example: PteSolution) -> None:
    moved = affine_apply(
        worked_example, AffineMap(GaussianRational(GaussianInt(1, 1)), GaussianRational(GaussianInt(2, -3)))
    )
    other = parse_solution("n=3; X=(0,0),(5,0),(7,0); Y=(1,0),(3,0),(8,0)")
    kept = dedup_canonical([moved, other, worked_example])
    assert len(kept) == 2
    assert worked_example in kept and other in kept


def test_representatives_are_sorted(worked_example: PteSolution) -> None:
    other = parse_solution("n=3; X=(0,0),(5,0),(7,0); Y=(1,0),(3,0),(8,0)")
    assert dedup_canonical([worked_example, other]) == sorted(
        [worked_example, other], key=PteSolution.sort_key
    )
    assert dedup_canonical([]) == []


def test_conjugate_classes_are_paired(corpus_by_id: dict, worked_example: PteSolution) -> None:
    s = corpus_by_id["gauss-7"]
    kept = dedup_canonical([s, conjugate_solution(s), worked_example])
    assert len(kept) == 3
    pairs = conjugate_pairs(kept)
    assert len(pairs) == 1
    i, j = pairs[0]
    assert i < j
    assert {kept[i], kept[j]} == {s, conjugate_solution(s)}
