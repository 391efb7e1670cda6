from __future__ import annotations

import pytest

from gaussian_pte.gint import GaussianInt, GaussianRational
from gaussian_pte.pte import (
    AffineMap,
    NonIntegralImageError,
    NotIdealError,
    PteSolution,
    SolutionError,
    SolutionParseError,
    affine_apply,
    conjugate_solution,
    constant,
    emit_solutions,
    falling_factorial_check,
    format_solution,
    goldbach_family,
    is_ideal,
    pairing_mod_q,
    parse_solution,
    parse_solutions,
    translate,
    verify_degree,
)


def g(re: int, im: int = 0) -> GaussianInt:
    return GaussianInt(re, im)


def test_worked_example_is_ideal_with_constant_twelve(worked_example: PteSolution) -> None:
    assert worked_example.n == 3
    assert verify_degree(worked_example) == 2
    assert is_ideal(worked_example)
    assert constant(worked_example) == 12
    assert constant(worked_example.swapped()) == -12
    assert falling_factorial_check(worked_example, 2)


def test_translation_keeps_the_constant(worked_example: PteSolution) -> None:
    shifted = translate(worked_example, g(5, -2))
    assert verify_degree(shifted) == 2
    assert constant(shifted) == 12


def test_scaling_multiplies_the_constant_by_a_power(worked_example: PteSolution) -> None:
    rotated = affine_apply(worked_example, AffineMap(GaussianRational(g(0, 1))))
    assert constant(rotated) == g(0, -12)
    with pytest.raises(NonIntegralImageError):
        affine_apply(worked_example, AffineMap(GaussianRational(g(1), 2)))


def test_conjugation_conjugates_the_constant(corpus_by_id: dict) -> None:
    s = corpus_by_id["gauss-5a"]
    assert constant(conjugate_solution(s)) == constant(s).conjugate()


def test_pairing_modulo_primes_dividing_the_constant(worked_example: PteSolution) -> None:
    assert pairing_mod_q(worked_example, 3)
    assert pairing_mod_q(worked_example, g(1, 1))
    assert not pairing_mod_q(worked_example, 5)


def test_goldbach_family_has_degree_two(corpus_by_id: dict) -> None:
    s = goldbach_family(1, 2, 4, 0)
    assert s == corpus_by_id["goldbach-int"]
    assert verify_degree(s) == 2
    assert not is_ideal(s)
    with pytest.raises(NotIdealError):
        constant(s)
    gaussian = goldbach_family(g(1, 1), g(2, -1), g(0, 3), 1)
    assert gaussian == corpus_by_id["goldbach-gaussian"]
    assert verify_degree(gaussian) >= 2


def test_solution_model_validation() -> None:
    with pytest.raises(SolutionError):
        PteSolution(x=(g(1), g(2)), y=(g(3),))
    with pytest.raises(SolutionError):
        PteSolution(x=(g(1),), y=(g(2),))
    with pytest.raises(SolutionError):
        PteSolution(x=(g(1), g(2)), y=(g(2), g(1)))
    with pytest.raises(SolutionError):
        PteSolution(x=(g(1), g(2)), y=(g(0), g(3)), claimed_degree=2)


def test_multisets_are_stored_in_canonical_order() -> None:
    s = PteSolution(x=(g(6), g(1), g(5)), y=(g(7), g(3), g(2)))
    assert s.x == (g(1), g(5), g(6))
    assert s.claimed_degree == 2 and s.claims_ideal


def test_parse_and_format_lines() -> None:
    s = parse_solution("n=4; k=2; X=(6,0),(5,0),(3,0),(0,0); Y=(1,0),(2,0),(4,0),(7,0)")
    assert s.claimed_degree == 2
    assert format_solution(s) == "n=4; k=2; X=(0,0),(3,0),(5,0),(6,0); Y=(1,0),(2,0),(4,0),(7,0)"
    ideal = parse_solution("n=3;X=(1,0),(5,0),(6,0);Y=(2,0),(3,0),(7,0)")
    assert format_solution(ideal) == "n=3; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0)"


@pytest.mark.parametrize(
    "line",
    [
        "n=3; X=(1,0),(5,0),(6,0)",
        "n=3; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0); X=(1,0)",
        "n=4; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0)",
        "n=3; X=(1,0),(5,0); Y=(2,0),(3,0),(7,0)",
        "n=3; X=1,5,6; Y=(2,0),(3,0),(7,0)",
        "n=3; m=1; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0)",
        "n=three; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0)",
        "n=3; k=3; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0)",
    ],
)
def test_malformed_lines_are_rejected(line: str) -> None:
    with pytest.raises(SolutionParseError):
        parse_solution(line)


def test_parse_solutions_skips_comments_and_reports_line_numbers() -> None:
    text = "# header\n\nn=3; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0)\n"
    assert len(parse_solutions(text)) == 1
    with pytest.raises(SolutionParseError) as excinfo:
        parse_solutions(text + "n=3; X=(1,0); Y=(2,0)\n")
    assert excinfo.value.line == 4
    assert str(excinfo.value).startswith("line 4:")


def test_emit_solutions_orders_lines_canonically(worked_example: PteSolution) -> None:
    bigger = parse_solution("n=4; k=2; X=(0,0),(3,0),(5,0),(6,0); Y=(1,0),(2,0),(4,0),(7,0)")
    text = emit_solutions([bigger, worked_example])
    assert text.splitlines()[0].startswith("n=3;")
    assert text.endswith("\n")
    assert emit_solutions([]) == ""
