"""Prouhet-Tarry-Escott solution model, verification and equivalence."""

from .equivalence import equivalence_key, equivalent
from .models import AffineMap, NonIntegralImageError, NotIdealError, PteSolution, SolutionError
from .operations import (
    affine_apply,
    conjugate_solution,
    constant,
    falling_factorial_check,
    goldbach_family,
    is_ideal,
    pairing_mod_q,
    translate,
    verify_degree,
)
from .textformat import (
    SolutionParseError,
    emit_solutions,
    format_solution,
    parse_solution,
    parse_solutions,
)

__all__ = [
    "AffineMap",
    "NonIntegralImageError",
    "NotIdealError",
    "PteSolution",
    "SolutionError",
    "SolutionParseError",
    "affine_apply",
    "conjugate_solution",
    "constant",
    "emit_solutions",
    "equivalence_key",
    "equivalent",
    "falling_factorial_check",
    "format_solution",
    "goldbach_family",
    "is_ideal",
    "pairing_mod_q",
    "parse_solution",
    "parse_solutions",
    "translate",
    "verify_degree",
]
