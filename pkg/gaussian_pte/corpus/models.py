"""Data models for the bundled solutions and reference tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from ..gint import GFactorization
from ..pte import PteSolution


class CorpusError(ValueError):
    """Raised when bundled or user-supplied corpus data is malformed."""


@dataclass(frozen=True)
class CorpusEntry:
    """A published solution with its optional claimed constant."""

    id: str
    solution: PteSolution
    claimed_constant: GFactorization | None = None
    source: str = ""


@dataclass(frozen=True)
class KnownBadEntry:
    """A published display that is not a well-formed solution; never verified."""

    id: str
    x: Tuple[str, ...]
    y: Tuple[str, ...]
    claimed_constant: str | None
    note: str


@dataclass(frozen=True)
class GaussianTableRow:
    """Known bounds for ``C_n`` over the Gaussian integers, up to units.

    ``upper_conditional`` marks upper bounds inherited from the rational case.
    """

    n: int
    lower: GFactorization
    upper: GFactorization | None
    upper_conditional: bool = False


@dataclass(frozen=True)
class IntegerTableRow:
    """Known bounds for ``C_n / (n-1)!`` over the rational integers, as prime exponents."""

    n: int
    lower: Mapping[int, int] = field(default_factory=dict)
    upper: Mapping[int, int] | None = None

    def lower_divides_upper(self) -> bool | None:
        if self.upper is None:
            return None
        return all(self.upper.get(p, 0) >= e for p, e in self.lower.items())


def format_integer_factors(exponents: Mapping[int, int]) -> str:
    if not exponents:
        return "1"
    return "*".join(
        str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(exponents.items())
    )


def parse_integer_factors(text: str) -> Dict[int, int]:
    """Parse ``2^4*3*5`` into ``{2: 4, 3: 1, 5: 1}``."""

    stripped = text.replace(" ", "")
    if stripped in ("", "1"):
        return {}
    exponents: Dict[int, int] = {}
    for term in stripped.split("*"):
        base, _, power = term.partition("^")
        try:
            prime, exponent = int(base), int(power) if power else 1
        except ValueError as exc:
            raise CorpusError(f"malformed factor {term!r}") from exc
        exponents[prime] = exponents.get(prime, 0) + exponent
    return exponents


__all__ = [
    "CorpusEntry",
    "CorpusError",
    "GaussianTableRow",
    "IntegerTableRow",
    "KnownBadEntry",
    "format_integer_factors",
    "parse_integer_factors",
]
