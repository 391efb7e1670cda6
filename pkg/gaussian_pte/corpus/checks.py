"""Re-verification of the corpus and comparison of the divisibility engine with the tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence

from ..bounds import lower_bound
from ..gint import GaussianInt, GFactorization, factor
from ..pte import constant, verify_degree
from .models import CorpusEntry, GaussianTableRow, IntegerTableRow, format_integer_factors

NOT_DERIVABLE = "table factor not rule-derivable"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


@dataclass(frozen=True)
class EntryReport:
    entry_id: str
    n: int
    degree: int
    claimed_degree: int
    constant: GaussianInt | None
    claim_matches: bool | None
    bound_divides: bool | None

    @property
    def valid(self) -> bool:
        return self.degree >= self.claimed_degree

    @property
    def ok(self) -> bool:
        return self.valid and self.claim_matches is not False and self.bound_divides is not False

    def format(self) -> str:
        parts = [
            f"entry {self.entry_id}",
            f"n={self.n}",
            f"degree={self.degree}",
            f"claimed={self.claimed_degree}",
            f"valid={_yes(self.valid)}",
        ]
        if self.constant is not None:
            parts.append(f"constant={self.constant}")
        if self.claim_matches is not None:
            parts.append(f"claim={'match' if self.claim_matches else 'MISMATCH'}")
        if self.bound_divides is not None:
            parts.append(f"lower-bound-divides={_yes(self.bound_divides)}")
        return " ".join(parts)


def check_entry(entry: CorpusEntry) -> EntryReport:
    """Verify ``entry`` at its claimed degree and compare its constant with the claim and the engine."""

    s = entry.solution
    degree = verify_degree(s)
    value = None
    claim_matches = None
    bound_divides = None
    if degree >= s.n - 1:
        value = constant(s)
        computed = factor(value)
        bound_divides = lower_bound(s.n).lower.divides(computed)
        if entry.claimed_constant is not None:
            claim_matches = entry.claimed_constant.without_unit() == computed.without_unit()
    elif entry.claimed_constant is not None:
        claim_matches = False
    return EntryReport(
        entry_id=entry.id,
        n=s.n,
        degree=degree,
        claimed_degree=s.claimed_degree,  # type: ignore[arg-type]
        constant=value,
        claim_matches=claim_matches,
        bound_divides=bound_divides,
    )


@dataclass(frozen=True)
class GaussianRowReport:
    """Engine bound against one row of known bounds, in both directions."""

    n: int
    engine: GFactorization
    table_lower: GFactorization
    missing: GFactorization
    engine_divides_upper: bool | None
    constants_checked: int
    engine_divides_constants: bool

    @property
    def table_lower_divides_engine(self) -> bool:
        return not self.missing.factors

    @property
    def exact(self) -> bool:
        return self.engine.without_unit() == self.table_lower.without_unit()

    @property
    def sound(self) -> bool:
        return self.engine_divides_upper is not False and self.engine_divides_constants

    def format(self) -> str:
        parts = [
            f"table n={self.n}",
            f"engine={self.engine.format(include_unit=False)}",
            f"exact={_yes(self.exact)}",
            f"table-lower-divides={_yes(self.table_lower_divides_engine)}",
        ]
        if not self.table_lower_divides_engine:
            parts.append(f"missing={self.missing.format(include_unit=False)} ({NOT_DERIVABLE})")
        if self.engine_divides_upper is not None:
            parts.append(f"divides-upper={_yes(self.engine_divides_upper)}")
        parts.append(
            f"divides-constants={_yes(self.engine_divides_constants)}/{self.constants_checked}"
        )
        return " ".join(parts)


def check_gaussian_row(row: GaussianTableRow, entries: Iterable[CorpusEntry]) -> GaussianRowReport:
    engine = lower_bound(row.n).lower
    constants = [
        factor(constant(e.solution))
        for e in entries
        if e.solution.n == row.n and verify_degree(e.solution) >= row.n - 1
    ]
    return GaussianRowReport(
        n=row.n,
        engine=engine,
        table_lower=row.lower,
        missing=row.lower.missing_from(engine),
        engine_divides_upper=None if row.upper is None else engine.divides(row.upper),
        constants_checked=len(constants),
        engine_divides_constants=all(engine.divides(c) for c in constants),
    )


def check_gaussian_table(
    rows: Sequence[GaussianTableRow], entries: Sequence[CorpusEntry]
) -> List[GaussianRowReport]:
    return [check_gaussian_row(row, entries) for row in rows]


def format_integer_row(row: IntegerTableRow) -> str:
    upper = "none" if row.upper is None else format_integer_factors(row.upper)
    verdict = row.lower_divides_upper()
    status = "n/a" if verdict is None else _yes(verdict)
    return (
        f"integer-table n={row.n} lower={format_integer_factors(row.lower)} "
        f"upper={upper} lower-divides-upper={status}"
    )


__all__ = [
    "EntryReport",
    "GaussianRowReport",
    "NOT_DERIVABLE",
    "check_entry",
    "check_gaussian_row",
    "check_gaussian_table",
    "format_integer_row",
]
