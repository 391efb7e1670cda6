"""Loading helpers for the bundled corpus and reference tables."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Tuple

from ..gint import GaussianIntError, GFactorization
from ..pte import SolutionError, parse_solution
from .models import (
    CorpusEntry,
    CorpusError,
    GaussianTableRow,
    IntegerTableRow,
    KnownBadEntry,
    parse_integer_factors,
)

_DATA_PACKAGE = "gaussian_pte.corpus"
_DATA_DIR = "data"


def _data_file(*parts: str) -> resources.abc.Traversable:
    return resources.files(_DATA_PACKAGE).joinpath(_DATA_DIR, *parts)


def _read_json(resource: Any) -> Dict[str, Any]:
    with resource.open("r", encoding="utf-8") as handle:
        return json.load(handle)


def _factorization(text: str | None, where: str) -> GFactorization | None:
    if text is None:
        return None
    try:
        return GFactorization.parse(text)
    except GaussianIntError as exc:
        raise CorpusError(f"{where}: {exc}") from exc


def _entries(payload: Mapping[str, Any], origin: str) -> Tuple[CorpusEntry, ...]:
    entries = []
    for index, raw in enumerate(payload.get("entries", [])):
        where = f"{origin} entry {raw.get('id', index)}"
        try:
            solution = parse_solution(raw["solution"])
        except (KeyError, SolutionError) as exc:
            raise CorpusError(f"{where}: {exc}") from exc
        entries.append(
            CorpusEntry(
                id=str(raw.get("id", index)),
                solution=solution,
                claimed_constant=_factorization(raw.get("claimed_constant"), where),
                source=str(raw.get("source", "")),
            )
        )
    return tuple(entries)


@lru_cache(maxsize=None)
def load_corpus() -> Tuple[CorpusEntry, ...]:
    """Return the bundled solutions in file order."""

    return _entries(_read_json(_data_file("solutions.json")), "solutions.json")


def load_corpus_file(path: Path) -> Tuple[CorpusEntry, ...]:
    """Load a corpus in the bundled JSON layout from ``path``."""

    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CorpusError(f"{path}: {exc}") from exc
    return _entries(payload, str(path))


@lru_cache(maxsize=None)
def load_gaussian_table() -> Tuple[GaussianTableRow, ...]:
    """Known bounds for ``C_n`` over the Gaussian integers."""

    payload = _read_json(_data_file("table1.json"))
    return tuple(
        GaussianTableRow(
            n=int(row["n"]),
            lower=_factorization(row["lower"], f"table1 n={row['n']}"),  # type: ignore[arg-type]
            upper=_factorization(row.get("upper"), f"table1 n={row['n']}"),
            upper_conditional=bool(row.get("upper_conditional", False)),
        )
        for row in payload["rows"]
    )


@lru_cache(maxsize=None)
def load_integer_table() -> Tuple[IntegerTableRow, ...]:
    """Known bounds for ``C_n / (n-1)!`` over the rational integers."""

    payload = _read_json(_data_file("table2.json"))
    return tuple(
        IntegerTableRow(
            n=int(row["n"]),
            lower=parse_integer_factors(row["lower"]),
            upper=None if row.get("upper") is None else parse_integer_factors(row["upper"]),
        )
        for row in payload["rows"]
    )


def _iter_known_bad() -> Iterable[resources.abc.Traversable]:
    for resource in _data_file("known_bad").iterdir():
        if resource.name.endswith(".json"):
            yield resource


@lru_cache(maxsize=None)
def load_known_bad() -> Tuple[KnownBadEntry, ...]:
    entries = []
    for resource in sorted(_iter_known_bad(), key=lambda r: r.name):
        raw = _read_json(resource)
        entries.append(
            KnownBadEntry(
                id=str(raw["id"]),
                x=tuple(raw["X"]),
                y=tuple(raw["Y"]),
                claimed_constant=raw.get("claimed_constant"),
                note=str(raw.get("note", "")),
            )
        )
    return tuple(entries)


def entries_of_size(entries: Iterable[CorpusEntry], n: int) -> Tuple[CorpusEntry, ...]:
    return tuple(e for e in entries if e.solution.n == n)


__all__ = [
    "entries_of_size",
    "load_corpus",
    "load_corpus_file",
    "load_gaussian_table",
    "load_integer_table",
    "load_known_bad",
]
