from __future__ import annotations

import json
from pathlib import Path

import pytest

from gaussian_pte.corpus import (
    NOT_DERIVABLE,
    CorpusError,
    check_entry,
    check_gaussian_table,
    entries_of_size,
    format_integer_row,
    load_corpus,
    load_corpus_file,
    load_gaussian_table,
    load_integer_table,
    load_known_bad,
    parse_integer_factors,
)
from gaussian_pte.gint import GaussianInt


def test_bundled_corpus_loads_in_file_order(corpus) -> None:
    ids = [entry.id for entry in corpus]
    assert ids[:2] == ["int-6", "int-3-worked"]
    assert len(ids) == len(set(ids))
    assert [e.id for e in entries_of_size(corpus, 5)] == ["gauss-5a", "gauss-5b", "gauss-5-sym"]
    assert load_corpus() is corpus


def test_every_entry_verifies(corpus) -> None:
    reports = {entry.id: check_entry(entry) for entry in corpus}
    assert all(report.ok for report in reports.values())
    assert reports["goldbach-int"].claimed_degree == 2
    assert reports["goldbach-int"].constant is None
    assert reports["gauss-5-sym"].constant == GaussianInt(2040, 16320)


def test_entry_report_format(corpus) -> None:
    worked = next(entry for entry in corpus if entry.id == "int-3-worked")
    assert check_entry(worked).format() == (
        "entry int-3-worked n=3 degree=2 claimed=2 valid=yes constant=(12,0) "
        "claim=match lower-bound-divides=yes"
    )


def test_table_comparison(corpus) -> None:
    reports = {r.n: r for r in check_gaussian_table(load_gaussian_table(), corpus)}
    assert all(reports[n].exact for n in (2, 3, 4, 5))
    assert {n for n, r in reports.items() if not r.table_lower_divides_engine} == {8, 9, 13}
    assert NOT_DERIVABLE in reports[8].format()
    rows = {row.n: row for row in load_gaussian_table()}
    assert all(reports[n].sound for n in reports if not rows[n].upper_conditional)
    assert reports[5].constants_checked == 3
    assert reports[10].engine_divides_upper is True


def test_integer_table() -> None:
    rows = {row.n: row for row in load_integer_table()}
    assert format_integer_row(rows[6]) == (
        "integer-table n=6 lower=2^2*3*5 upper=2^3*3*5 lower-divides-upper=yes"
    )
    assert format_integer_row(rows[11]).endswith("upper=none lower-divides-upper=n/a")
    assert all(row.lower_divides_upper() is not False for row in rows.values())


def test_integer_factor_text() -> None:
    assert parse_integer_factors("2^4*3*5") == {2: 4, 3: 1, 5: 1}
    assert parse_integer_factors("1") == {}
    with pytest.raises(CorpusError):
        parse_integer_factors("2^x")


def test_known_bad_entries_are_kept_apart() -> None:
    (entry,) = load_known_bad()
    assert entry.id == "gauss-6-general"
    assert (len(entry.x), len(entry.y)) == (7, 5)


def test_load_corpus_file(tmp_path: Path) -> None:
    path = tmp_path / "mine.json"
    path.write_text(
        json.dumps(
            {
                "entries": [
                    {
                        "id": "mine",
                        "solution": "n=3; X=(0,0),(4,0),(5,0); Y=(1,0),(2,0),(6,0)",
                        "claimed_constant": "(-1,0)*(1,1)^4*(3,0)",
                    }
                ]
            }
        ),
        encoding="utf-8",
    )
    (entry,) = load_corpus_file(path)
    assert entry.id == "mine"
    assert check_entry(entry).claim_matches is True


@pytest.mark.parametrize(
    "payload",
    [
        "{not json",
        json.dumps({"entries": [{"id": "x"}]}),
        json.dumps({"entries": [{"id": "x", "solution": "n=3; X=(0,0); Y=(1,0)"}]}),
        json.dumps(
            {
                "entries": [
                    {
                        "id": "x",
                        "solution": "n=3; X=(0,0),(4,0),(5,0); Y=(1,0),(2,0),(6,0)",
                        "claimed_constant": "(2,0)^x",
                    }
                ]
            }
        ),
    ],
)
def test_malformed_corpus_files(tmp_path: Path, payload: str) -> None:
    path = tmp_path / "bad.json"
    path.write_text(payload, encoding="utf-8")
    with pytest.raises(CorpusError):
        load_corpus_file(path)
