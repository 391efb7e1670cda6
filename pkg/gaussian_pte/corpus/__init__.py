"""Bundled published solutions and reference tables."""

from .checks import (
    NOT_DERIVABLE,
    EntryReport,
    GaussianRowReport,
    check_entry,
    check_gaussian_row,
    check_gaussian_table,
    format_integer_row,
)
from .loader import (
    entries_of_size,
    load_corpus,
    load_corpus_file,
    load_gaussian_table,
    load_integer_table,
    load_known_bad,
)
from .models import (
    CorpusEntry,
    CorpusError,
    GaussianTableRow,
    IntegerTableRow,
    KnownBadEntry,
    format_integer_factors,
    parse_integer_factors,
)

__all__ = [
    "CorpusEntry",
    "CorpusError",
    "EntryReport",
    "GaussianRowReport",
    "GaussianTableRow",
    "IntegerTableRow",
    "KnownBadEntry",
    "NOT_DERIVABLE",
    "check_entry",
    "check_gaussian_row",
    "check_gaussian_table",
    "entries_of_size",
    "format_integer_factors",
    "format_integer_row",
    "load_corpus",
    "load_corpus_file",
    "load_gaussian_table",
    "load_integer_table",
    "load_known_bad",
    "parse_integer_factors",
]
