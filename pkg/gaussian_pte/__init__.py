"""Prouhet-Tarry-Escott solutions over the Gaussian integers.

Subpackages are imported lazily on first attribute access.
"""

from __future__ import annotations

import importlib
from types import ModuleType
from typing import Iterable

__all__ = [
    "bounds",
    "cli",
    "corpus",
    "gint",
    "logging_integration",
    "pte",
    "search",
    "settings",
    "symfunc",
]


def _iter_public_names() -> Iterable[str]:
    return set(globals()) | set(__all__)


def __getattr__(name: str) -> ModuleType:
    if name not in __all__:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    return importlib.import_module(f".{name}", __name__)


def __dir__() -> list[str]:
    return sorted(_iter_public_names())
