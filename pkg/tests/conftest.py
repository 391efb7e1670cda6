"""Shared pytest configuration: corpus fixtures, a seeded RNG and the slow gate."""

from __future__ import annotations

import random
from pathlib import Path
from runpy import run_path
from typing import Dict, Tuple

import pytest

run_path(str(Path(__file__).resolve().with_name("_baseline_imports.py")))

from gaussian_pte.corpus import CorpusEntry, load_corpus  # noqa: E402
from gaussian_pte.pte import PteSolution, parse_solution  # noqa: E402
from gaussian_pte.settings import RuntimeSettings  # noqa: E402

PROPERTY_SEED = 20240917


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if RuntimeSettings.from_env().run_slow:
        return
    skip_slow = pytest.mark.skip(reason="set GPTE_RUN_SLOW=true to run slow searches")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def corpus() -> Tuple[CorpusEntry, ...]:
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_by_id(corpus: Tuple[CorpusEntry, ...]) -> Dict[str, PteSolution]:
    return {entry.id: entry.solution for entry in corpus}


@pytest.fixture(scope="session")
def worked_example() -> PteSolution:
    """``{1, 5, 6} =_2 {2, 3, 7}`` with constant 12."""

    return parse_solution("n=3; X=(1,0),(5,0),(6,0); Y=(2,0),(3,0),(7,0)")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(PROPERTY_SEED)


@pytest.fixture
def settings() -> RuntimeSettings:
    return RuntimeSettings.from_env({})
