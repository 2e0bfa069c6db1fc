from pathlib import Path

import pytest

from context import Context

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture
def small_context() -> Context:
    """Bounds small enough for every suite to finish in a few seconds."""
    return Context(
        max_cells=4,
        series_degree=6,
        max_extensions=24,
        max_volume=4,
        semistandard_volume=5,
        eigen_max_cells=4,
        bijection_max_cells=3,
        chain_max=3,
        random_posets=5,
        random_poset_size=4,
        seed=7,
        corpus_dir=CORPUS,
    )
