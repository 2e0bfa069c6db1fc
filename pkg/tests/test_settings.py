from pathlib import Path

import pytest
from pydantic import ValidationError

from context import Context
from settings import get_settings


def test_defaults(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    s = get_settings()
    assert s.max_cells == 6
    assert s.series_degree == 12
    assert s.max_extensions == 24
    assert s.output_format == "json"


def test_environment(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("PEDESTAL_LAB_MAX_CELLS", "3")
    monkeypatch.setenv("PEDESTAL_LAB_LOG_LEVEL", "DEBUG")
    s = get_settings()
    assert s.max_cells == 3
    assert s.log_level == "DEBUG"


def test_dotenv(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    (tmp_path / ".env").write_text("PEDESTAL_LAB_SEED=11\n", encoding="utf-8")
    assert get_settings().seed == 11


def test_validation(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(ValidationError):
        get_settings(max_extensions=0)
    with pytest.raises(ValidationError):
        get_settings(output_format="xml")


def test_context_overrides(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    context = Context.from_settings(get_settings(), max_cells=2, seed=None, poset_paths=["x.json"])
    assert context.max_cells == 2
    assert context.seed == 0
    assert context.poset_paths == [Path("x.json")]
    assert context.corpus_dir == Path("corpus")
    with pytest.raises(TypeError):
        Context.from_settings(get_settings(), colour="red")
