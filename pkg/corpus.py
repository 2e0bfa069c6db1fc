"""Named poset documents on disk, the worked reference data, and the case
corpora the verification suites iterate over."""

from __future__ import annotations

import json
import logging
import random
from pathlib import Path
from typing import NamedTuple

import yaml

from lab.documents import case_id, load_document, validate_document
from lab.errors import InvalidDocument
from lab.poset import (
    Filter,
    Poset,
    antichain,
    chain,
    poset_from_document,
    poset_from_skew_shape,
    poset_to_document,
    random_filter,
    random_poset,
    row_filter,
)
from lab.shapes import SkewShape, iter_skew_shapes, shape_to_text

logger = logging.getLogger(__name__)

CORPUS_DIR = Path("corpus")
SUFFIXES = (".json", ".yaml", ".yml")
REFERENCE = "reference"


class Case(NamedTuple):
    case_id: str
    poset: Poset
    filter: Filter | None = None
    shape: SkewShape | None = None


def _document_path(name: str | Path, directory: Path) -> Path:
    path = Path(name)
    if path.is_file():
        return path
    for suffix in SUFFIXES:
        candidate = Path(directory) / f"{name}{suffix}"
        if candidate.is_file():
            return candidate
    raise InvalidDocument(f"poset {str(name)!r} not found in {directory}")


def load_poset_document(name: str | Path, directory: Path = CORPUS_DIR) -> dict:
    """Load a poset document by file path or by name inside ``directory``."""
    return load_document(_document_path(name, directory))


def load_poset(name: str | Path, directory: Path = CORPUS_DIR) -> tuple[Poset, Filter | None]:
    return poset_from_document(load_poset_document(name, directory))


def list_posets(directory: Path = CORPUS_DIR) -> list[str]:
    """Names of the poset documents stored in ``directory``."""
    directory = Path(directory)
    if not directory.is_dir():
        return []
    return sorted(
        p.stem for p in directory.iterdir()
        if p.suffix in SUFFIXES and p.stem != REFERENCE
    )


def save_poset(name: str, doc: dict, directory: Path = CORPUS_DIR) -> Path:
    """Validate and store a poset document as ``<name>.json``."""
    validate_document(doc)
    poset_from_document(doc)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{name}.json"
    path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    logger.info("saved poset %s to %s", name, path)
    return path


def remove_poset(name: str, directory: Path = CORPUS_DIR) -> None:
    path = _document_path(name, directory)
    path.unlink()
    logger.info("removed poset %s", path)


def load_reference(name: str = REFERENCE, directory: Path = CORPUS_DIR) -> dict:
    """Reference data: worked example matrices and their eigenvalues, keyed by shape."""
    for suffix in (".yaml", ".yml", ".json"):
        path = Path(directory) / f"{name}{suffix}"
        if path.is_file():
            return yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    return {}


def shape_corpus(max_cells: int) -> list[SkewShape]:
    """Every non-empty λ/μ with |λ| ≤ max_cells."""
    return [s for s in iter_skew_shapes(max_cells) if s.size > 0]


def shape_case(s: SkewShape) -> Case:
    return Case(shape_to_text(s), poset_from_skew_shape(s), row_filter(s), s)


def shape_cases(max_cells: int) -> list[Case]:
    return [shape_case(s) for s in shape_corpus(max_cells)]


def poset_case(p: Poset, f: Filter | None = None) -> Case:
    return Case(case_id(poset_to_document(p, f)), p, f)


def chain_antichain_corpus(max_n: int) -> list[Case]:
    cases = []
    for n in range(1, max_n + 1):
        cases.append(poset_case(chain(n)))
        cases.append(poset_case(antichain(n)))
    return cases


def named_posets(directory: Path = CORPUS_DIR) -> list[Case]:
    return [poset_case(*load_poset(name, directory)) for name in list_posets(directory)]


def random_corpus(count: int, size: int, seed: int) -> list[Case]:
    """``count`` random posets on 1..size elements, each with a random filter."""
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        p = random_poset(rng.randint(1, size), rng)
        cases.append(poset_case(p, random_filter(p, rng)))
    return cases


def cases_from_paths(paths) -> list[Case]:
    cases = []
    for path in paths:
        path = Path(path)
        if path.is_dir():
            cases.extend(named_posets(path))
        else:
            cases.append(poset_case(*load_poset(path)))
    return cases


def poset_cases(context) -> list[Case]:
    """Shape posets, chains and antichains, named posets and seeded random posets.

    Explicit ``--shape`` or ``--poset`` inputs replace the default corpus.
    """
    if context.shape is not None or context.poset_paths:
        cases = [shape_case(context.shape)] if context.shape is not None else []
        return cases + cases_from_paths(context.poset_paths)
    return (
        shape_cases(context.max_cells)
        + chain_antichain_corpus(context.chain_max)
        + named_posets(context.corpus_dir)
        + random_corpus(context.random_posets, context.random_poset_size, context.seed)
    )
