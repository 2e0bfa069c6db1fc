"""Poset documents on disk and rendering of results.

A poset document is JSON or YAML (YAML is a superset, so one loader serves
both) and is validated against ``poset.schema.json`` before it is turned into
a Poset.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import yaml
from jsonschema import Draft202012Validator

from lab.errors import InvalidDocument

logger = logging.getLogger(__name__)

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "poset.schema.json"


def _load_schema_obj(p: Path = SCHEMA_PATH) -> dict:
    return json.loads(p.read_text(encoding="utf-8"))


def _json_path(path) -> str:
    return "$" + "".join(f"[{p!r}]" if isinstance(p, int) else f".{p}" for p in path)


def schema_errors(data: Any, schema_obj: dict | None = None) -> list[str]:
    """Every schema violation as "at $.path: message", in document order."""
    validator = Draft202012Validator(schema_obj or _load_schema_obj())
    errors = sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.path)))
    return [f"at {_json_path(e.path)}: {e.message}" for e in errors]


def domain_errors(data: dict) -> list[str]:
    """Checks the schema cannot express: covers and filter keys name declared elements."""
    declared = set(data.get("elements", []))
    errors = []
    for k, (lo, hi) in enumerate(data.get("covers", []) or []):
        for label in (lo, hi):
            if label not in declared:
                errors.append(f"at $.covers[{k}]: undeclared element {label!r}")
        if lo == hi:
            errors.append(f"at $.covers[{k}]: element {lo!r} covers itself")
    for label in (data.get("filter") or {}):
        if label not in declared:
            errors.append(f"at $.filter.{label}: undeclared element {label!r}")
    return errors


def validate_document(data: Any) -> dict:
    """Raise InvalidDocument listing every problem, or return the document."""
    problems = schema_errors(data)
    if not problems:
        problems = domain_errors(data)
    if problems:
        raise InvalidDocument("poset document is invalid:\n- " + "\n- ".join(problems))
    return data


def read_document(text: str) -> dict:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise InvalidDocument(f"cannot parse poset document: {e}") from None
    return validate_document(data)


def load_document(path: str | Path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidDocument(f"cannot read {path}: {e.strerror}") from None
    logger.debug("loading poset document %s", path)
    return read_document(text)


def render_json(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def case_id(doc: dict) -> str:
    """Compact, replayable identifier for a poset case."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
