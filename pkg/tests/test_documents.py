import pytest

from lab.documents import (
    case_id,
    domain_errors,
    load_document,
    read_document,
    render_json,
    schema_errors,
    validate_document,
)
from lab.errors import InvalidDocument


def test_valid_document():
    doc = {"elements": ["a", "b"], "covers": [["a", "b"]], "filter": {"a": 1, "b": 2}}
    assert validate_document(doc) is doc
    assert schema_errors(doc) == []


def test_schema_errors_carry_paths():
    errors = schema_errors({"elements": ["a", "a"], "covers": [["a"]], "colour": "red"})
    assert any(e.startswith("at $:") and "colour" in e for e in errors)
    assert any(e.startswith("at $.covers[0]:") for e in errors)
    assert any(e.startswith("at $.elements:") for e in errors)
    assert schema_errors({"covers": []}) == ["at $: 'elements' is a required property"]


def test_domain_errors():
    doc = {"elements": ["a"], "covers": [["a", "z"], ["a", "a"]], "filter": {"y": 1}}
    assert domain_errors(doc) == [
        "at $.covers[0]: undeclared element 'z'",
        "at $.covers[1]: element 'a' covers itself",
        "at $.filter.y: undeclared element 'y'",
    ]
    with pytest.raises(InvalidDocument, match=r"\$\.covers\[0\]"):
        validate_document(doc)


def test_read_yaml_and_json():
    assert read_document("elements: [a, b]\ncovers: [[a, b]]\n")["covers"] == [["a", "b"]]
    assert read_document('{"elements": ["x"]}') == {"elements": ["x"]}
    with pytest.raises(InvalidDocument):
        read_document("elements: [a, b")
    with pytest.raises(InvalidDocument):
        read_document("- just\n- a list\n")


def test_load_document(tmp_path):
    path = tmp_path / "p.yaml"
    path.write_text("elements: [a]\n", encoding="utf-8")
    assert load_document(path) == {"elements": ["a"]}
    with pytest.raises(InvalidDocument, match="cannot read"):
        load_document(tmp_path / "missing.json")


def test_rendering():
    assert case_id({"elements": ["a"], "covers": []}) == '{"elements":["a"],"covers":[]}'
    assert render_json({"a": [1], "b": "λ"}) == '{"a":[1],"b":"λ"}'
