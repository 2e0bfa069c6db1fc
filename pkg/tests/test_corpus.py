import pytest

from corpus import (
    chain_antichain_corpus,
    list_posets,
    load_poset,
    load_poset_document,
    load_reference,
    named_posets,
    poset_cases,
    random_corpus,
    remove_poset,
    save_poset,
    shape_cases,
)
from context import Context
from lab.errors import InvalidDocument
from lab.poset import count_linear_extensions
from lab.shapes import shape_parse


def test_named_posets(corpus_dir):
    names = list_posets(corpus_dir)
    assert "diamond" in names
    assert "staircase-rows" in names
    assert "reference" not in names
    p, f = load_poset("diamond", corpus_dir)
    assert p.n == 4
    assert f is None
    assert count_linear_extensions(p) == 2
    p, f = load_poset("staircase-rows", corpus_dir)
    assert f.floors == (1, 1, 2)
    assert len(named_posets(corpus_dir)) == len(names)


def test_missing_poset(corpus_dir):
    with pytest.raises(InvalidDocument, match="not found"):
        load_poset("no-such-poset", corpus_dir)


def test_save_and_remove(tmp_path):
    doc = {"elements": ["a", "b"], "covers": [["a", "b"]]}
    path = save_poset("pair", doc, tmp_path)
    assert path.name == "pair.json"
    assert list_posets(tmp_path) == ["pair"]
    assert load_poset_document("pair", tmp_path) == doc
    remove_poset("pair", tmp_path)
    assert list_posets(tmp_path) == []
    with pytest.raises(InvalidDocument):
        save_poset("bad", {"elements": ["a"], "covers": [["a", "b"]]}, tmp_path)


def test_reference(corpus_dir):
    ref = load_reference(directory=corpus_dir)["3,2"]
    assert ref["exponents"][0] == [0, 3, 1, 4, 2]
    assert len(ref["eigenvalues"]) == 5
    assert load_reference("absent", corpus_dir) == {}


def test_shape_cases():
    assert [c.case_id for c in shape_cases(2)] == ["1", "2", "2/1", "1,1", "1,1/1"]
    case = shape_cases(2)[3]
    assert case.shape == shape_parse("1,1")
    assert case.filter.floors == (1, 2)


def test_chain_antichain_corpus():
    cases = chain_antichain_corpus(3)
    assert len(cases) == 6
    assert [c.poset.n for c in cases] == [1, 1, 2, 2, 3, 3]


def test_random_corpus_is_seeded():
    first = [c.case_id for c in random_corpus(10, 5, seed=3)]
    assert first == [c.case_id for c in random_corpus(10, 5, seed=3)]
    assert first != [c.case_id for c in random_corpus(10, 5, seed=4)]
    assert all(1 <= c.poset.n <= 5 and c.filter is not None for c in random_corpus(10, 5, seed=3))


def test_explicit_inputs_replace_default_corpus(corpus_dir):
    context = Context(shape=shape_parse("3,2"), poset_paths=[corpus_dir / "diamond.json"])
    cases = poset_cases(context)
    assert [c.poset.n for c in cases] == [5, 4]
    assert cases[0].case_id == "3,2"
    default = poset_cases(Context(max_cells=2, chain_max=1, random_posets=2, corpus_dir=corpus_dir))
    assert len(default) == 5 + 2 + len(list_posets(corpus_dir)) + 2
