import random

from hypothesis import given, settings, strategies as st
import pytest

from lab.errors import CycleDetected, InvalidFilter, InvalidPartition, UnknownLabel
from lab.poset import (
    LinearExtension,
    XPartition,
    antichain,
    chain,
    check_weak_sequence,
    count_linear_extensions,
    is_semistandard,
    iter_weak_sequences,
    iter_x_partitions,
    linear_extensions,
    make_filter,
    minimal_semistandard,
    poset_from_covers,
    poset_from_document,
    poset_from_skew_shape,
    poset_to_document,
    random_filter,
    random_poset,
    row_filter,
    semistandard_counts,
    shift_compatible,
    trivial_filter,
    x_partition_counts,
)
from lab.shapes import shape_parse


def test_from_covers():
    p = poset_from_covers(["a", "b"], [("a", "b")])
    assert p.le(0, 1) and not p.le(1, 0)
    assert poset_from_covers(["a", "b"], []).covers() == []


def test_transitive_closure():
    p = poset_from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert p.lt(0, 2)
    assert p.covers() == [(0, 1), (1, 2)]


def test_cycles_and_labels():
    with pytest.raises(CycleDetected):
        poset_from_covers(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(CycleDetected):
        poset_from_covers(["a"], [("a", "a")])
    with pytest.raises(UnknownLabel):
        poset_from_covers(["a"], [("a", "z")])


@pytest.mark.parametrize(
    'text, comparable',
    (
        ("2", True),
        ("1,1", True),
        ("2,1/1", False),
    ),
)
def test_two_cell_shapes(text, comparable):
    p = poset_from_skew_shape(shape_parse(text))
    assert p.n == 2
    assert p.lt(0, 1) == comparable


def test_row_filter():
    assert row_filter(shape_parse("3,2")).floors == (1, 1, 1, 2, 2)
    assert row_filter(shape_parse("2")).floors == (1, 1)
    f = row_filter(shape_parse("2,2/2"))
    assert f.floors == (1, 1)
    assert f.k == 1


def test_filters():
    p = antichain(2)
    assert trivial_filter(p).floors == (1, 1)
    assert trivial_filter(antichain(0)).k == 0
    with pytest.raises(InvalidFilter):
        make_filter(p, [1, 3])
    with pytest.raises(InvalidFilter):
        make_filter(chain(2), [2, 1])
    assert make_filter(chain(2), {"a": 1, "b": 2}).floors == (1, 2)


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=1000))
@settings(max_examples=40)
def test_random_filter_is_valid(n, seed):
    rng = random.Random(seed)
    p = random_poset(n, rng)
    f = random_filter(p, rng)
    assert set(f.floors) == set(range(1, f.k + 1))
    assert make_filter(p, f.floors) == f


@pytest.mark.parametrize(
    'p, expected',
    (
        (poset_from_skew_shape(shape_parse("3,2")), 5),
        (chain(4), 1),
        (antichain(3), 6),
        (antichain(0), 1),
    ),
)
def test_count_linear_extensions(p, expected):
    assert count_linear_extensions(p) == expected
    assert len(list(linear_extensions(p))) == expected


def test_linear_extensions_are_sorted():
    ranks = [P.rank for P in linear_extensions(poset_from_skew_shape(shape_parse("3,2")))]
    assert ranks == [
        (1, 2, 3, 4, 5),
        (1, 2, 4, 3, 5),
        (1, 2, 5, 3, 4),
        (1, 3, 4, 2, 5),
        (1, 3, 5, 2, 4),
    ]


def test_linear_extension_validation():
    p = chain(2)
    with pytest.raises(InvalidPartition):
        LinearExtension(p, (2, 1))
    P = LinearExtension.from_order(p, [0, 1])
    assert P.rank == (1, 2)
    assert P.element_at(2) == 1


@pytest.mark.parametrize(
    'p, N, expected',
    (
        (antichain(1), 3, [1, 1, 1, 1]),
        (chain(2), 3, [1, 1, 2, 2]),
        (antichain(2), 2, [1, 2, 3]),
    ),
)
def test_x_partition_counts(p, N, expected):
    assert x_partition_counts(p, N) == expected


def test_x_partition_validation():
    with pytest.raises(InvalidPartition):
        XPartition(chain(2), (1, 0))
    with pytest.raises(InvalidPartition):
        XPartition(chain(2), (-1, 0))
    assert XPartition(chain(2), (0, 1)).below(XPartition(chain(2), (1, 1)))


def test_minimal_semistandard():
    s = shape_parse("3,2")
    p, f = poset_from_skew_shape(s), row_filter(s)
    t = minimal_semistandard(p, f)
    assert t.values == (0, 0, 0, 1, 1)
    assert t.volume == 2
    assert minimal_semistandard(antichain(3), trivial_filter(antichain(3))).values == (0, 0, 0)
    assert minimal_semistandard(chain(3), make_filter(chain(3), [1, 2, 3])).values == (0, 1, 2)


def test_is_semistandard():
    s = shape_parse("1,1")
    p, f = poset_from_skew_shape(s), row_filter(s)
    assert not is_semistandard(p, f, (0, 0))
    assert is_semistandard(p, f, minimal_semistandard(p, f))
    assert is_semistandard(p, trivial_filter(p), (0, 0))


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=500))
@settings(max_examples=30, deadline=None)
def test_minimal_is_below_every_semistandard(n, seed):
    rng = random.Random(seed)
    p = random_poset(n, rng)
    f = random_filter(p, rng)
    t = minimal_semistandard(p, f)
    assert all(t.below(T) for T in iter_x_partitions(p, t.volume + 3, f))


def test_semistandard_counts_with_trivial_filter():
    p = poset_from_skew_shape(shape_parse("2,1"))
    assert semistandard_counts(p, trivial_filter(p), 5) == x_partition_counts(p, 5)


def test_shift_compatible():
    for text in ("3,2", "2,2", "3,1,1"):
        s = shape_parse(text)
        assert shift_compatible(poset_from_skew_shape(s), row_filter(s))
    s = shape_parse("2,2/1")
    p, f = poset_from_skew_shape(s), row_filter(s)
    assert not shift_compatible(p, f)
    assert shift_compatible(p, trivial_filter(p))
    # two fillings of volume 2 against a single X-partition of volume 1
    assert semistandard_counts(p, f, 2)[2] == 2
    assert x_partition_counts(p, 1)[1] == 1


def test_weak_sequences():
    assert list(iter_weak_sequences(2, 2)) == [(0, 0), (0, 1), (0, 2), (1, 1)]
    assert list(iter_weak_sequences(0, 3)) == [()]
    assert list(iter_weak_sequences(2, -1)) == []
    assert check_weak_sequence([0, 1, 1], 3) == (0, 1, 1)
    with pytest.raises(InvalidPartition):
        check_weak_sequence([1, 0], 2)
    with pytest.raises(InvalidPartition):
        check_weak_sequence([0], 2)


def test_document_round_trip():
    p = poset_from_covers(["a", "b", "c"], [("a", "b"), ("a", "c")])
    f = make_filter(p, [1, 2, 2])
    doc = poset_to_document(p, f)
    assert doc == {
        "elements": ["a", "b", "c"],
        "covers": [["a", "b"], ["a", "c"]],
        "filter": {"a": 1, "b": 2, "c": 2},
    }
    assert poset_from_document(doc) == (p, f)
