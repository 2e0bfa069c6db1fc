import pytest

from corpus import load_reference
from lab.errors import EigenExtractionFailed, ExtensionLimitExceeded, InputError
import lab.polyq
from lab.poset import antichain, chain, poset_from_covers, poset_from_skew_shape
from lab.polyq import ONE, IntPoly
from lab.shapes import shape_parse
from lab.specmat import (
    certify,
    char_poly,
    check_eigenvalues,
    eigen_polynomials,
    integer_determinant,
    match_up_to_permutation,
    pedestal_matrix,
    verify_integer_eigenvalues,
)

SHAPE_EIGENVALUES = (
    IntPoly((1, 1, 1, 1, 1)),
    IntPoly((1, -1, 0, -1, 1)),
    IntPoly((1, 0, -1)),
    IntPoly((1, -1, 0, 1, -1)),
    IntPoly((1, 1, 0, -1, -1)),
)


@pytest.fixture(scope="module")
def shape_matrix():
    return pedestal_matrix(poset_from_skew_shape(shape_parse("3,2")))


@pytest.mark.parametrize(
    'matrix, expected',
    (
        ([[2, 1], [1, 2]], 3),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[0, 2, 1], [3, 0, 1], [1, 1, 0]], 5),
        ([], 1),
    ),
)
def test_integer_determinant(matrix, expected):
    assert integer_determinant(matrix) == expected


def test_small_matrices():
    assert pedestal_matrix(chain(3)).exponents == ((0,),)
    assert pedestal_matrix(antichain(2)).exponents == ((0, 1), (1, 0))
    with pytest.raises(ExtensionLimitExceeded):
        pedestal_matrix(antichain(5), max_extensions=24)
    with pytest.raises(InputError):
        pedestal_matrix(antichain(0))


def test_shape_matrix_rows(shape_matrix):
    assert shape_matrix.dim == 5
    for row in shape_matrix.exponents:
        assert sorted(row) == [0, 1, 2, 3, 4]
    assert shape_matrix.row_sums()[0] == IntPoly((1, 1, 1, 1, 1))


def test_matches_reference_up_to_permutation(shape_matrix, corpus_dir):
    reference = load_reference(directory=corpus_dir)["3,2"]["exponents"]
    perm = match_up_to_permutation(shape_matrix, reference)
    assert perm is not None
    assert sorted(perm) == list(range(5))
    for i in range(5):
        for j in range(5):
            assert shape_matrix.exponents[perm[i]][perm[j]] == reference[i][j]


def test_no_permutation_for_other_grid(shape_matrix):
    assert match_up_to_permutation(shape_matrix, [[0, 1], [1, 0]]) is None


def test_char_poly():
    assert char_poly(pedestal_matrix(chain(2))).coeffs == (IntPoly((-1,)), ONE)
    chi = char_poly(pedestal_matrix(antichain(2)))
    assert chi.coeffs == (IntPoly((1, 0, -1)), IntPoly((-2,)), ONE)
    assert chi.degree == 2
    assert chi.at(2) == IntPoly((-3, -2, 1))


def test_char_poly_of_shape(shape_matrix):
    chi = char_poly(shape_matrix)
    assert chi.degree == 5
    assert certify(chi, SHAPE_EIGENVALUES)
    assert not certify(chi, SHAPE_EIGENVALUES[:4] + (IntPoly((1, 1)),))
    assert not certify(chi, SHAPE_EIGENVALUES[:4])


def test_eigenvalues():
    assert eigen_polynomials(pedestal_matrix(chain(1))).eigenvalues == (ONE,)
    result = eigen_polynomials(pedestal_matrix(antichain(2)))
    assert result.certified
    assert result.eigenvalues == (IntPoly((1, 1)), IntPoly((1, -1)))


def test_shape_eigenvalues(shape_matrix):
    result = eigen_polynomials(shape_matrix)
    assert result.certified
    assert result.eigenvalues == SHAPE_EIGENVALUES
    assert result.display == [
        "1 + q + q^2 + q^3 + q^4",
        "(1 - q)^2*(1 + q + q^2)",
        "(1 - q)*(1 + q)",
        "(1 - q)*(1 + q)*(1 - q + q^2)",
        "(1 - q)*(1 + q)*(1 + q + q^2)",
    ]


@pytest.mark.parametrize(
    'p',
    (
        antichain(3),
        chain(4),
        poset_from_skew_shape(shape_parse("2,2,1")),
        poset_from_skew_shape(shape_parse("3,1/1")),
        poset_from_covers(["a", "b", "c", "d"], [("a", "c"), ("b", "c"), ("b", "d")]),
    ),
)
def test_integer_eigenvalues(p):
    check = check_eigenvalues(p)
    assert check.passed, check.problems
    assert verify_integer_eigenvalues(p)
    m = len(check.result.eigenvalues)
    assert sum(e(1) for e in check.result.eigenvalues) == m


def test_eigen_failure_carries_the_poset(monkeypatch):
    # mod 2 the characteristic polynomial of the 2-antichain is never squarefree
    monkeypatch.setattr(lab.polyq, "PRIMES", (2,))
    with pytest.raises(EigenExtractionFailed) as info:
        eigen_polynomials(pedestal_matrix(antichain(2)), base_points=3)
    assert len(info.value.document["elements"]) == 2
    assert not check_eigenvalues(antichain(2), base_points=3).passed
