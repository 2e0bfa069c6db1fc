"""Pedestal matrices over Z[q], their characteristic polynomials and eigenvalues.

Rows and columns are indexed by the linear extensions of the poset in canonical
order; entry (P, Q) is q^|d_P(Q)|. Every entry is a monomial, so with each
polynomial packed into one big integer a product with the matrix is a sum of
shifted integers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from lab.errors import (
    EigenExtractionFailed,
    ExtensionLimitExceeded,
    InputError,
    InternalInvariantViolation,
    NotDivisible,
)
from lab.pedestal import pedestal_volume
from lab.poset import LinearExtension, Poset, count_linear_extensions, linear_extensions, poset_to_document
from lab.polyq import (
    ONE,
    ZERO,
    IntPoly,
    factor_display,
    poly_integer_roots,
    poly_pack,
    poly_taylor_shift,
    poly_to_json,
    poly_to_text,
    poly_unpack,
    truncated_shift,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXTENSIONS = 24
DEFAULT_BASE_POINTS = 8
SAMPLE_POINTS = ((2, 2), (-1, 3), (7, -2))


@dataclass(frozen=True)
class PedestalMatrix:
    dim: int
    exponents: tuple[tuple[int, ...], ...]
    extensions: tuple[LinearExtension, ...] = field(repr=False)

    @property
    def entries(self) -> list[list[IntPoly]]:
        return [[IntPoly.monomial(e) for e in row] for row in self.exponents]

    @property
    def poset(self) -> Poset:
        return self.extensions[0].poset

    def evaluate(self, q0: int) -> list[list[int]]:
        return [[q0**e for e in row] for row in self.exponents]

    def row_sums(self) -> list[IntPoly]:
        sums = []
        for row in self.exponents:
            coeffs = [0] * (max(row) + 1)
            for e in row:
                coeffs[e] += 1
            sums.append(IntPoly(coeffs))
        return sums

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [[poly_to_json(entry) for entry in row] for row in self.entries],
            "extensions": [P.to_json() for P in self.extensions],
        }


def pedestal_matrix(p: Poset, max_extensions: int = DEFAULT_MAX_EXTENSIONS) -> PedestalMatrix:
    if p.n == 0:
        raise InputError("the pedestal matrix needs a poset with at least one element")
    count = count_linear_extensions(p)
    if count > max_extensions:
        raise ExtensionLimitExceeded(
            f"poset has {count} linear extensions, more than the limit {max_extensions}"
        )
    extensions = tuple(linear_extensions(p))
    exponents = tuple(tuple(pedestal_volume(P, Q) for Q in extensions) for P in extensions)
    M = PedestalMatrix(len(extensions), exponents, extensions)

    sums = M.row_sums()
    if any(exponents[k][k] for k in range(M.dim)) or any(s != sums[0] for s in sums):
        raise InternalInvariantViolation(f"pedestal matrix rows disagree: {exponents}")
    logger.debug("built %d×%d pedestal matrix, row sum %s", M.dim, M.dim, sums[0])
    return M


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; every division is exact."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign, previous = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (pivot * M[i][j] - M[i][k] * M[k][j]) // previous
        previous = pivot
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class CharPoly:
    """det(λI - M) as Σ coeffs[j](q) λ^j, monic in λ."""

    coeffs: tuple[IntPoly, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, lam: int, q0: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * lam + c(q0)
        return value

    def at(self, q0: int) -> IntPoly:
        """Integer polynomial in λ obtained by fixing q = q0."""
        return IntPoly(c(q0) for c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs_in_lambda": [poly_to_json(c) for c in self.coeffs]}

    def __str__(self) -> str:
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            power = "" if j == 0 else ("λ" if j == 1 else f"λ^{j}")
            if j == 0:
                terms.append(f"({poly_to_text(c)})")
            elif c == ONE:
                terms.append(power)
            else:
                terms.append(f"({poly_to_text(c)})*{power}")
        return " + ".join(terms) or "0"


def char_poly(M: PedestalMatrix) -> CharPoly:
    """Faddeev–LeVerrier over Z[q], checked against Bareiss at sample points.

    M_0 = 0, c_m = 1, M_k = A M_{k-1} + c_{m-k+1} I, c_{m-k} = -tr(A M_k) / k.
    """
    m = M.dim
    # every coefficient met along the way is at most m^(m+2) in absolute value
    bits = (m + 2) * m.bit_length() + 2
    shifts = [[e * bits for e in row] for row in M.exponents]
    coeffs: list[IntPoly] = [ZERO] * (m + 1)
    coeffs[m] = ONE
    AM = [[0] * m for _ in range(m)]
    for k in range(1, m + 1):
        c = poly_pack(coeffs[m - k + 1], bits)
        Mk = [row[:] for row in AM]
        for i in range(m):
            Mk[i][i] += c
        AM = [
            [sum(Mk[j][col] << shifts[i][j] for j in range(m)) for col in range(m)]
            for i in range(m)
        ]
        trace = poly_unpack(sum(AM[i][i] for i in range(m)), bits)
        try:
            coeffs[m - k] = (-trace).scalar_exact_div(k)
        except NotDivisible as exc:
            raise InternalInvariantViolation(f"trace recursion step {k} is not exact: {exc}") from exc

    chi = CharPoly(tuple(coeffs))
    for lam, q0 in SAMPLE_POINTS:
        values = M.evaluate(q0)
        shifted = [
            [(lam if i == j else 0) - values[i][j] for j in range(m)]
            for i in range(m)
        ]
        expected = integer_determinant(shifted)
        if chi.evaluate(lam, q0) != expected:
            raise InternalInvariantViolation(
                f"characteristic polynomial disagrees with det at λ={lam}, q={q0}: "
                f"{chi.evaluate(lam, q0)} != {expected}"
            )
    return chi


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: tuple[IntPoly, ...]
    certified: bool
    base_point: int | None = None

    @property
    def display(self) -> list[str]:
        return [factor_display(e) for e in self.eigenvalues]

    def to_json(self) -> dict:
        return {
            "certified": self.certified,
            "base_point": self.base_point,
            "eigenvalues": [
                {**poly_to_json(e), "display": shown}
                for e, shown in zip(self.eigenvalues, self.display)
            ],
        }


def _series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * order
    for i, x in enumerate(a[:order]):
        if not x:
            continue
        for j in range(min(len(b), order - i)):
            out[i + j] += x * b[j]
    return out


def _series_inverse(a: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * order
    out[0] = 1 / a[0]
    for k in range(1, order):
        total = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out[k] = -total * out[0]
    return out


def _newton_lift(h: list[list[int]], root: int, order: int) -> list[Fraction] | None:
    """Series λ(t) with h(λ(t), t) = 0 mod t^order and λ(0) = root.

    ``h[j]`` holds the coefficients in t of the λ^j coefficient. Returns None
    when the root is not simple.
    """
    lam = [Fraction(root)] + [Fraction(0)] * (order - 1)
    precision = 1
    while precision < order:
        precision = min(2 * precision, order)
        value = [Fraction(0)] * precision
        slope = [Fraction(0)] * precision
        for j in range(len(h) - 1, -1, -1):
            slope = [s + v for s, v in zip(_series_mul(slope, lam, precision), value)]
            value = _series_mul(value, lam, precision)
            for t, c in enumerate(h[j][:precision]):
                value[t] += c
        if slope[0] == 0:
            return None
        step = _series_mul(value, _series_inverse(slope, precision), precision)
        lam = [x - s for x, s in zip(lam[:precision], step)] + lam[precision:]
    return lam[:order]


def _lift_eigenvalue(shifted: list[list[int]], q0: int, root: int, multiplicity: int, order: int) -> IntPoly | None:
    """``shifted[j]`` is the λ^j coefficient of chi expanded around q = q0."""
    # the (multiplicity - 1)-th λ-derivative has a simple root along a genuine eigenvalue
    d = multiplicity - 1
    h = []
    for j in range(len(shifted) - d):
        factor = factorial(j + d) // factorial(j)
        h.append([c * factor for c in shifted[j + d]])
    lifted = _newton_lift(h, root, order)
    if lifted is None or any(c.denominator != 1 for c in lifted):
        return None
    return poly_taylor_shift(IntPoly(int(c) for c in lifted), -q0)


def _divide_out(coeffs: list[IntPoly], e: IntPoly) -> list[IntPoly] | None:
    """Divide Σ coeffs[j] λ^j by (λ - e) in Z[q][λ], or None on a remainder."""
    top = len(coeffs) - 1
    quotient = [ZERO] * top
    carry = coeffs[top]
    for j in range(top - 1, -1, -1):
        quotient[j] = carry
        carry = coeffs[j] + e * carry
    return quotient if not carry else None


def certify(chi: CharPoly, eigenvalues: Sequence[IntPoly]) -> bool:
    """True when ∏(λ - e) reproduces chi exactly."""
    remaining = list(chi.coeffs)
    for e in eigenvalues:
        if len(remaining) < 2:
            return False
        quotient = _divide_out(remaining, e)
        if quotient is None:
            return False
        remaining = quotient
    return remaining == [ONE]


def _try_base_point(M: PedestalMatrix, chi: CharPoly, q0: int) -> list[IntPoly] | None:
    try:
        roots = poly_integer_roots(chi.at(q0))
    except EigenExtractionFailed as exc:
        logger.debug("q=%d: %s", q0, exc)
        return None
    if roots is None:
        logger.debug("q=%d: characteristic polynomial has non-integer roots", q0)
        return None
    # |e(q)| never exceeds the row sum for q > 0, so deg e is at most its degree
    order = M.row_sums()[0].degree + 1
    if chi.coeffs[0]:
        order = min(order, chi.coeffs[0].degree + 1)
    shifted = [truncated_shift(c, q0, order) for c in chi.coeffs]
    eigenvalues = []
    for root, multiplicity in sorted(roots.items()):
        e = _lift_eigenvalue(shifted, q0, root, multiplicity, order)
        if e is None:
            logger.debug("q=%d: root %d (multiplicity %d) does not lift", q0, root, multiplicity)
            return None
        eigenvalues.extend([e] * multiplicity)
    if not certify(chi, eigenvalues):
        logger.debug("q=%d: lifted roots do not divide the characteristic polynomial", q0)
        return None
    return eigenvalues


def _eigen_key(e: IntPoly):
    return -e(2), e.coeffs


def eigen_polynomials(
    M: PedestalMatrix,
    chi: CharPoly | None = None,
    base_points: int = DEFAULT_BASE_POINTS,
) -> EigenResult:
    """Every eigenvalue of M as an element of Z[q], certified by trial division.

    Specialise at q0 = 2, 3, ..., read off the integer roots and their
    multiplicities, Newton-lift each root in powers of (q - q0) and recentre.
    Base points are retried until a lift certifies.
    """
    chi = chi or char_poly(M)
    for q0 in range(2, 2 + base_points):
        eigenvalues = _try_base_point(M, chi, q0)
        if eigenvalues is not None:
            return EigenResult(tuple(sorted(eigenvalues, key=_eigen_key)), True, q0)
    raise EigenExtractionFailed(
        f"no certified Z[q] eigenvalues after {base_points} base points",
        document=poset_to_document(M.poset),
    )


@dataclass
class EigenCheck:
    passed: bool
    result: EigenResult | None = None
    problems: list[str] = field(default_factory=list)


def check_eigenvalues(
    p: Poset,
    max_extensions: int = DEFAULT_MAX_EXTENSIONS,
    base_points: int = DEFAULT_BASE_POINTS,
) -> EigenCheck:
    """Extract the eigenvalues of p's pedestal matrix and run the structural checks."""
    M = pedestal_matrix(p, max_extensions)
    try:
        result = eigen_polynomials(M, base_points=base_points)
    except EigenExtractionFailed as exc:
        logger.warning("%s for %s", exc, exc.document)
        return EigenCheck(False, None, [str(exc)])

    problems = []
    m = M.dim
    if any(e(0) != 1 for e in result.eigenvalues):
        problems.append("some eigenvalue is not 1 at q=0")
    total = ZERO
    for e in result.eigenvalues:
        total = total + e
    if total != IntPoly.constant(m):
        problems.append(f"eigenvalues sum to {total}, expected {m}")
    at_one = sorted(e(1) for e in result.eigenvalues)
    if at_one != [0] * (m - 1) + [m]:
        problems.append(f"values at q=1 are {at_one}")
    row_sum = M.row_sums()[0]
    if row_sum not in result.eigenvalues:
        problems.append(f"row sum {row_sum} is not an eigenvalue")
    return EigenCheck(not problems, result, problems)


def verify_integer_eigenvalues(
    p: Poset,
    max_extensions: int = DEFAULT_MAX_EXTENSIONS,
    base_points: int = DEFAULT_BASE_POINTS,
) -> bool:
    check = check_eigenvalues(p, max_extensions, base_points)
    for problem in check.problems:
        logger.info("%s: %s", poset_to_document(p), problem)
    return check.passed


def match_up_to_permutation(
    M: PedestalMatrix | Sequence[Sequence[int]],
    reference: Sequence[Sequence[int]],
) -> tuple[int, ...] | None:
    """Find perm with M[perm[i]][perm[j]] == reference[i][j] for all i, j.

    Works on exponent grids. Returns the first such permutation found by
    backtracking, or None.
    """
    grid = M.exponents if isinstance(M, PedestalMatrix) else tuple(tuple(r) for r in M)
    m = len(grid)
    if len(reference) != m or any(len(row) != m for row in reference):
        return None
    signature = [sorted(row) for row in grid]
    perm: list[int] = []
    used = [False] * m

    def extend(i: int) -> bool:
        if i == m:
            return True
        target = sorted(reference[i])
        for r in range(m):
            if used[r] or signature[r] != target or grid[r][r] != reference[i][i]:
                continue
            if all(
                grid[r][perm[j]] == reference[i][j] and grid[perm[j]][r] == reference[j][i]
                for j in range(i)
            ):
                used[r] = True
                perm.append(r)
                if extend(i + 1):
                    return True
                perm.pop()
                used[r] = False
        return False

    return tuple(perm) if extend(0) else None
