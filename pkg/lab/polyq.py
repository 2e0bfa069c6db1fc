"""Exact polynomials in q with integer coefficients, and truncated power series.

Everything here is immutable and works on plain Python integers, so nothing is
ever rounded. Generating functions and pedestal-matrix entries are built on top
of these two types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from lab.errors import EigenExtractionFailed, NonIntegerCoefficients, NotDivisible, SeriesMismatch

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    trimmed = [int(c) for c in coeffs]
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return tuple(trimmed)


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial in q. ``coeffs[d]`` is the coefficient of q^d.

    The zero polynomial is the empty tuple and reports degree -1, which stands
    in for minus infinity.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other) -> IntPoly:
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return poly_add(_coerce(other), -self)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        return poly_eval_int(self, x)

    def scalar_exact_div(self, k: int) -> IntPoly:
        """Divide every coefficient by the integer k, which must divide each one."""
        out = []
        for c in self.coeffs:
            quotient, remainder = divmod(c, k)
            if remainder:
                raise NotDivisible(f"{c} is not divisible by {k}")
            out.append(quotient)
        return IntPoly(out)

    def __str__(self) -> str:
        return poly_to_text(self)


def _coerce(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    return IntPoly(x + y for x, y in zip_longest(a.coeffs, b.coeffs, fillvalue=0))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPoly(out)


def poly_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return c with b*c == a, or raise NotDivisible."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ZERO
    if a.degree < b.degree:
        raise NotDivisible(f"({a}) is not divisible by ({b})")

    rem = list(a.coeffs)
    shift_max = a.degree - b.degree
    lc = b.leading
    quotient = [0] * (shift_max + 1)
    for shift in range(shift_max, -1, -1):
        c = rem[shift + b.degree]
        if not c:
            continue
        factor, remainder = divmod(c, lc)
        if remainder:
            raise NotDivisible(f"({a}) is not divisible by ({b}) over the integers")
        quotient[shift] = factor
        for t, bc in enumerate(b.coeffs):
            rem[shift + t] -= factor * bc
    if any(rem):
        raise NotDivisible(f"({a}) is not divisible by ({b})")
    return IntPoly(quotient)


def poly_eval_int(p: IntPoly, x: int) -> int:
    value = 0
    for c in reversed(p.coeffs):
        value = value * x + c
    return value


def poly_derivative(p: IntPoly) -> IntPoly:
    return IntPoly(d * c for d, c in enumerate(p.coeffs) if d)


def poly_taylor_shift(p: IntPoly, x0: int) -> IntPoly:
    """Return p(q + x0)."""
    result = ZERO
    step = IntPoly((x0, 1))
    for c in reversed(p.coeffs):
        result = result * step + c
    return result


def poly_interpolate(points: Sequence[tuple[int, int]]) -> IntPoly:
    """Interpolate through integer points, insisting on integer coefficients.

    Divided differences are kept as exact fractions and only the final
    monomial coefficients are required to be integral.
    """
    if not points:
        raise ValueError("interpolation needs at least one point")
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError(f"interpolation nodes must be distinct, got {xs}")

    n = len(xs)
    table = [Fraction(int(y)) for _, y in points]
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])

    monomial = [Fraction(0)]
    for k in range(n - 1, -1, -1):
        nxt = [Fraction(0)] * (len(monomial) + 1)
        for t, c in enumerate(monomial):
            nxt[t + 1] += c
            nxt[t] -= xs[k] * c
        nxt[0] += newton[k]
        monomial = nxt

    if any(c.denominator != 1 for c in monomial):
        raise NonIntegerCoefficients(
            f"points {list(points)} do not lie on an integer polynomial"
        )
    return IntPoly(int(c) for c in monomial)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in q known up to and including q^truncation_degree."""

    coeffs: tuple[int, ...]
    truncation_degree: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.truncation_degree < 0:
            raise ValueError("truncation degree must be non-negative")
        if len(self.coeffs) != self.truncation_degree + 1:
            raise ValueError(
                f"expected {self.truncation_degree + 1} coefficients, got {len(self.coeffs)}"
            )

    def _check(self, other: TruncatedSeries):
        if self.truncation_degree != other.truncation_degree:
            raise SeriesMismatch(
                f"truncation degrees differ: {self.truncation_degree} vs {other.truncation_degree}"
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.truncation_degree,
        )

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        n = self.truncation_degree
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out), n)

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)


def series_from_poly(p: IntPoly, N: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(p[d] for d in range(N + 1)), N)


def series_from_counts(counts: Sequence[int]) -> TruncatedSeries:
    return TruncatedSeries(tuple(counts), len(counts) - 1)


def series_rational(numer: IntPoly, denom_exponents: Sequence[int], N: int) -> TruncatedSeries:
    """Expand numer / prod_k (1 - q^k) up to degree N.

    Dividing by (1 - q^k) is a running prefix sum with stride k.
    """
    if N < 0:
        raise ValueError("truncation degree must be non-negative")
    coeffs = [numer[d] for d in range(N + 1)]
    for k in denom_exponents:
        if k < 1:
            raise ValueError(f"denominator exponents must be positive, got {k}")
        for d in range(k, N + 1):
            coeffs[d] += coeffs[d - k]
    return TruncatedSeries(tuple(coeffs), N)


def poly_to_text(p: IntPoly) -> str:
    if not p:
        return "0"
    pieces = []
    for d, c in enumerate(p.coeffs):
        if not c:
            continue
        size = abs(c)
        if d == 0:
            body = str(size)
        else:
            power = "q" if d == 1 else f"q^{d}"
            body = power if size == 1 else f"{size}*{power}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)


def _json_int(c: int):
    return c if INT64_MIN <= c <= INT64_MAX else str(c)


def poly_to_json(p: IntPoly) -> dict:
    return {"coeffs": [_json_int(c) for c in p.coeffs]}


def poly_from_json(doc: dict) -> IntPoly:
    return IntPoly(int(c) for c in doc["coeffs"])


DISPLAY_FACTORS = (
    (IntPoly((1, -1)), "1 - q"),
    (IntPoly((1, 1)), "1 + q"),
    (IntPoly((1, 1, 1)), "1 + q + q^2"),
    (IntPoly((1, -1, 1)), "1 - q + q^2"),
    (IntPoly((1, 0, 1)), "1 + q^2"),
)


def factor_display(p: IntPoly) -> str:
    """Render p as a product of small cyclotomic-style factors where it has any.

    Example: 1 - q - q^3 + q^4 renders as "(1 - q)^2*(1 + q + q^2)".
    """
    if not p:
        return "0"
    rest = p
    parts = []
    for factor, label in DISPLAY_FACTORS:
        power = 0
        while rest.degree >= factor.degree:
            try:
                rest = poly_exact_div(rest, factor)
            except NotDivisible:
                break
            power += 1
        if power:
            parts.append(f"({label})" if power == 1 else f"({label})^{power}")
    if not parts:
        return poly_to_text(p)
    if rest == -ONE:
        return "-" + "*".join(parts)
    if rest != ONE:
        parts.append(f"({poly_to_text(rest)})")
    return "*".join(parts)


def poly_from_volumes(volumes: Iterable[int]) -> IntPoly:
    """Σ q^v over a multiset of volumes."""
    out: list[int] = []
    for v in volumes:
        if v >= len(out):
            out.extend([0] * (v + 1 - len(out)))
        out[v] += 1
    return IntPoly(out)


def poly_pack(p: IntPoly, bits: int) -> int:
    """Kronecker substitution: p(2^bits) as one integer."""
    value = 0
    for c in reversed(p.coeffs):
        value = (value << bits) + c
    return value


def poly_unpack(value: int, bits: int) -> IntPoly:
    """Inverse of poly_pack for coefficients of absolute value below 2^(bits-1)."""
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    coeffs = []
    while value:
        digit = value & mask
        if digit >= half:
            digit -= 1 << bits
        coeffs.append(digit)
        value = (value - digit) >> bits
    return IntPoly(coeffs)


def _fraction_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    def trim(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = trim(list(a)), trim(list(b))
    while b:
        rem = list(a)
        while len(rem) >= len(b) and rem:
            factor = rem[-1] / b[-1]
            shift = len(rem) - len(b)
            for t, c in enumerate(b):
                rem[shift + t] -= factor * c
            trim(rem)
        a, b = b, rem
    lead = a[-1]
    return [c / lead for c in a]


def poly_squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p') for monic p; the result is monic with integer coefficients."""
    if p.degree < 1:
        return p
    if p.leading != 1:
        raise ValueError("squarefree part is only taken of monic polynomials")
    g = _fraction_gcd([Fraction(c) for c in p.coeffs], [Fraction(c) for c in poly_derivative(p).coeffs])
    if len(g) == 1:
        return p
    if any(c.denominator != 1 for c in g):
        raise NonIntegerCoefficients(f"gcd of ({p}) and its derivative is not integral")
    return poly_exact_div(p, IntPoly(int(c) for c in g))


def _mod_trim(x: list[int]) -> list[int]:
    while x and x[-1] == 0:
        x.pop()
    return x


def _mod_gcd_degree(a: list[int], b: list[int], prime: int) -> int:
    a = _mod_trim([c % prime for c in a])
    b = _mod_trim([c % prime for c in b])
    while b:
        inverse = pow(b[-1], -1, prime)
        while len(a) >= len(b):
            factor = a[-1] * inverse % prime
            shift = len(a) - len(b)
            for t, c in enumerate(b):
                a[shift + t] = (a[shift + t] - factor * c) % prime
            _mod_trim(a)
        a, b = b, a
    return len(a) - 1


PRIMES = (1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061, 1063, 1069)


def poly_integer_roots(p: IntPoly) -> dict[int, int] | None:
    """Integer roots of a monic p with multiplicities, or None if p has any other root.

    Roots of the squarefree part are found modulo a prime where it stays
    squarefree, Hensel-lifted past the Cauchy bound, and checked exactly.
    """
    if p.degree < 1:
        return {}
    g = poly_squarefree_part(p)
    bound = 1 + max(abs(c) for c in g.coeffs[:-1])
    dg = poly_derivative(g)
    for prime in PRIMES:
        if _mod_gcd_degree(list(g.coeffs), list(dg.coeffs), prime) == 0:
            break
    else:
        raise EigenExtractionFailed(f"no prime in {PRIMES} keeps ({g}) squarefree")

    modulus = prime
    while modulus <= 2 * bound:
        modulus *= modulus
    candidates = []
    for x in range(prime):
        if g(x) % prime:
            continue
        r, m = x, prime
        while m < modulus:
            m = min(m * m, modulus)
            r = (r - g(r) * pow(dg(r), -1, m)) % m
        if r > modulus // 2:
            r -= modulus
        candidates.append(r)

    roots: dict[int, int] = {}
    rest = p
    for r in sorted(candidates):
        if g(r) != 0:
            continue
        while rest.degree >= 1 and rest(r) == 0:
            rest = poly_exact_div(rest, IntPoly((-r, 1)))
            roots[r] = roots.get(r, 0) + 1
    if rest.degree >= 1:
        return None
    return roots


def truncated_shift(p: IntPoly, x0: int, order: int) -> list[int]:
    """The first ``order`` coefficients of p(t + x0) in t."""
    out = [0] * order
    for c in reversed(p.coeffs):
        # out <- out * (t + x0) + c, dropping t^order and above
        for t in range(order - 1, 0, -1):
            out[t] = out[t] * x0 + out[t - 1]
        out[0] = out[0] * x0 + c
    return out
