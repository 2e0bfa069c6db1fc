"""P-ascents, pedestals, pedestal polynomials and the bijection b_St.

Fix a reference linear extension P. For another linear extension Q, position
k is a P-ascent when P orders Q^{-1}(k) and Q^{-1}(k+1) the other way round.
The pedestal d_P(Q) assigns to Q^{-1}(k) the number of P-ascents below k.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from lab.errors import InternalInvariantViolation, InvalidPartition
from lab.poset import (
    Filter,
    LinearExtension,
    Poset,
    XPartition,
    check_same_poset,
    check_weak_sequence,
    linear_extensions,
    minimal_semistandard,
)
from lab.polyq import IntPoly, TruncatedSeries, poly_from_volumes, series_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AscentData:
    ascent_cells: frozenset[int]
    ascent_contents: frozenset[int]


@dataclass(frozen=True, eq=False)
class Pedestal:
    """d_P(Q). Two pedestals are equal when their X-partitions are."""

    base: XPartition
    source: tuple[LinearExtension, LinearExtension]

    @property
    def volume(self) -> int:
        return self.base.volume

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pedestal):
            return NotImplemented
        return self.base == other.base

    def __hash__(self) -> int:
        return hash(self.base)

    def to_json(self) -> dict:
        return self.base.to_json()


def ascent_data(P: LinearExtension, Q: LinearExtension) -> AscentData:
    p = check_same_poset(P, Q)
    contents = frozenset(
        k for k in range(1, p.n)
        if P.rank[Q.element_at(k + 1)] < P.rank[Q.element_at(k)]
    )
    return AscentData(
        ascent_cells=frozenset(Q.element_at(k) for k in contents),
        ascent_contents=contents,
    )


def _pedestal_values(P: LinearExtension, Q: LinearExtension) -> tuple[int, ...]:
    n = P.poset.n
    values = [0] * n
    count = 0
    for k in range(1, n + 1):
        a = Q.order[k - 1]
        values[a] = count
        if k < n and P.rank[Q.order[k]] < P.rank[a]:
            count += 1
    return tuple(values)


def pedestal(P: LinearExtension, Q: LinearExtension) -> Pedestal:
    p = check_same_poset(P, Q)
    return Pedestal(XPartition(p, _pedestal_values(P, Q)), (P, Q))


def pedestal_volume(P: LinearExtension, Q: LinearExtension) -> int:
    """|d_P(Q)| without building the X-partition."""
    check_same_poset(P, Q)
    return sum(_pedestal_values(P, Q))


def pedestal_volumes(p: Poset, P: LinearExtension, extensions: Sequence[LinearExtension] | None = None) -> list[int]:
    """Volumes of d_P(Q) for Q over all linear extensions in canonical order."""
    extensions = list(extensions) if extensions is not None else list(linear_extensions(p))
    return [pedestal_volume(P, Q) for Q in extensions]


def pedestal_polynomial(p: Poset, P: LinearExtension) -> IntPoly:
    if P.poset != p:
        raise InvalidPartition("reference extension does not extend this poset")
    return poly_from_volumes(pedestal_volumes(p, P))


def pedestal_polynomials(p: Poset) -> list[tuple[LinearExtension, IntPoly]]:
    """G_P(q) for every reference P, in canonical order."""
    extensions = list(linear_extensions(p))
    return [(P, poly_from_volumes(pedestal_volumes(p, P, extensions))) for P in extensions]


def bst_forward(P: LinearExtension, Q: LinearExtension, Y: Sequence[int]) -> XPartition:
    p = check_same_poset(P, Q)
    Y = check_weak_sequence(Y, p.n)
    base = _pedestal_values(P, Q)
    return XPartition(p, tuple(base[a] + Y[Q.rank[a] - 1] for a in range(p.n)))


def bst_inverse(P: LinearExtension, T: XPartition) -> tuple[LinearExtension, tuple[int, ...]]:
    """Sort elements by (T-value, P-rank) to recover Q, then peel off the pedestal.

    Along Q the pedestal grows exactly at P-ascents, so ties in T can only
    occur where P agrees with Q.
    """
    p = check_same_poset(P, T)
    order = sorted(range(p.n), key=lambda a: (T.values[a], P.rank[a]))
    try:
        Q = LinearExtension.from_order(p, order)
    except InvalidPartition as exc:
        raise InternalInvariantViolation(f"sorted order is not a linear extension: {exc}") from exc
    base = _pedestal_values(P, Q)
    Y = tuple(T.values[a] - base[a] for a in Q.order)
    if any(y < 0 for y in Y) or any(Y[k] > Y[k + 1] for k in range(len(Y) - 1)):
        raise InternalInvariantViolation(f"reconstructed sequence {Y} for {T.values}")
    if bst_forward(P, Q, Y) != T:
        raise InternalInvariantViolation(f"round trip failed for {T.values}")
    return Q, Y


def semistandard_polynomial_via_pedestals(
    p: Poset, f: Filter, P: LinearExtension, N: int
) -> TruncatedSeries:
    """G_{X,F}(q) = q^{|t|} G_P(q) / (1-q)...(1-q^n), truncated at N."""
    shift = minimal_semistandard(p, f).volume
    numer = pedestal_polynomial(p, P) * IntPoly.monomial(shift)
    return series_rational(numer, range(1, p.n + 1), N)


def pedestal_statistics(p: Poset, f: Filter, P: LinearExtension) -> Counter:
    """Multiset {|d_P(Q)| + |t_{X,F}|} over Q."""
    shift = minimal_semistandard(p, f).volume
    return Counter(v + shift for v in pedestal_volumes(p, P))
