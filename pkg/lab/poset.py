"""Finite posets, filters, linear extensions and X-partitions.

Elements are addressed by their index in declaration order, which is also the
canonical order every enumeration follows. For posets built from a skew shape
the declaration order is the reading order of the cells.
"""

from __future__ import annotations

import logging
import random
import string
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from lab.errors import (
    CycleDetected,
    InvalidFilter,
    InvalidPartition,
    MismatchedPoset,
    UnknownLabel,
)
from lab.shapes import SkewShape, shape_cells

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Poset:
    """A finite poset stored as the full reflexive-transitive relation."""

    labels: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False)
    _below: tuple = field(init=False, repr=False, compare=False)
    _above: tuple = field(init=False, repr=False, compare=False)
    _topo: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError(f"duplicate labels in {self.labels}")
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise ValueError("relation must be an n×n table")
        leq = self.leq
        for a in range(n):
            if not leq[a][a]:
                raise ValueError(f"relation is not reflexive at {self.labels[a]}")
            for b in range(n):
                if a != b and leq[a][b] and leq[b][a]:
                    raise CycleDetected(
                        f"{self.labels[a]} and {self.labels[b]} are mutually below each other"
                    )
                if leq[a][b]:
                    for c in range(n):
                        if leq[b][c] and not leq[a][c]:
                            raise ValueError("relation is not transitive")
        below = tuple(tuple(b for b in range(n) if b != a and leq[b][a]) for a in range(n))
        above = tuple(tuple(b for b in range(n) if b != a and leq[a][b]) for a in range(n))
        object.__setattr__(self, "_index", {label: k for k, label in enumerate(self.labels)})
        object.__setattr__(self, "_below", below)
        object.__setattr__(self, "_above", above)
        object.__setattr__(
            self, "_topo", tuple(sorted(range(n), key=lambda a: (len(below[a]), a)))
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def below(self, a: int) -> tuple[int, ...]:
        """Elements strictly below a."""
        return self._below[a]

    def above(self, a: int) -> tuple[int, ...]:
        """Elements strictly above a."""
        return self._above[a]

    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (a, b): a < b with nothing strictly between."""
        return [
            (a, b)
            for a in range(self.n)
            for b in self.above(a)
            if not any(self.lt(a, c) and self.lt(c, b) for c in range(self.n))
        ]


def poset_from_covers(labels: Sequence[str], covers: Sequence[tuple[str, str]]) -> Poset:
    labels = tuple(str(label) for label in labels)
    index = {label: k for k, label in enumerate(labels)}
    if len(index) != len(labels):
        raise ValueError(f"duplicate labels in {labels}")
    n = len(labels)
    rel = [[a == b for b in range(n)] for a in range(n)]
    for lo, hi in covers:
        for label in (lo, hi):
            if label not in index:
                raise UnknownLabel(f"cover ({lo}, {hi}) uses undeclared element {label!r}")
        if lo == hi:
            raise CycleDetected(f"element {lo!r} covers itself")
        rel[index[lo]][index[hi]] = True
    # Warshall closure
    for k in range(n):
        for a in range(n):
            if rel[a][k]:
                row_k = rel[k]
                row_a = rel[a]
                for b in range(n):
                    if row_k[b]:
                        row_a[b] = True
    for a in range(n):
        for b in range(a + 1, n):
            if rel[a][b] and rel[b][a]:
                raise CycleDetected(f"covers form a cycle through {labels[a]!r} and {labels[b]!r}")
    return Poset(labels, tuple(tuple(row) for row in rel))


def poset_from_skew_shape(s: SkewShape) -> Poset:
    cells = shape_cells(s)
    rel = tuple(
        tuple(c.i <= d.i and c.j <= d.j for d in cells)
        for c in cells
    )
    return Poset(tuple(str(c) for c in cells), rel)


def _default_labels(n: int) -> tuple[str, ...]:
    if n <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"x{k}" for k in range(1, n + 1))


def chain(n: int) -> Poset:
    labels = _default_labels(n)
    return poset_from_covers(labels, list(zip(labels, labels[1:])))


def antichain(n: int) -> Poset:
    return poset_from_covers(_default_labels(n), [])


def random_poset(n: int, rng: random.Random, edge_probability: float = 0.3) -> Poset:
    """Random DAG on x1..xn; edges only go from lower to higher index."""
    labels = tuple(f"x{k}" for k in range(1, n + 1))
    covers = [
        (labels[a], labels[b])
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < edge_probability
    ]
    return poset_from_covers(labels, covers)


@dataclass(frozen=True)
class Filter:
    """Surjective order-respecting map onto floors 1..k, by element index."""

    floors: tuple[int, ...]
    k: int


def make_filter(p: Poset, floors: Sequence[int] | Mapping[str, int]) -> Filter:
    if isinstance(floors, Mapping):
        missing = [label for label in p.labels if label not in floors]
        if missing:
            raise InvalidFilter(f"filter has no floor for {missing}")
        extra = [label for label in floors if label not in p.labels]
        if extra:
            raise UnknownLabel(f"filter names unknown elements {extra}")
        floors = [floors[label] for label in p.labels]
    floors = tuple(int(f) for f in floors)
    if len(floors) != p.n:
        raise InvalidFilter(f"expected {p.n} floors, got {len(floors)}")
    k = max(floors, default=0)
    if set(floors) != set(range(1, k + 1)):
        raise InvalidFilter(f"floors {sorted(set(floors))} are not onto 1..{k}")
    for a in range(p.n):
        for b in p.above(a):
            if floors[a] > floors[b]:
                raise InvalidFilter(
                    f"{p.labels[a]} ≼ {p.labels[b]} but floor {floors[a]} > {floors[b]}"
                )
    return Filter(floors, k)


def trivial_filter(p: Poset) -> Filter:
    return Filter((1,) * p.n, 1 if p.n else 0)


def row_filter(s: SkewShape) -> Filter:
    """Floor of a cell is its row, renumbered over the non-empty rows."""
    cells = shape_cells(s)
    rows = sorted({c.j for c in cells})
    renumber = {j: k for k, j in enumerate(rows, start=1)}
    return Filter(tuple(renumber[c.j] for c in cells), len(rows))


def random_filter(p: Poset, rng: random.Random) -> Filter:
    """Cut a random linear extension into k non-empty consecutive blocks."""
    if p.n == 0:
        return trivial_filter(p)
    remaining = set(range(p.n))
    placed: set[int] = set()
    order = []
    while remaining:
        ready = sorted(a for a in remaining if all(b in placed for b in p.below(a)))
        pick = rng.choice(ready)
        order.append(pick)
        placed.add(pick)
        remaining.remove(pick)
    k = rng.randint(1, p.n)
    cuts = sorted(rng.sample(range(1, p.n), k - 1))
    floors = [0] * p.n
    floor, bounds = 1, iter(cuts)
    next_cut = next(bounds, None)
    for position, a in enumerate(order):
        if next_cut is not None and position == next_cut:
            floor += 1
            next_cut = next(bounds, None)
        floors[a] = floor
    return make_filter(p, floors)


@dataclass(frozen=True)
class LinearExtension:
    """A standard X-partition: rank[a] in 1..n, increasing along the order."""

    poset: Poset
    rank: tuple[int, ...]
    order: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, rank = self.poset, tuple(int(r) for r in self.rank)
        if sorted(rank) != list(range(1, p.n + 1)):
            raise InvalidPartition(f"ranks {rank} are not a bijection onto 1..{p.n}")
        for a in range(p.n):
            for b in p.above(a):
                if rank[a] >= rank[b]:
                    raise InvalidPartition(
                        f"{p.labels[a]} ≺ {p.labels[b]} but ranks are {rank[a]} ≥ {rank[b]}"
                    )
        order = [0] * p.n
        for a, r in enumerate(rank):
            order[r - 1] = a
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "order", tuple(order))

    @classmethod
    def from_order(cls, poset: Poset, order: Sequence[int]) -> LinearExtension:
        rank = [0] * poset.n
        for position, a in enumerate(order, start=1):
            rank[a] = position
        return cls(poset, tuple(rank))

    def element_at(self, k: int) -> int:
        """Q^{-1}(k) for 1-based k."""
        return self.order[k - 1]

    def to_json(self) -> dict:
        return {label: r for label, r in zip(self.poset.labels, self.rank)}


def check_same_poset(*extensions: LinearExtension | XPartition) -> Poset:
    first = extensions[0].poset
    for other in extensions[1:]:
        if other.poset is not first and other.poset != first:
            raise MismatchedPoset("arguments live on different posets")
    return first


def linear_extensions(p: Poset) -> Iterator[LinearExtension]:
    """Every linear extension once, ordered lexicographically by rank word."""
    found: list[tuple[int, ...]] = []
    rank = [0] * p.n
    placed = [False] * p.n

    def extend(position: int):
        if position > p.n:
            found.append(tuple(rank))
            return
        for a in range(p.n):
            if not placed[a] and all(placed[b] for b in p.below(a)):
                placed[a] = True
                rank[a] = position
                extend(position + 1)
                placed[a] = False
                rank[a] = 0

    extend(1)
    found.sort()
    for word in found:
        yield LinearExtension(p, word)


def count_linear_extensions(p: Poset) -> int:
    """Count by dynamic programming over down-closed subsets."""
    full = (1 << p.n) - 1
    below_mask = [sum(1 << b for b in p.below(a)) for a in range(p.n)]
    ways = {0: 1}
    for _ in range(p.n):
        nxt: dict[int, int] = {}
        for mask, count in ways.items():
            for a in range(p.n):
                bit = 1 << a
                if not mask & bit and below_mask[a] & mask == below_mask[a]:
                    nxt[mask | bit] = nxt.get(mask | bit, 0) + count
        ways = nxt
    return ways.get(full, 1 if p.n == 0 else 0)


@dataclass(frozen=True)
class XPartition:
    """Order-preserving map from the poset to the non-negative integers."""

    poset: Poset
    values: tuple[int, ...]

    def __post_init__(self):
        p, values = self.poset, tuple(int(v) for v in self.values)
        if len(values) != p.n:
            raise InvalidPartition(f"expected {p.n} values, got {len(values)}")
        if any(v < 0 for v in values):
            raise InvalidPartition(f"values must be non-negative: {values}")
        for a in range(p.n):
            for b in p.above(a):
                if values[a] > values[b]:
                    raise InvalidPartition(
                        f"{p.labels[a]} ≼ {p.labels[b]} but values {values[a]} > {values[b]}"
                    )
        object.__setattr__(self, "values", values)

    @property
    def volume(self) -> int:
        return sum(self.values)

    def below(self, other: XPartition) -> bool:
        """Pointwise comparison T ≼ other."""
        return all(a <= b for a, b in zip(self.values, other.values))

    def to_json(self) -> dict:
        return {"values": {label: v for label, v in zip(self.poset.labels, self.values)}}


def _strict(f: Filter | None, lower: int, upper: int) -> int:
    return 1 if f is not None and f.floors[lower] < f.floors[upper] else 0


def _fillings(p: Poset, N: int, f: Filter | None) -> Iterator[tuple[int, ...]]:
    topo = p.topological_order()
    values = [0] * p.n

    def assign(position: int, volume: int) -> Iterator[tuple[int, ...]]:
        if position == p.n:
            yield tuple(values)
            return
        a = topo[position]
        lowest = max((values[b] + _strict(f, b, a) for b in p.below(a)), default=0)
        # every element above a takes at least the same value
        weight = 1 + len(p.above(a))
        v = lowest
        while volume + v * weight <= N:
            values[a] = v
            yield from assign(position + 1, volume + v)
            v += 1
        values[a] = 0

    yield from assign(0, 0)


def iter_x_partitions(p: Poset, N: int, f: Filter | None = None) -> Iterator[XPartition]:
    """All X-partitions of volume ≤ N; only semistandard ones when a filter is given."""
    for values in _fillings(p, N, f):
        yield XPartition(p, values)


def _count(p: Poset, N: int, f: Filter | None) -> list[int]:
    if N < 0:
        raise ValueError("volume bound must be non-negative")
    counts = [0] * (N + 1)
    for values in _fillings(p, N, f):
        counts[sum(values)] += 1
    return counts


def x_partition_counts(p: Poset, N: int) -> list[int]:
    return _count(p, N, None)


def semistandard_counts(p: Poset, f: Filter, N: int) -> list[int]:
    return _count(p, N, f)


def minimal_semistandard(p: Poset, f: Filter) -> XPartition:
    values = [0] * p.n
    for a in p.topological_order():
        values[a] = max((values[b] + _strict(f, b, a) for b in p.below(a)), default=0)
    return XPartition(p, tuple(values))


def is_semistandard(p: Poset, f: Filter, T: XPartition | Sequence[int]) -> bool:
    values = tuple(T.values) if isinstance(T, XPartition) else tuple(T)
    if len(values) != p.n or any(v < 0 for v in values):
        return False
    for a in range(p.n):
        for b in p.above(a):
            if values[a] > values[b]:
                return False
            if f.floors[a] < f.floors[b] and values[a] >= values[b]:
                return False
    return True


def poset_to_document(p: Poset, f: Filter | None = None) -> dict:
    doc = {
        "elements": list(p.labels),
        "covers": [[p.labels[a], p.labels[b]] for a, b in p.covers()],
    }
    if f is not None:
        doc["filter"] = {label: floor for label, floor in zip(p.labels, f.floors)}
    return doc


def poset_from_document(doc: Mapping) -> tuple[Poset, Filter | None]:
    p = poset_from_covers(doc["elements"], [tuple(edge) for edge in doc.get("covers", [])])
    floors = doc.get("filter")
    return p, (make_filter(p, floors) if floors is not None else None)


def check_weak_sequence(Y: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a member of 𝒴_n: n non-negative integers, weakly increasing."""
    Y = tuple(int(y) for y in Y)
    if len(Y) != n:
        raise InvalidPartition(f"sequence has {len(Y)} terms, expected {n}")
    if any(y < 0 for y in Y) or any(Y[k] > Y[k + 1] for k in range(n - 1)):
        raise InvalidPartition(f"sequence {Y} is not weakly increasing and non-negative")
    return Y


def iter_weak_sequences(n: int, max_sum: int) -> Iterator[tuple[int, ...]]:
    """Members of 𝒴_n with sum ≤ max_sum, lexicographically."""

    def extend(prefix: tuple[int, ...], lowest: int, remaining: int) -> Iterator[tuple[int, ...]]:
        left = n - len(prefix)
        if left == 0:
            yield prefix
            return
        v = lowest
        while v * left <= remaining:
            yield from extend(prefix + (v,), v, remaining - v)
            v += 1

    if max_sum >= 0:
        yield from extend((), 0, max_sum)


def shift_compatible(p: Poset, f: Filter) -> bool:
    """True when T -> T - t_{X,F} maps semistandard X-partitions onto all X-partitions.

    Adding t to an X-partition always gives a semistandard one. The converse
    holds exactly when t climbs by the strictness of every cover and no more;
    otherwise some semistandard T has T - t outside the X-partitions (for
    instance the skew shape 2,2/1 under its row filter).
    """
    t = minimal_semistandard(p, f).values
    return all(t[b] - t[a] == _strict(f, a, b) for a, b in p.covers())
