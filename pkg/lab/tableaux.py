"""Standard and semistandard Young tableaux on skew shapes.

Entries are stored as a tuple in the reading order of the shape's cells. SsYT
entries start at 0. This module also holds the descent statistics, the plinth
of a standard tableau and the volume-respecting bijection between SsYT and
pairs (plinth, weakly increasing sequence).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from lab.errors import InternalInvariantViolation, InvalidPartition
from lab.poset import (
    LinearExtension,
    Poset,
    check_weak_sequence,
    linear_extensions,
    poset_from_skew_shape,
)
from lab.polyq import IntPoly, TruncatedSeries, poly_from_volumes, series_rational
from lab.shapes import Cell, SkewShape, shape_cells, shape_conjugate, shape_to_json

logger = logging.getLogger(__name__)


def _neighbours(shape: SkewShape, cells: Sequence[Cell]):
    """Index pairs (left, right) along rows and (upper, lower) down columns."""
    position = {c: k for k, c in enumerate(cells)}
    row_pairs, column_pairs = [], []
    for k, c in enumerate(cells):
        right = position.get(Cell(c.i + 1, c.j))
        if right is not None:
            row_pairs.append((k, right))
        lower = position.get(Cell(c.i, c.j + 1))
        if lower is not None:
            column_pairs.append((k, lower))
    return row_pairs, column_pairs


def _rows(shape: SkewShape, cells: Sequence[Cell], entries: Sequence[int]) -> list[list]:
    rows: list[list] = [[None] * shape.inner.part(j) for j in range(1, shape.rows + 1)]
    for c, value in zip(cells, entries):
        rows[c.j - 1].append(value)
    return rows


def _flatten_rows(shape: SkewShape, rows: Sequence[Sequence]) -> tuple[int, ...]:
    if len(rows) != shape.rows:
        raise InvalidPartition(f"expected {shape.rows} rows, got {len(rows)}")
    entries = []
    for j, row in enumerate(rows, start=1):
        values = [v for v in row if v is not None]
        if len(values) != shape.outer.part(j) - shape.inner.part(j):
            raise InvalidPartition(f"row {j} has {len(values)} entries, shape needs "
                                   f"{shape.outer.part(j) - shape.inner.part(j)}")
        entries.extend(values)
    return tuple(entries)


@dataclass(frozen=True)
class StandardTableau:
    shape: SkewShape
    entries: tuple[int, ...]
    cells: tuple[Cell, ...] = field(init=False, repr=False, compare=False)
    positions: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cells = tuple(shape_cells(self.shape))
        entries = tuple(int(v) for v in self.entries)
        n = len(cells)
        if sorted(entries) != list(range(1, n + 1)):
            raise InvalidPartition(f"entries {entries} are not a permutation of 1..{n}")
        row_pairs, column_pairs = _neighbours(self.shape, cells)
        for a, b in row_pairs + column_pairs:
            if entries[a] >= entries[b]:
                raise InvalidPartition(
                    f"entries must increase from {cells[a]} to {cells[b]}: {entries}"
                )
        positions = [0] * (n + 1)
        for k, value in enumerate(entries):
            positions[value] = k
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "positions", tuple(positions))

    @property
    def size(self) -> int:
        return len(self.entries)

    def cell_of(self, k: int) -> Cell:
        """Q(k): the cell holding entry k."""
        return self.cells[self.positions[k]]

    def entry(self, cell: Cell) -> int:
        return self.entries[self.cells.index(cell)]

    def rows(self) -> list[list]:
        return _rows(self.shape, self.cells, self.entries)

    def to_json(self) -> dict:
        return {"shape": shape_to_json(self.shape), "rows": self.rows()}


@dataclass(frozen=True)
class SemistandardTableau:
    shape: SkewShape
    entries: tuple[int, ...]
    cells: tuple[Cell, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cells = tuple(shape_cells(self.shape))
        entries = tuple(int(v) for v in self.entries)
        if len(entries) != len(cells):
            raise InvalidPartition(f"expected {len(cells)} entries, got {len(entries)}")
        if any(v < 0 for v in entries):
            raise InvalidPartition(f"entries must be non-negative: {entries}")
        row_pairs, column_pairs = _neighbours(self.shape, cells)
        for a, b in row_pairs:
            if entries[a] > entries[b]:
                raise InvalidPartition(f"row must weakly increase at {cells[a]}: {entries}")
        for a, b in column_pairs:
            if entries[a] >= entries[b]:
                raise InvalidPartition(f"column must strictly increase at {cells[a]}: {entries}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "cells", cells)

    @property
    def volume(self) -> int:
        return sum(self.entries)

    def rows(self) -> list[list]:
        return _rows(self.shape, self.cells, self.entries)

    def to_json(self) -> dict:
        return {"shape": shape_to_json(self.shape), "rows": self.rows()}


def standard_from_rows(shape: SkewShape, rows: Sequence[Sequence]) -> StandardTableau:
    return StandardTableau(shape, _flatten_rows(shape, rows))


def semistandard_from_rows(shape: SkewShape, rows: Sequence[Sequence]) -> SemistandardTableau:
    return SemistandardTableau(shape, _flatten_rows(shape, rows))


@dataclass(frozen=True)
class DescentData:
    descent_cells: frozenset[Cell]
    descent_contents: frozenset[int]
    maj: int


def as_linear_extension(Q: StandardTableau, poset: Poset | None = None) -> LinearExtension:
    return LinearExtension(poset or poset_from_skew_shape(Q.shape), Q.entries)


def from_linear_extension(s: SkewShape, P: LinearExtension) -> StandardTableau:
    return StandardTableau(s, P.rank)


def enumerate_syt(s: SkewShape) -> Iterator[StandardTableau]:
    """Every SYT of s, lexicographic in the reading-order entry word."""
    for extension in linear_extensions(poset_from_skew_shape(s)):
        yield StandardTableau(s, extension.rank)


def descent_data(Q: StandardTableau) -> DescentData:
    contents = frozenset(
        k for k in range(1, Q.size) if Q.cell_of(k + 1).j > Q.cell_of(k).j
    )
    return DescentData(
        descent_cells=frozenset(Q.cell_of(k) for k in contents),
        descent_contents=contents,
        maj=sum(contents),
    )


def _descents_before(Q: StandardTableau) -> list[int]:
    """before[k] = number of descents d < k, for k = 1..n (index 0 unused)."""
    descents = descent_data(Q).descent_contents
    before = [0] * (Q.size + 1)
    for k in range(2, Q.size + 1):
        before[k] = before[k - 1] + (1 if k - 1 in descents else 0)
    return before


def plinth(Q: StandardTableau) -> SemistandardTableau:
    before = _descents_before(Q)
    return SemistandardTableau(Q.shape, tuple(before[k] for k in Q.entries))


def plinth_polynomial(s: SkewShape) -> IntPoly:
    return poly_from_volumes([plinth(Q).volume for Q in enumerate_syt(s)])


def maj_polynomial(s: SkewShape) -> IntPoly:
    return poly_from_volumes([descent_data(Q).maj for Q in enumerate_syt(s)])


def stanley_series(s: SkewShape, N: int) -> TruncatedSeries:
    """Σ_Q q^maj(Q) / (1-q)...(1-q^n), truncated at degree N."""
    return series_rational(maj_polynomial(s), range(1, s.size + 1), N)


def standardize(T: SemistandardTableau) -> StandardTableau:
    order = sorted(range(len(T.cells)), key=lambda k: (T.entries[k], T.cells[k].i))
    entries = [0] * len(order)
    for rank, k in enumerate(order, start=1):
        entries[k] = rank
    return StandardTableau(T.shape, tuple(entries))


def bss_forward(Q: StandardTableau, Y: Sequence[int]) -> SemistandardTableau:
    Y = check_weak_sequence(Y, Q.size)
    base = plinth(Q)
    return SemistandardTableau(
        Q.shape,
        tuple(p + Y[k - 1] for p, k in zip(base.entries, Q.entries)),
    )


def bss_inverse(T: SemistandardTableau) -> tuple[StandardTableau, tuple[int, ...]]:
    Q = standardize(T)
    base = plinth(Q)
    Y = [0] * Q.size
    for position, k in enumerate(Q.entries):
        Y[k - 1] = T.entries[position] - base.entries[position]
    Y = tuple(Y)
    if any(y < 0 for y in Y) or any(Y[k] > Y[k + 1] for k in range(len(Y) - 1)):
        raise InternalInvariantViolation(f"reconstructed sequence {Y} for {T.rows()}")
    if bss_forward(Q, Y) != T:
        raise InternalInvariantViolation(f"round trip failed for {T.rows()}")
    return Q, Y


def iter_ssyt(s: SkewShape, N: int) -> Iterator[SemistandardTableau]:
    """Every SsYT of s with volume ≤ N, filled cell by cell in reading order."""
    cells = shape_cells(s)
    position = {c: k for k, c in enumerate(cells)}
    left = [position.get(Cell(c.i - 1, c.j)) for c in cells]
    up = [position.get(Cell(c.i, c.j - 1)) for c in cells]
    # cells weakly south-east of c carry at least c's value
    weight = [sum(1 for d in cells if d.i >= c.i and d.j >= c.j) for c in cells]
    values = [0] * len(cells)

    def fill(k: int, volume: int) -> Iterator[tuple[int, ...]]:
        if k == len(cells):
            yield tuple(values)
            return
        lowest = 0
        if left[k] is not None:
            lowest = values[left[k]]
        if up[k] is not None:
            lowest = max(lowest, values[up[k]] + 1)
        v = lowest
        while volume + v * weight[k] <= N:
            values[k] = v
            yield from fill(k + 1, volume + v)
            v += 1

    for entries in fill(0, 0):
        yield SemistandardTableau(s, entries)


def ssyt_counts(s: SkewShape, N: int) -> list[int]:
    if N < 0:
        raise ValueError("volume bound must be non-negative")
    counts = [0] * (N + 1)
    for T in iter_ssyt(s, N):
        counts[T.volume] += 1
    return counts


def transpose(Q: StandardTableau) -> StandardTableau:
    conjugate = shape_conjugate(Q.shape)
    by_cell = {Cell(c.j, c.i): v for c, v in zip(Q.cells, Q.entries)}
    return StandardTableau(conjugate, tuple(by_cell[c] for c in shape_cells(conjugate)))
