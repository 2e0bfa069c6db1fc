"""Partitions, skew shapes and cells.

A cell (i, j) sits at position i of row j; i grows to the right and j grows
downward, both 1-based. Cells of a skew shape are listed in reading order:
row 1 left to right, then row 2, and so on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from lab.errors import InvalidShape, ParseError


class Cell(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def reading_key(cell: Cell) -> tuple[int, int]:
    return cell.j, cell.i


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise InvalidShape(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise InvalidShape(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, j: int) -> int:
        """Length of row j (1-based), zero past the last row."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1))
        )

    def contains(self, other: Partition) -> bool:
        return other.length <= self.length and all(
            other.part(j) <= self.part(j) for j in range(1, other.length + 1)
        )

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


EMPTY = Partition()


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InvalidShape(f"inner partition {self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def rows(self) -> int:
        return self.outer.length

    @property
    def is_straight(self) -> bool:
        return self.inner.length == 0

    def contains(self, cell: Cell) -> bool:
        return self.inner.part(cell.j) < cell.i <= self.outer.part(cell.j)

    def cells(self) -> list[Cell]:
        return shape_cells(self)

    def conjugate(self) -> SkewShape:
        return shape_conjugate(self)

    def __str__(self) -> str:
        return shape_to_text(self)


def shape_cells(s: SkewShape) -> list[Cell]:
    return [
        Cell(i, j)
        for j in range(1, s.outer.length + 1)
        for i in range(s.inner.part(j) + 1, s.outer.part(j) + 1)
    ]


def shape_conjugate(s: SkewShape) -> SkewShape:
    return SkewShape(s.outer.conjugate(), s.inner.conjugate())


_SHAPE_RE = re.compile(r"^\s*(\d+(?:\s*,\s*\d+)*)?\s*(?:/\s*(\d+(?:\s*,\s*\d+)*)?\s*)?$")


def _parse_parts(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    parts = [int(token) for token in text.split(",")]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def shape_parse(text: str) -> SkewShape:
    """Parse "3,2" or "3,2/1". Trailing zero parts are ignored."""
    match = _SHAPE_RE.match(text)
    if match is None:
        raise ParseError(f"cannot parse shape {text!r}; expected e.g. '3,2' or '3,2/1'")
    outer, inner = (_parse_parts(group) for group in match.groups())
    return SkewShape(Partition(outer), Partition(inner))


def shape_to_text(s: SkewShape) -> str:
    if s.is_straight:
        return str(s.outer)
    return f"{s.outer}/{s.inner}"


def shape_to_json(s: SkewShape) -> dict:
    return {"outer": list(s.outer.parts), "inner": list(s.inner.parts)}


def shape_from_json(doc: dict) -> SkewShape:
    return SkewShape(Partition(tuple(doc["outer"])), Partition(tuple(doc.get("inner", ()))))


def iter_partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n, largest first part first."""
    if largest is None:
        largest = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, largest), 0, -1):
        for rest in iter_partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def iter_subpartitions(outer: Partition) -> Iterator[Partition]:
    """Every partition contained in ``outer``, the empty one first."""

    def extend(j: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield prefix
        if j > outer.length:
            return
        cap = outer.part(j) if not prefix else min(outer.part(j), prefix[-1])
        for part in range(1, cap + 1):
            yield from extend(j + 1, prefix + (part,))

    for parts in extend(1, ()):
        yield Partition(parts)


def iter_skew_shapes(max_size: int) -> Iterator[SkewShape]:
    """Every λ/μ with |λ| ≤ max_size and μ ⊆ λ, by |λ| then λ then μ."""
    for n in range(max_size + 1):
        for outer in iter_partitions(n):
            for inner in iter_subpartitions(outer):
                yield SkewShape(outer, inner)
