"""Robinson–Schensted by row insertion, its inverse, and the Schützenberger
involution on straight-shape standard tableaux."""

from __future__ import annotations

import logging
from bisect import bisect_left
from itertools import permutations
from dataclasses import dataclass
from typing import Sequence

from lab.errors import InvalidPermutation, ParseError, ShapeMismatch, SkewNotSupported
from lab.shapes import Partition, SkewShape
from lab.tableaux import (
    StandardTableau,
    descent_data,
    enumerate_syt,
    plinth,
    standard_from_rows,
    transpose,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """One-line notation (σ₁, ..., σ_n)."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidPermutation(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        tokens = [token.strip() for token in text.split(",") if token.strip()]
        try:
            word = tuple(int(token) for token in tokens)
        except ValueError:
            raise ParseError(f"cannot parse permutation {text!r}; expected e.g. '2,3,1'") from None
        return cls(word)

    def __len__(self) -> int:
        return len(self.word)

    def reversed(self) -> Permutation:
        return Permutation(self.word[::-1])

    def to_json(self) -> list[int]:
        return list(self.word)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)


def _tableau(rows: list[list[int]]) -> StandardTableau:
    shape = SkewShape(Partition(tuple(len(row) for row in rows)))
    return standard_from_rows(shape, rows)


def rsk(sigma: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """Row-insert σ₁..σ_n; return (insertion tableau P, recording tableau Q)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(sigma.word, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            k = bisect_left(P[row], x)
            if k == len(P[row]):
                P[row].append(x)
                Q[row].append(step)
                break
            P[row][k], x = x, P[row][k]
            row += 1
    return _tableau(P), _tableau(Q)


def _require_straight(T: StandardTableau):
    if not T.shape.is_straight:
        raise SkewNotSupported(f"shape {T.shape} is skew; only straight shapes are supported")


def rsk_inverse(P: StandardTableau, Q: StandardTableau) -> Permutation:
    """Reverse bumping, removing the cell of Q's entry n, then n-1, and so on."""
    _require_straight(P)
    _require_straight(Q)
    if P.shape != Q.shape:
        raise ShapeMismatch(f"P has shape {P.shape} but Q has shape {Q.shape}")
    rows = [[v for v in row] for row in P.rows()]
    word = [0] * P.size
    for k in range(Q.size, 0, -1):
        j = Q.cell_of(k).j - 1
        x = rows[j].pop()
        for r in range(j - 1, -1, -1):
            # largest entry of row r smaller than x
            pos = bisect_left(rows[r], x) - 1
            rows[r][pos], x = x, rows[r][pos]
        word[k - 1] = x
        if not rows[j]:
            rows.pop(j)
    return Permutation(tuple(word))


def schuetzenberger(Q: StandardTableau, auxiliary: StandardTableau | None = None) -> StandardTableau:
    """Sch(Q): recording tableau of the reversed word, transposed back to Q's shape.

    Any SYT of Q's shape serves as the auxiliary insertion tableau; the first
    one in enumeration order is used unless another is passed in.
    """
    _require_straight(Q)
    if auxiliary is None:
        auxiliary = next(enumerate_syt(Q.shape))
    elif auxiliary.shape != Q.shape:
        raise ShapeMismatch(f"auxiliary tableau has shape {auxiliary.shape}, expected {Q.shape}")
    sigma = rsk_inverse(auxiliary, Q)
    _, recording = rsk(sigma.reversed())
    return transpose(recording)


def verify_mahonian_schuetzenberger(s: SkewShape) -> bool:
    """maj(Q) == |plinth(Sch(Q))| for every SYT Q of the straight shape s."""
    if not s.is_straight:
        raise SkewNotSupported(f"shape {s} is skew; only straight shapes are supported")
    for Q in enumerate_syt(s):
        maj = descent_data(Q).maj
        volume = plinth(schuetzenberger(Q)).volume
        if maj != volume:
            logger.debug("shape %s: maj %d but plinth volume %d for %s", s, maj, volume, Q.rows())
            return False
    return True


def permutations_of(n: int) -> Sequence[Permutation]:
    """All permutations of 1..n in lexicographic order."""
    return [Permutation(word) for word in permutations(range(1, n + 1))]
