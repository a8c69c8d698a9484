"""Rook placements on staircase boards.

Coordinates are ``(row, column)``, both 1-based, row 1 on top.  A board of
length ``m`` has square ``(i, j)`` iff ``i, j >= 1`` and ``i + j <= m``, so
column ``j`` holds ``m - j`` squares.  The number of squares strictly below
``(i, j)`` is ``m - i - j``; a square is shaded when that count is even.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator

from .qtpoly import BiPoly

Square = tuple[int, int]


def on_board(m: int, i: int, j: int) -> bool:
    return i >= 1 and j >= 1 and i + j <= m


def squares_below(m: int, i: int, j: int) -> int:
    return m - i - j


def is_shaded(m: int, i: int, j: int) -> bool:
    return (m - i - j) % 2 == 0


def column_label(m: int, j: int) -> int:
    """Right-to-left label of column ``j``; equals the column's length."""
    return m - j


def column_of_label(m: int, label: int) -> int:
    return m - label


@dataclass(frozen=True, order=True)
class RookPlacement:
    m: int
    rooks: tuple[Square, ...]

    def __post_init__(self):
        rooks = tuple(sorted(((int(i), int(j)) for i, j in self.rooks), key=lambda s: (s[1], s[0])))
        object.__setattr__(self, "rooks", rooks)
        cols = [j for _, j in rooks]
        if len(set(cols)) != len(cols):
            raise ValueError(f"two rooks share a column: {rooks}")
        for i, j in rooks:
            if not on_board(self.m, i, j):
                raise ValueError(f"square {(i, j)} is not on the length-{self.m} board")

    @property
    def n(self) -> int:
        return len(self.rooks)

    def row_in_column(self, j: int) -> int | None:
        for i, jj in self.rooks:
            if jj == j:
                return i
        return None

    def columns(self) -> list[int]:
        return [j for _, j in self.rooks]

    def with_rooks(self, rooks) -> RookPlacement:
        return RookPlacement(self.m, tuple(rooks))

    def move(self, square: Square, to: Square) -> RookPlacement:
        rooks = [to if r == square else r for r in self.rooks]
        return RookPlacement(self.m, tuple(rooks))

    def is_allowable(self) -> bool:
        return all(is_shaded(self.m, i, j) for i, j in self.rooks)

    def __str__(self) -> str:
        return f"m={self.m}:" + ",".join(f"({i},{j})" for i, j in self.rooks)

    def to_json_obj(self) -> dict:
        return {"m": self.m, "rooks": [[i, j] for i, j in self.rooks]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> RookPlacement:
        return cls(int(obj["m"]), tuple((int(i), int(j)) for i, j in obj["rooks"]))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def render(self) -> str:
        """ASCII picture: ``R`` rook, ``#`` shaded, ``.`` unshaded."""
        occupied = set(self.rooks)
        lines = []
        for i in range(1, self.m):
            row = []
            for j in range(1, self.m - i + 1):
                if (i, j) in occupied:
                    row.append("R")
                else:
                    row.append("#" if is_shaded(self.m, i, j) else ".")
            lines.append("".join(row))
        return "\n".join(lines)


def below(T: RookPlacement) -> int:
    return sum(squares_below(T.m, i, j) for i, j in T.rooks)


def nrow(T: RookPlacement) -> int:
    return sum(1 for i, _ in T.rooks if i != 1)


def wt_rook(T: RookPlacement) -> BiPoly:
    """``q^below(T) t^nrow(T)`` for an allowable placement."""
    if not T.is_allowable():
        raise ValueError(f"placement {T} has a rook on an unshaded square")
    return BiPoly.monomial(below(T), nrow(T))


def rook_word(T: RookPlacement) -> tuple[int, ...]:
    """Per column, left to right: one plus the squares below its rook, 0 if empty."""
    word = [0] * max(T.m - 1, 0)
    for i, j in T.rooks:
        word[j - 1] = squares_below(T.m, i, j) + 1
    return tuple(word)


def iter_rooks(m: int, n: int, allowable: bool = False) -> Iterator[RookPlacement]:
    if n < 0 or n > max(m - 1, 0):
        return
    for cols in itertools.combinations(range(1, m), n):
        choices = []
        for j in cols:
            rows = range(1, m - j + 1)
            if allowable:
                rows = [i for i in rows if is_shaded(m, i, j)]
            choices.append([(i, j) for i in rows])
        for rooks in itertools.product(*choices):
            yield RookPlacement(m, rooks)


def enumerate_rooks(m: int, n: int) -> list[RookPlacement]:
    """Every placement of ``n`` rooks in distinct columns of the length-``m`` board."""
    return list(iter_rooks(m, n))


def enumerate_allowable_rooks(m: int, n: int) -> list[RookPlacement]:
    """The placements from :func:`enumerate_rooks` with every rook on a shaded square."""
    return list(iter_rooks(m, n, allowable=True))
