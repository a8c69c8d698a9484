"""Restricted growth words, allowable words and their weight statistics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .qtpoly import BiPoly

#: Enumerations are exponential in ``n``; anything above this is refused
#: unless the caller passes a larger ``bound`` explicitly.
DEFAULT_MAX_N = 20


@dataclass(frozen=True, order=True)
class RGWord:
    """A restricted growth word ``w_1 ... w_n`` (letters are 1-based)."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        m = 0
        for i, x in enumerate(letters):
            if x < 1 or x > m + 1:
                raise ValueError(f"not a restricted growth word: {letters} (position {i + 1})")
            m = max(m, x)

    @classmethod
    def parse(cls, s: str) -> RGWord:
        """Parse ``"1221323"`` or ``"1,2,10,3"``."""
        s = s.strip()
        if "," in s:
            return cls(tuple(int(x) for x in s.split(",")))
        return cls(tuple(int(ch) for ch in s))

    def __str__(self) -> str:
        if self.k <= 9:
            return "".join(map(str, self.letters))
        return ",".join(map(str, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    @property
    def n(self) -> int:
        return len(self.letters)

    @cached_property
    def k(self) -> int:
        return max(self.letters, default=0)

    @cached_property
    def prefix_max(self) -> tuple[int, ...]:
        """``prefix_max[i]`` is ``max(w_1..w_i)`` with ``prefix_max[0] = 0``."""
        out = [0]
        for x in self.letters:
            out.append(max(out[-1], x))
        return tuple(out)

    def replace(self, i: int, value: int) -> RGWord:
        """Copy with the 0-based position ``i`` set to ``value``."""
        letters = list(self.letters)
        letters[i] = value
        return RGWord(tuple(letters))


@dataclass(frozen=True)
class SetPartition:
    """Blocks in standard form: ``min(B_1) < min(B_2) < ...``."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise ValueError("empty block")
        mins = [b[0] for b in blocks]
        if mins != sorted(mins):
            raise ValueError(f"partition not in standard form: {self}")
        elems = sorted(x for b in blocks for x in b)
        if elems != list(range(1, len(elems) + 1)):
            raise ValueError(f"blocks must be disjoint and cover 1..n: {blocks}")

    @classmethod
    def parse(cls, s: str) -> SetPartition:
        """Parse slash form, ``"14/236/57"`` (or ``"1,10/2"`` when n > 9)."""
        blocks = []
        for part in s.strip().split("/"):
            if "," in part:
                blocks.append(tuple(int(x) for x in part.split(",")))
            else:
                blocks.append(tuple(int(ch) for ch in part))
        return cls(tuple(blocks))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self) -> str:
        sep = "," if self.n > 9 else ""
        return "/".join(sep.join(map(str, b)) for b in self.blocks)


def _check_bound(n: int, bound: int | None) -> None:
    limit = DEFAULT_MAX_N if bound is None else bound
    if n > limit:
        raise ValueError(f"n={n} exceeds the enumeration bound {limit}")


def iter_rg(n: int, k: int, allowable: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield RG-words of length ``n`` and maximum ``k`` as tuples, lexicographically.

    With ``allowable=True`` only words whose even letters occur once are produced.
    """
    if n == 0:
        if k == 0:
            yield ()
        return
    if k < 1 or k > n:
        return
    word = [0] * n

    def extend(i: int, m: int):
        if i == n:
            if m == k:
                yield tuple(word)
            return
        # letters still to introduce must fit in the remaining positions
        if k - m > n - i:
            return
        for x in range(1, min(m + 1, k) + 1):
            if allowable and x % 2 == 0 and x <= m:
                continue
            word[i] = x
            yield from extend(i + 1, max(m, x))

    word[0] = 1
    yield from extend(1, 1)


def enumerate_rg(n: int, k: int, bound: int | None = None) -> list[RGWord]:
    """All of ``R(n, k)`` in lexicographic order."""
    _check_bound(n, bound)
    return [RGWord(w) for w in iter_rg(n, k)]


def enumerate_allowable(n: int, k: int, bound: int | None = None) -> list[RGWord]:
    """All of ``A(n, k)``: RG-words in which every even letter occurs exactly once."""
    _check_bound(n, bound)
    return [RGWord(w) for w in iter_rg(n, k, allowable=True)]


def is_allowable(w: Sequence[int]) -> bool:
    seen = set()
    for x in w:
        if x % 2 == 0:
            if x in seen:
                return False
            seen.add(x)
    return True


def is_weakly_increasing(w: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def stat_A(w: Sequence[int]) -> int:
    total, m = 0, 0
    for i, x in enumerate(w):
        if i > 0 and m >= x:
            total += x - 1
        m = max(m, x)
    return total


def stat_B(w: Sequence[int]) -> int:
    total, m = 0, 0
    for i, x in enumerate(w):
        if i > 0 and m > x:
            total += 1
        m = max(m, x)
    return total


def wt(w: Sequence[int]) -> BiPoly:
    """``q`` to the sum of ``w_i - 1`` over positions that do not raise the running maximum."""
    return BiPoly.monomial(stat_A(w), 0)


def wt_prime(w: Sequence[int]) -> BiPoly:
    """``q^A(w) t^B(w)`` for an allowable word; ``t`` stands for ``1 + q``."""
    if not is_allowable(w):
        raise ValueError(f"{''.join(map(str, w))} is not allowable")
    return BiPoly.monomial(stat_A(w), stat_B(w))


def inversion_positions(w: Sequence[int]) -> list[int]:
    """0-based positions ``i`` with some earlier letter larger than ``w_i``."""
    out, m = [], 0
    for i, x in enumerate(w):
        if m > x:
            out.append(i)
        m = max(m, x)
    return out


def word_to_partition(w: RGWord) -> SetPartition:
    blocks: list[list[int]] = [[] for _ in range(w.k)]
    for i, x in enumerate(w.letters, start=1):
        blocks[x - 1].append(i)
    return SetPartition(tuple(tuple(b) for b in blocks))


def partition_to_word(p: SetPartition) -> RGWord:
    letters = [0] * p.n
    for j, block in enumerate(p.blocks, start=1):
        for i in block:
            letters[i - 1] = j
    return RGWord(tuple(letters))
