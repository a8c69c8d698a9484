"""Pure-Python Smith normal form over the integers (sparse, arbitrary precision).

Only the diagonal is computed; no transformation matrices are kept.
"""

from __future__ import annotations

from math import gcd
from typing import Mapping


def normalize_diagonal(diag: list[int]) -> list[int]:
    """Turn any nonzero diagonal into the invariant factors ``d_1 | d_2 | ...``.

    ``diag(a, b)`` is equivalent to ``diag(gcd(a,b), lcm(a,b))``.
    """
    d = sorted(abs(x) for x in diag if x)
    ones = [x for x in d if x == 1]
    rest = [x for x in d if x != 1]
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            if b % a:
                g = gcd(a, b)
                rest[i], rest[j] = g, a // g * b
        rest[i + 1:] = sorted(rest[i + 1:])
    return ones + sorted(rest)


def diagonalize_sparse(entries: Mapping[tuple[int, int], int]) -> list[int]:
    """Diagonal of an equivalent diagonal matrix, in elimination order.

    ``entries`` maps ``(row, col)`` to a nonzero integer.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = int(v)
            cols.setdefault(c, set()).add(r)

    def set_entry(r: int, c: int, v: int) -> None:
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
        else:
            row = rows.get(r)
            if row is not None and c in row:
                del row[c]
                if not row:
                    del rows[r]
                cs = cols[c]
                cs.discard(r)
                if not cs:
                    del cols[c]

    diag: list[int] = []
    while rows:
        # smallest magnitude first, then fewest fill-in candidates
        best = None
        for r, row in rows.items():
            lr = len(row)
            for c, v in row.items():
                key = (abs(v), lr * len(cols[c]))
                if best is None or key < best[0]:
                    best = (key, r, c)
                    if key == (1, 1):
                        break
            if best[0] == (1, 1):
                break
        _, pr, pc = best
        pv = rows[pr][pc]

        # clear the pivot column with row operations
        for r in list(cols[pc]):
            if r == pr:
                continue
            f = rows[r][pc] // pv
            if f:
                for c, v in list(rows[pr].items()):
                    set_entry(r, c, rows.get(r, {}).get(c, 0) - f * v)
        # clear the pivot row with column operations
        for c in list(rows[pr]):
            if c == pc:
                continue
            f = rows[pr][c] // pv
            if f:
                for r in list(cols[pc]):
                    set_entry(r, c, rows.get(r, {}).get(c, 0) - f * rows[r][pc])

        if len(rows[pr]) == 1 and len(cols[pc]) == 1:
            diag.append(pv)
            set_entry(pr, pc, 0)
        # otherwise nonzero remainders smaller than |pv| remain; the next
        # round picks one of them as pivot
    return diag


def invariant_factors(entries: Mapping[tuple[int, int], int]) -> list[int]:
    return normalize_diagonal(diagonalize_sparse(entries))
