"""Sign-reversing involutions behind the orthogonality of the (q,t)-Stirling
numbers, plus the table-level identities.

Inside both involutions columns are addressed by their right-to-left label,
which equals the column length; conversion to absolute columns happens at
the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .qtpoly import ONE, ZERO, BiPoly
from .report import Report
from .rgwords import RGWord, is_allowable, iter_rg, wt_prime
from .rookboards import (
    RookPlacement,
    column_label,
    column_of_label,
    iter_rooks,
    squares_below,
    wt_rook,
)
from .stirlingnum import stirling1_qt_signed, stirling2_qt

INF = float("inf")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True, order=True)
class PairC:
    """``(T, w)`` with ``T`` allowable, ``n - k`` rooks on the length-``n``
    board, and ``w`` allowable of length ``k`` with maximum ``m``."""

    n: int
    m: int
    T: RookPlacement
    w: RGWord

    @property
    def k(self) -> int:
        return self.w.n

    @property
    def sign(self) -> int:
        return _sign(self.n - self.k)

    def weight(self) -> BiPoly:
        return wt_rook(self.T) * wt_prime(self.w.letters) * self.sign

    def is_member(self) -> bool:
        k = self.k
        return (self.m <= k <= self.n and self.T.m == self.n and self.T.n == self.n - k
                and self.T.is_allowable() and self.w.k == self.m and is_allowable(self.w.letters))

    def __str__(self) -> str:
        return f"({self.T}, {self.w or '()'})"


@dataclass(frozen=True, order=True)
class PairD:
    """``(w, T)`` with ``w`` allowable of length ``n`` and maximum ``k``, and
    ``T`` allowable with ``k - m`` rooks on the length-``k`` board."""

    n: int
    m: int
    w: RGWord
    T: RookPlacement

    @property
    def k(self) -> int:
        return self.w.k

    @property
    def sign(self) -> int:
        return _sign(self.k - self.m)

    def weight(self) -> BiPoly:
        return wt_prime(self.w.letters) * wt_rook(self.T) * self.sign

    def is_member(self) -> bool:
        k = self.k
        return (self.m <= k <= self.n and self.w.n == self.n and is_allowable(self.w.letters)
                and self.T.m == k and self.T.n == k - self.m and self.T.is_allowable())

    def __str__(self) -> str:
        return f"({self.w or '()'}, {self.T})"


def enumerate_C(n: int, m: int) -> Iterator[PairC]:
    for k in range(m, n + 1):
        words = [RGWord(w) for w in iter_rg(k, m, allowable=True)]
        for T in iter_rooks(n, n - k, allowable=True):
            for w in words:
                yield PairC(n, m, T, w)


def enumerate_D(n: int, m: int) -> Iterator[PairD]:
    for k in range(m, n + 1):
        boards = list(iter_rooks(k, k - m, allowable=True))
        for w in iter_rg(n, k, allowable=True):
            word = RGWord(w)
            for T in boards:
                yield PairD(n, m, word, T)


def _check_nm(n: int, m: int) -> None:
    if n == m:
        raise ValueError("the involutions need n > m; for n = m both sums are trivially 1")
    if not 0 <= m < n:
        raise ValueError(f"need 0 <= m < n, got n={n}, m={m}")


def _labelled(T: RookPlacement) -> list[tuple[int, int]]:
    """Rooks as ``(label, squares below)``, sorted by label."""
    return sorted((column_label(T.m, j), squares_below(T.m, i, j)) for i, j in T.rooks)


def _from_labelled(size: int, rooks) -> RookPlacement:
    # a rook in the column of length L with b squares below sits in row L - b
    return RookPlacement(size, tuple((L - b, column_of_label(size, L)) for L, b in rooks))


def _first_repeat(w: tuple[int, ...]) -> int | None:
    seen = set()
    for pos, x in enumerate(w):
        if x in seen:
            return pos
        seen.add(x)
    return None


def _last_repeat(w: tuple[int, ...]) -> int | None:
    seen = set()
    last = None
    for pos, x in enumerate(w):
        if x in seen:
            last = pos
        seen.add(x)
    return last


def involution_phi(p: PairC, n: int | None = None, m: int | None = None) -> PairC:
    n = p.n if n is None else n
    m = p.m if m is None else m
    _check_nm(n, m)
    rooks = _labelled(p.T)
    w = p.w.letters
    l1, rb = rooks[0] if rooks else (INF, 0)
    pos = _first_repeat(w)
    # before the first repeat the word reads 1 2 ... p, so the letter to the
    # left of the repeat is p
    l2 = w[pos - 1] if pos is not None else INF
    if l1 <= l2:
        l1 = int(l1)
        new_w = w[:l1] + (rb + 1,) + w[l1:]
        new_T = _from_labelled(n, rooks[1:])
    else:
        r = w[pos]
        new_w = w[:pos] + w[pos + 1:]
        new_T = _from_labelled(n, [(l2, r - 1)] + rooks)
    out = PairC(n, m, new_T, RGWord(new_w))
    if not out.is_member():
        raise AssertionError(f"phi left C: {p} -> {out}")
    return out


def involution_psi(p: PairD, n: int | None = None, m: int | None = None) -> PairD:
    n = p.n if n is None else n
    m = p.m if m is None else m
    _check_nm(n, m)
    w = p.w.letters
    k = p.k
    rooks = _labelled(p.T)
    i = _last_repeat(w)
    if i is None:
        l1, r1 = 0, None
    else:
        l1, r1 = max(w[:i]), w[i]
    if rooks:
        l2, b2 = rooks[-1]
        r2 = l2 - 1 - b2  # squares above
    else:
        l2, r2 = 0, None
    if l1 > l2:
        new_w = w[:i] + (l1 + 1,) + tuple(x + 1 for x in w[i + 1:])
        new_T = _from_labelled(k + 1, rooks + [(l1, r1 - 1)])
    else:
        j = w.index(l2 + 1)
        new_w = w[:j] + (l2 - r2,) + tuple(x - 1 for x in w[j + 1:])
        # every rook lies in a column labelled at most l2, so dropping that
        # column leaves the other labels alone
        new_T = _from_labelled(k - 1, rooks[:-1])
    out = PairD(n, m, RGWord(new_w), new_T)
    if not out.is_member():
        raise AssertionError(f"psi left D: {p} -> {out}")
    return out


# -- verification -------------------------------------------------------------


def _check_involution(report: Report, name: str, elements, f) -> None:
    total = ZERO
    failures = []
    count = 0
    for p in elements:
        count += 1
        wp = p.weight()
        total = total + wp
        try:
            fp = f(p)
        except (AssertionError, ValueError) as exc:
            failures.append(f"{p}: {exc}")
            continue
        if fp == p:
            failures.append(f"fixed point {p}")
        elif abs(fp.k - p.k) != 1:
            failures.append(f"{p} -> {fp} does not move k by one")
        elif fp.weight() != -wp:
            failures.append(f"{p} -> {fp} does not negate the weight")
        elif f(fp) != p:
            failures.append(f"{p} -> {fp} -> {f(fp)} is not an involution")
        if len(failures) > 5:
            break
    detail = "; ".join(failures[:5]) or f"{count} elements, {count // 2} orbits"
    report.add(name, f"fixed-point-free weight-negating involution on {name[:1]}", not failures, detail)
    report.add(f"{name} total", f"signed weight of {name[:1]} is zero",
               not failures and total.is_zero(), f"total {total}")


def verify_tables(n_max: int, report: Report | None = None) -> Report:
    report = report or Report("orthogonality")
    for n in range(n_max + 1):
        for m in range(n + 1):
            delta = ONE if m == n else ZERO
            first = ZERO
            second = ZERO
            for k in range(m, n + 1):
                first = first + stirling1_qt_signed(n, k) * stirling2_qt(k, m)
                second = second + stirling2_qt(n, k) * stirling1_qt_signed(k, m)
            report.add(f"s*S[{n},{m}]", f"sum_k s[{n},k] S[k,{m}] = delta", first == delta, str(first))
            report.add(f"S*s[{n},{m}]", f"sum_k S[{n},k] s[k,{m}] = delta", second == delta, str(second))
    return report


def verify_orthogonality(n_max: int, bijective_max: int = 7) -> Report:
    """Both delta identities from the tables for ``n <= n_max``; the two
    involutions exhaustively for ``m < n <= min(n_max, bijective_max)``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    report = verify_tables(n_max)
    for n in range(1, min(n_max, bijective_max) + 1):
        for m in range(n):
            _check_involution(report, f"C({n},{m})", enumerate_C(n, m), involution_phi)
            _check_involution(report, f"D({n},{m})", enumerate_D(n, m), involution_psi)
    return report
