"""Stirling numbers by recurrence: q, (q,t), allowable counts and Bell numbers.

Tables are built bottom-up for an explicit ``n_max`` and cached; all
returned rows are tuples, so they can be shared freely.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, TypeVar

from .qtpoly import ONE, ZERO, BiPoly, q_int, qt_int, subst_t_with_one_plus_q
from .report import Report

T = TypeVar("T")


def _triangle(n_max: int, zero: T, one: T, factor: Callable[[int, int], T], sign: int = 1):
    # X[n][k] = X[n-1][k-1] + sign * factor(n, k) * X[n-1][k],  X[n][0] = delta_{n,0}
    rows = [(one,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [zero]
        for k in range(1, n + 1):
            val = prev[k - 1]
            if k < len(prev):
                term = factor(n, k) * prev[k]
                val = val + term if sign > 0 else val - term
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def stirling2_q_table(n_max: int) -> tuple[tuple[BiPoly, ...], ...]:
    return _triangle(n_max, ZERO, ONE, lambda n, k: q_int(k))


@lru_cache(maxsize=None)
def stirling1_q_table(n_max: int) -> tuple[tuple[BiPoly, ...], ...]:
    return _triangle(n_max, ZERO, ONE, lambda n, k: q_int(n - 1))


@lru_cache(maxsize=None)
def stirling2_qt_table(n_max: int) -> tuple[tuple[BiPoly, ...], ...]:
    return _triangle(n_max, ZERO, ONE, lambda n, k: qt_int(k))


@lru_cache(maxsize=None)
def stirling1_qt_signed_table(n_max: int) -> tuple[tuple[BiPoly, ...], ...]:
    return _triangle(n_max, ZERO, ONE, lambda n, k: qt_int(n - 1), sign=-1)


@lru_cache(maxsize=None)
def allowable_second_table(n_max: int) -> tuple[tuple[int, ...], ...]:
    return _triangle(n_max, 0, 1, lambda n, k: (k + 1) // 2)


@lru_cache(maxsize=None)
def allowable_first_table(n_max: int) -> tuple[tuple[int, ...], ...]:
    return _triangle(n_max, 0, 1, lambda n, k: n // 2)


def _lookup(table: Callable, n: int, k: int, zero):
    if n < 0 or k < 0 or k > n:
        return zero
    return table(n)[n][k]


def stirling2_q(n: int, k: int) -> BiPoly:
    """``S_q[n,k] = S_q[n-1,k-1] + [k]_q S_q[n-1,k]``."""
    return _lookup(stirling2_q_table, n, k, ZERO)


def stirling1_q(n: int, k: int) -> BiPoly:
    """Unsigned ``c_q[n,k] = c_q[n-1,k-1] + [n-1]_q c_q[n-1,k]``."""
    return _lookup(stirling1_q_table, n, k, ZERO)


def stirling2_qt(n: int, k: int) -> BiPoly:
    return _lookup(stirling2_qt_table, n, k, ZERO)


def stirling1_qt_signed(n: int, k: int) -> BiPoly:
    """``s_{q,t}[n,k] = s_{q,t}[n-1,k-1] - [n-1]_{q,t} s_{q,t}[n-1,k]``."""
    return _lookup(stirling1_qt_signed_table, n, k, ZERO)


def stirling1_q_signed(n: int, k: int) -> BiPoly:
    """Signed q-Stirling number of the first kind, ``s_{q,t}`` at ``t = 1 + q``."""
    return subst_t_with_one_plus_q(stirling1_qt_signed(n, k))


def allowable_count_second(n: int, k: int) -> int:
    """``a(n,k)``, the number of allowable RG-words of length n with maximum k."""
    return _lookup(allowable_second_table, n, k, 0)


def allowable_count_first(n: int, k: int) -> int:
    """``d(n,k)``, the number of allowable placements of n-k rooks on the length-n board."""
    return _lookup(allowable_first_table, n, k, 0)


def allowable_bell(n: int) -> int:
    return sum(allowable_second_table(n)[n])


def rowsum_first(n: int) -> int:
    return sum(allowable_first_table(n)[n])


@lru_cache(maxsize=None)
def classical_bell(n: int) -> int:
    # Bell triangle
    row = [1]
    for _ in range(n):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
    return row[0]


def classical_stirling2(n: int, k: int) -> int:
    return int(stirling2_q(n, k).subs_q(1))


def classical_stirling1(n: int, k: int) -> int:
    return int(stirling1_q(n, k).subs_q(1))


# -- generating polynomials in x ---------------------------------------------
#
# A polynomial in x is a list of BiPoly coefficients, index = power of x.


def _xpoly_mul_linear(p: list[BiPoly], root: BiPoly) -> list[BiPoly]:
    """``p(x) * (x - root)``."""
    out = [ZERO] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i + 1] = out[i + 1] + c
        out[i] = out[i] - c * root
    return out


def _xpoly_trim(p: list[BiPoly]) -> list[BiPoly]:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def _falling(k: int, bracket: Callable[[int], BiPoly]) -> list[BiPoly]:
    p = [ONE]
    for m in range(k):
        p = _xpoly_mul_linear(p, bracket(m))
    return p


def falling_factorial_qt(k: int) -> list[BiPoly]:
    """Coefficients of ``prod_{m<k} (x - [m]_{q,t})``, lowest power of x first."""
    return _falling(k, qt_int)


def falling_factorial_q(k: int) -> list[BiPoly]:
    return _falling(k, q_int)


def _compare_xpoly(report: Report, name: str, statement: str, lhs, rhs) -> None:
    lhs, rhs = _xpoly_trim(lhs), _xpoly_trim(rhs)
    size = max(len(lhs), len(rhs))
    lhs = lhs + [ZERO] * (size - len(lhs))
    rhs = rhs + [ZERO] * (size - len(rhs))
    bad = [i for i in range(size) if lhs[i] != rhs[i]]
    detail = f"first mismatch at x^{bad[0]}: {lhs[bad[0]]} != {rhs[bad[0]]}" if bad else ""
    report.add(name, statement, not bad, detail)


def verify_generating_identities(n_max: int, specialize: bool = True) -> Report:
    """Check both falling-factorial expansions exactly for every ``n <= n_max``.

    ``(x)_n = sum_k s[n,k] x^k`` and ``x^n = sum_k S[n,k] (x)_k``, in the
    (q,t) form and, with ``specialize``, again after ``t -> 1 + q``.
    """
    report = Report("generating polynomials")
    variants = [("qt", stirling1_qt_signed, stirling2_qt, falling_factorial_qt)]
    if specialize:
        variants.append(("q", stirling1_q_signed, stirling2_q, falling_factorial_q))
    for label, s1, s2, falling in variants:
        for n in range(n_max + 1):
            lhs = falling(n)
            rhs = [s1(n, k) for k in range(n + 1)]
            _compare_xpoly(report, f"falling-{label}[{n}]",
                           f"(x)_{n} equals sum_k s[{n},k] x^k ({label})", lhs, rhs)
            power = [ZERO] * n + [ONE]
            acc: list[BiPoly] = [ZERO] * (n + 1)
            for k in range(n + 1):
                coeff = s2(n, k)
                if coeff.is_zero():
                    continue
                for i, c in enumerate(falling(k)):
                    acc[i] = acc[i] + coeff * c
            _compare_xpoly(report, f"power-{label}[{n}]",
                           f"x^{n} equals sum_k S[{n},k] (x)_k ({label})", power, acc)
    return report


def q_minus_one_binomial(n: int, k: int) -> int:
    """``binomial(floor(n/2), n-k)``, the value of ``c_q[n,k]`` at ``q = -1``."""
    if n - k < 0:
        return 0
    return math.comb(n // 2, n - k)
