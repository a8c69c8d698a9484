"""Acceptance criteria 1-9.

Each criterion runs at its stated scope and time limit and prints one
``PASS``/``FAIL`` line.  Run directly for the summary alone:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import contextlib
import io
import math
import sys
import time
from collections import Counter

import pytest

from qtstirling import stirlingnum
from qtstirling.cli import main as cli_main
from qtstirling.homology import expected_genfn
from qtstirling.orthogonal import verify_orthogonality
from qtstirling.posets import (
    build_gamma,
    build_pi,
    check_acyclic,
    decompose_gamma,
    decompose_pi,
    fibonacci_unmatched_total,
    match_gamma,
    match_pi,
    matching_problems,
    unmatched_genfn,
)
from qtstirling.qtpoly import BiPoly, q, q_int, qt_int, subst_t_with_one_plus_q
from qtstirling.rgwords import is_weakly_increasing, iter_rg, wt_prime
from qtstirling.rookboards import RookPlacement, enumerate_allowable_rooks, rook_word, wt_rook
from qtstirling.stirlingnum import (
    allowable_bell,
    allowable_count_first,
    allowable_count_second,
    classical_bell,
    rowsum_first,
    stirling1_q,
    stirling1_qt_signed,
    stirling2_q,
    stirling2_qt,
    verify_generating_identities,
)
from qtstirling.verify import fibonacci, homology_suite, statistics_suite

SECOND_KIND = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 1, 2, 1],
    [0, 1, 3, 4, 1],
    [0, 1, 4, 11, 6, 1],
    [0, 1, 5, 26, 23, 9, 1],
    [0, 1, 6, 57, 72, 50, 12, 1],
    [0, 1, 7, 120, 201, 222, 86, 16, 1],
    [0, 1, 8, 247, 522, 867, 480, 150, 20, 1],
    [0, 1, 9, 502, 1291, 3123, 2307, 1080, 230, 25, 1],
]
A_N = [1, 1, 2, 4, 9, 23, 65, 199, 654, 2296, 8569]
B_N = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]

FIRST_KIND = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 1, 2, 1],
    [0, 2, 5, 4, 1],
    [0, 4, 12, 13, 6, 1],
    [0, 12, 40, 51, 31, 9, 1],
    [0, 36, 132, 193, 144, 58, 12, 1],
    [0, 144, 564, 904, 769, 376, 106, 16, 1],
    [0, 576, 2400, 4180, 3980, 2273, 800, 170, 20, 1],
    [0, 2880, 12576, 23300, 24080, 15345, 6273, 1650, 270, 25, 1],
]
R_N = [1, 1, 2, 4, 12, 36, 144, 576, 2880, 14400, 86400]

LIMITS = {1: 1.0, 2: 30.0, 4: 60.0, 6: 120.0, 8: 120.0}


class Failures:
    def __init__(self):
        self.items: list[str] = []

    def check(self, cond, msg: str) -> None:
        if not cond:
            self.items.append(msg)


def _clear_caches():
    for name in dir(stirlingnum):
        fn = getattr(stirlingnum, name)
        if hasattr(fn, "cache_clear"):
            fn.cache_clear()


def criterion_1(f: Failures) -> None:
    """Tables: S_q row (4,2) through the CLI, both allowable count tables."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        cli_main(["table", "S_q", "--n-max", "4"])
    f.check("S_q[4,2] = 3 + 3*q + q^2" in buf.getvalue().splitlines(), "table S_q row (4,2)")
    f.check(stirling2_q(4, 2) == q**2 + 3 * q + 3, "S_q[4,2]")
    entries = 0
    for n in range(11):
        for k in range(n + 1):
            entries += 1
            f.check(allowable_count_second(n, k) == SECOND_KIND[n][k], f"a({n},{k})")
            f.check(allowable_count_first(n, k) == FIRST_KIND[n][k], f"d({n},{k})")
        f.check(allowable_bell(n) == A_N[n], f"a({n})")
        f.check(classical_bell(n) == B_N[n], f"b({n})")
        f.check(rowsum_first(n) == R_N[n], f"r({n})")
    f.check(entries == 66, "66 table entries")
    f.check(allowable_count_second(10, 5) == 3123 and classical_bell(10) == 115975, "a(10,5), b(10)")
    f.check(allowable_count_first(10, 4) == 24080 and rowsum_first(10) == 86400, "d(10,4), r(10)")


def criterion_2(f: Failures) -> None:
    """Enumeration sums against recurrences, 1 <= k <= n <= 9."""
    report = statistics_suite(9)
    for c in report.failures:
        f.check(False, f"{c.name}: {c.detail}")
    f.check(len(report.checks) == 45 * 10, "expected number of statistic checks")


def criterion_3(f: Failures) -> None:
    """Golden values on small worked examples."""
    f.check(stirling2_q(5, 3) == q**4 + 3 * q**3 + 7 * q**2 + 8 * q + 6, "S_q[5,3]")
    P = build_pi(5, 3)
    M = match_pi(P)
    f.check({P.label(h) for h in M.unmatched} == {"11123", "11233", "12333"}, "Pi(5,3) unmatched")
    f.check(unmatched_genfn(M) == 1 + q**2 + q**4, "Pi(5,3) unmatched genfn")
    one_q = 1 + q
    w52 = subst_t_with_one_plus_q(decompose_pi(build_pi(5, 2)).base_weight())
    f.check(w52 == 1 + one_q + one_q**2 + one_q**3, "Pi(5,2) decomposition weight")
    w53 = subst_t_with_one_plus_q(decompose_pi(P).base_weight())
    want53 = 1 + 2 * one_q + 3 * one_q**2 + q**2 + 3 * q**2 * one_q + q**4
    f.check(w53 == want53, "Pi(5,3) decomposition weight")
    f.check(stirling1_q(4, 2) == 3 + 4 * q + 3 * q**2 + q**3, "c_q[4,2]")
    weights = Counter(subst_t_with_one_plus_q(wt_rook(T)) for T in enumerate_allowable_rooks(4, 2))
    f.check(weights == Counter([q**2, q**2 * one_q, one_q**2, one_q, one_q]), "five allowable placement weights")
    f.check(sum(weights.elements(), BiPoly()) == stirling1_q(4, 2), "weights sum to c_q[4,2]")
    T = RookPlacement(5, ((2, 1), (1, 2), (1, 3)))
    f.check(rook_word(T) == (3, 3, 2, 0), "rook word 3320")


def criterion_4(f: Failures) -> None:
    """Morse matchings on Pi(n,k), n <= 7, and Gamma(m,n), m <= 7."""
    for n in range(1, 8):
        for k in range(1, n + 1):
            P = build_pi(n, k)
            M = match_pi(P)
            f.check(not matching_problems(P, M), f"Pi({n},{k}) matching valid")
            f.check(check_acyclic(P, M)[0], f"Pi({n},{k}) acyclic")
            f.check(unmatched_genfn(M) == expected_genfn("pi", n, k), f"Pi({n},{k}) unmatched genfn")
        f.check(fibonacci_unmatched_total(n) == fibonacci(n), f"F_{n}")
    for m in range(1, 8):
        for n in range(m):
            G = build_gamma(m, n)
            M = match_gamma(G)
            f.check(not matching_problems(G, M), f"Gamma({m},{n}) matching valid")
            f.check(check_acyclic(G, M)[0], f"Gamma({m},{n}) acyclic")
            f.check(unmatched_genfn(M) == expected_genfn("gamma", m, n), f"Gamma({m},{n}) unmatched genfn")


def criterion_5(f: Failures) -> None:
    """Boolean decompositions over the same ranges."""
    for n in range(1, 8):
        for k in range(1, n + 1):
            D = decompose_pi(build_pi(n, k))  # raises on any structural defect
            f.check(D.base_weight() == stirling2_qt(n, k), f"Pi({n},{k}) base weight")
            f.check(subst_t_with_one_plus_q(D.base_weight()) == stirling2_q(n, k), f"Pi({n},{k}) q-weight")
    for m in range(1, 8):
        for n in range(m):
            D = decompose_gamma(build_gamma(m, n))
            sign = -1 if n % 2 else 1
            f.check(D.base_weight() * sign == stirling1_qt_signed(m, m - n), f"Gamma({m},{n}) base weight")
            f.check(subst_t_with_one_plus_q(D.base_weight()) == stirling1_q(m, m - n),
                    f"Gamma({m},{n}) q-weight")


def criterion_6(f: Failures) -> None:
    """Homology over the same ranges."""
    report = homology_suite(7)
    for c in report.failures:
        f.check(False, f"{c.name}: {c.detail}")
    f.check(len(report.checks) == 6 * (28 + 28), "expected number of homology checks")


def criterion_7(f: Failures) -> None:
    """The (q,t) layer."""
    for k in range(31):
        f.check(subst_t_with_one_plus_q(qt_int(k)) == q_int(k), f"[{k}]_qt")
    for n in range(1, 9):
        for k in range(1, n + 1):
            words = sum((wt_prime(w) for w in iter_rg(n, k, allowable=True)), BiPoly())
            f.check(words == stirling2_qt(n, k), f"S_qt[{n},{k}] from words")
            rooks = sum((wt_rook(T) for T in enumerate_allowable_rooks(n, n - k)), BiPoly())
            f.check(rooks * (-1) ** (n - k) == stirling1_qt_signed(n, k), f"s_qt[{n},{k}] from rooks")
    report = verify_generating_identities(8)
    for c in report.failures:
        f.check(False, f"{c.name}: {c.detail}")


def criterion_8(f: Failures) -> None:
    """Orthogonality: tables to n = 8, involutions exhaustively to n = 7."""
    report = verify_orthogonality(8, bijective_max=7)
    for c in report.failures:
        f.check(False, f"{c.name}: {c.detail}")
    involution_checks = [c for c in report.checks if c.name[0] in "CD"]
    f.check(len(involution_checks) == 2 * 2 * 28, "all (n,m) cells with m < n <= 7 covered")


def criterion_9(f: Failures) -> None:
    """q = -1 evaluations for n <= 10."""
    for n in range(11):
        for k in range(n + 1):
            increasing = sum(1 for w in iter_rg(n, k, allowable=True) if is_weakly_increasing(w))
            f.check(stirling2_q(n, k).subs_q(-1) == increasing, f"S_q[{n},{k}](-1)")
            f.check(stirling1_q(n, k).subs_q(-1) == math.comb(n // 2, n - k), f"c_q[{n},{k}](-1)")


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}


def evaluate(i: int) -> tuple[bool, str]:
    if i == 1:
        _clear_caches()  # time the tables from scratch
    f = Failures()
    t0 = time.perf_counter()
    try:
        CRITERIA[i](f)
    except Exception as exc:  # report rather than mask
        f.items.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - t0
    limit = LIMITS.get(i)
    if limit is not None and elapsed >= limit:
        f.items.append(f"runtime {elapsed:.2f}s exceeds {limit:.0f}s")
    ok = not f.items
    budget = f" (limit {limit:.0f}s)" if limit is not None else ""
    detail = "" if ok else "  " + "; ".join(f.items[:5])
    line = f"criterion {i}: {'PASS' if ok else 'FAIL'}  {elapsed:.2f}s{budget}  {CRITERIA[i].__doc__}{detail}"
    return ok, line


@pytest.mark.parametrize("i", range(1, 10))
def test_criterion(i, capsys):
    ok, line = evaluate(i)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(i) for i in range(1, 10)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
