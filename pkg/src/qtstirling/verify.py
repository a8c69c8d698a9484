"""Verification sweeps behind ``qtstirling verify``.

Each suite returns a :class:`Report`; nothing here prints.
"""

from __future__ import annotations

from .homology import build_complex, expected_genfn, homology
from .orthogonal import verify_orthogonality
from .posets import (
    build_gamma,
    build_pi,
    check_acyclic,
    decompose_gamma,
    decompose_pi,
    DecompositionError,
    fibonacci_unmatched_total,
    match_gamma,
    match_pi,
    matching_problems,
    unmatched_genfn,
)
from .qtpoly import ZERO, BiPoly, q_int, qt_int, subst_t_with_one_plus_q
from .report import Report
from .rgwords import is_weakly_increasing, iter_rg, wt, wt_prime
from .rookboards import below, iter_rooks, wt_rook
from .stirlingnum import (
    allowable_count_first,
    allowable_count_second,
    q_minus_one_binomial,
    stirling1_q,
    stirling1_qt_signed,
    stirling2_q,
    stirling2_qt,
    verify_generating_identities,
)

DEFAULT_N_MAX = {
    "statistics": 9,
    "identities": 8,
    "posets": 7,
    "homology": 7,
    "orthogonality": 8,
}
SUITES = tuple(DEFAULT_N_MAX) + ("all",)


def fibonacci(n: int) -> int:
    a, b = 1, 1  # F_0, F_1
    for _ in range(n):
        a, b = b, a + b
    return a


def _eq(report: Report, name: str, statement: str, got, want) -> None:
    report.add(name, statement, got == want, "" if got == want else f"got {got}, expected {want}")


def statistics_suite(n_max: int = 9) -> Report:
    """Enumerative sums against the recurrences, for ``1 <= k <= n <= n_max``."""
    report = Report("statistics")
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            tag = f"[{n},{k}]"
            s_wt = ZERO
            for w in iter_rg(n, k):
                s_wt = s_wt + wt(w)
            _eq(report, f"S_q{tag} words", "sum of wt over RG-words equals S_q", s_wt, stirling2_q(n, k))

            s_qt = ZERO
            count = 0
            increasing = 0
            for w in iter_rg(n, k, allowable=True):
                s_qt = s_qt + wt_prime(w)
                count += 1
                increasing += is_weakly_increasing(w)
            _eq(report, f"S_qt{tag} words", "sum of wt' over allowable words equals S_qt",
                s_qt, stirling2_qt(n, k))
            _eq(report, f"S_q{tag} allowable", "allowable words with t=1+q give S_q",
                subst_t_with_one_plus_q(s_qt), stirling2_q(n, k))
            _eq(report, f"a{tag}", "allowable word count equals a(n,k)", count,
                allowable_count_second(n, k))
            _eq(report, f"S_q{tag} at -1", "S_q at q=-1 counts weakly increasing allowable words",
                int(stirling2_q(n, k).subs_q(-1)), increasing)

            counts: dict[tuple[int, int], int] = {}
            for T in iter_rooks(n, n - k):
                key = (below(T), 0)
                counts[key] = counts.get(key, 0) + 1
            _eq(report, f"c_q{tag} rooks", "sum of q^below over rook placements equals c_q",
                BiPoly(counts), stirling1_q(n, k))
            r_qt = ZERO
            rcount = 0
            for T in iter_rooks(n, n - k, allowable=True):
                r_qt = r_qt + wt_rook(T)
                rcount += 1
            sign = -1 if (n - k) % 2 else 1
            _eq(report, f"s_qt{tag} rooks", "signed sum of rook weights equals s_qt",
                r_qt * sign, stirling1_qt_signed(n, k))
            _eq(report, f"c_q{tag} allowable", "allowable placements with t=1+q give c_q",
                subst_t_with_one_plus_q(r_qt), stirling1_q(n, k))
            _eq(report, f"d{tag}", "allowable placement count equals d(n,k)", rcount,
                allowable_count_first(n, k))
            _eq(report, f"c_q{tag} at -1", "c_q at q=-1 equals binomial(floor(n/2), n-k)",
                int(stirling1_q(n, k).subs_q(-1)), q_minus_one_binomial(n, k))
    return report


def identities_suite(n_max: int = 8, bracket_max: int = 30) -> Report:
    report = Report("identities")
    for k in range(bracket_max + 1):
        _eq(report, f"[{k}]_qt", "[k]_{q,t} with t=1+q equals [k]_q",
            subst_t_with_one_plus_q(qt_int(k)), q_int(k))
    for n in range(n_max + 1):
        for k in range(n + 1):
            _eq(report, f"S_qt->S_q[{n},{k}]", "S_qt with t=1+q equals S_q",
                subst_t_with_one_plus_q(stirling2_qt(n, k)), stirling2_q(n, k))
            sign = -1 if (n - k) % 2 else 1
            _eq(report, f"s_qt->c_q[{n},{k}]", "signed s_qt with t=1+q equals c_q",
                subst_t_with_one_plus_q(stirling1_qt_signed(n, k)) * sign, stirling1_q(n, k))
    report.extend(verify_generating_identities(n_max))
    return report


def _even_ranks(genfn: BiPoly) -> bool:
    return all(dq % 2 == 0 for (dq, _), _c in genfn.items())


def _consistent(matching, decomposition) -> bool:
    unmatched = set(matching.unmatched)
    for iv in decomposition.intervals:
        if iv.dim == 0 and iv.base not in unmatched:
            return False
        if iv.dim > 0 and unmatched.intersection(iv.members):
            return False
    return len(unmatched) == sum(1 for iv in decomposition.intervals if iv.dim == 0)


def _poset_checks(report: Report, tag: str, poset, matching, decomposition_fn,
                  rank_want: BiPoly, unmatched_want: BiPoly, base_want_qt: BiPoly) -> None:
    _eq(report, f"{tag} rank genfn", "rank generating function equals the q-Stirling number",
        poset.rank_genfn(), rank_want)
    report.add(f"{tag} graded", "every cover raises rank by one", poset.check_graded())
    problems = matching_problems(poset, matching)
    report.add(f"{tag} matching", "matching pairs covers and partitions the elements",
               not problems, "; ".join(problems[:3]))
    ok, cycle = check_acyclic(poset, matching)
    report.add(f"{tag} acyclic", "matching is acyclic", ok, "" if ok else " -> ".join(cycle))
    got = unmatched_genfn(matching)
    _eq(report, f"{tag} unmatched", "unmatched generating function has the closed form",
        got, unmatched_want)
    report.add(f"{tag} parity", "unmatched elements lie in even ranks", _even_ranks(got))
    try:
        dec = decomposition_fn(poset)
    except DecompositionError as exc:
        report.add(f"{tag} boolean", "Boolean interval decomposition", False, str(exc))
        return
    report.add(f"{tag} boolean", "Boolean interval decomposition", True,
               f"{len(dec.intervals)} intervals")
    _eq(report, f"{tag} base weight", "sum over bases of q^rank t^dim equals the (q,t) number",
        dec.base_weight(), base_want_qt)
    _eq(report, f"{tag} base weight q", "base weight with t=1+q equals the q-Stirling number",
        subst_t_with_one_plus_q(dec.base_weight()), rank_want)
    report.add(f"{tag} coherent", "dimension-0 intervals are exactly the unmatched elements",
               _consistent(matching, dec))


def posets_suite(n_max: int = 7) -> Report:
    report = Report("posets")
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            P = build_pi(n, k)
            _poset_checks(report, f"Pi({n},{k})", P, match_pi(P), decompose_pi,
                          stirling2_q(n, k), expected_genfn("pi", n, k), stirling2_qt(n, k))
        _eq(report, f"Fibonacci[{n}]", "unmatched words over all k number F_n",
            fibonacci_unmatched_total(n), fibonacci(n))
    for m in range(1, n_max + 1):
        for n in range(0, m):
            G = build_gamma(m, n)
            sign = -1 if n % 2 else 1
            _poset_checks(report, f"Gamma({m},{n})", G, match_gamma(G), decompose_gamma,
                          stirling1_q(m, m - n), expected_genfn("gamma", m, n),
                          stirling1_qt_signed(m, m - n) * sign)
    return report


def homology_suite(n_max: int = 7, backend: str = "auto") -> Report:
    report = Report("homology")
    instances = [("pi", n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)]
    instances += [("gamma", m, n) for m in range(1, n_max + 1) for n in range(m)]
    for kind, a, b in instances:
        tag = f"{'Pi' if kind == 'pi' else 'Gamma'}({a},{b})"
        poset = build_pi(a, b) if kind == "pi" else build_gamma(a, b)
        matching = match_pi(poset) if kind == "pi" else match_gamma(poset)
        try:
            cx = build_complex(poset)
        except AssertionError as exc:
            report.add(f"{tag} d^2", "boundary squares to zero", False, str(exc))
            continue
        report.add(f"{tag} d^2", "boundary squares to zero", True)
        res = homology(cx, matching, backend)
        _eq(report, f"{tag} betti", "Poincare polynomial has the closed form",
            res.genfn(), expected_genfn(kind, a, b))
        _eq(report, f"{tag} morse", "Betti numbers equal unmatched counts per rank",
            res.genfn(), unmatched_genfn(matching))
        report.add(f"{tag} torsion", "homology is torsion-free", res.torsion_free,
                   str([list(t) for t in res.torsion]))
        report.add(f"{tag} parity", "homology is concentrated in even ranks", _even_ranks(res.genfn()))
        report.add(f"{tag} basis", "unmatched elements are cycles giving a basis", res.basis_verified)
    return report


def orthogonality_suite(n_max: int = 8) -> Report:
    return verify_orthogonality(n_max)


RUNNERS = {
    "statistics": statistics_suite,
    "identities": identities_suite,
    "posets": posets_suite,
    "homology": homology_suite,
    "orthogonality": orthogonality_suite,
}


def run_suite(suite: str, n_max: int | None = None) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite != "all":
        return RUNNERS[suite](DEFAULT_N_MAX[suite] if n_max is None else n_max)
    report = Report("all")
    for name, runner in RUNNERS.items():
        report.extend(runner(DEFAULT_N_MAX[name] if n_max is None else n_max))
    return report


__all__ = ["SUITES", "DEFAULT_N_MAX", "run_suite", "fibonacci"]
