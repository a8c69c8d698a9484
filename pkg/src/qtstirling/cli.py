"""Command-line interface: ``qtstirling {table,enumerate,poset,homology,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

from . import __version__
from .homology import build_complex, describe, homology, report_json
from .posets import (
    PosetTooLarge,
    build_gamma,
    build_pi,
    decompose,
    match,
    to_dot,
    to_json,
    unmatched_genfn,
)
from .rgwords import RGWord, iter_rg, word_to_partition, wt, wt_prime
from .rookboards import below, iter_rooks, rook_word, wt_rook
from .stirlingnum import (
    allowable_bell,
    allowable_count_first,
    allowable_count_second,
    classical_bell,
    rowsum_first,
    stirling1_q,
    stirling1_qt_signed,
    stirling2_q,
    stirling2_qt,
)
from .verify import DEFAULT_N_MAX, SUITES, run_suite

POLY_KINDS = {
    "S_q": stirling2_q,
    "c_q": stirling1_q,
    "S_qt": stirling2_qt,
    "s_qt": stirling1_qt_signed,
}
COUNT_KINDS = {"a": allowable_count_second, "d": allowable_count_first}
TABLE_KINDS = tuple(POLY_KINDS) + tuple(COUNT_KINDS) + ("bell",)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table_grid(kind: str, n_max: int) -> tuple[list[str], list[list]]:
    """Header and rows in the row = n, column = k layout; cells above the
    diagonal are empty strings."""
    if kind == "bell":
        header = ["n", "a(n)", "b(n)"]
        return header, [[n, allowable_bell(n), classical_bell(n)] for n in range(n_max + 1)]
    header = ["n\\k"] + [str(k) for k in range(n_max + 1)]
    if kind == "a":
        header += ["a(n)", "b(n)"]
    elif kind == "d":
        header += ["r(n)", "n!"]
    f = POLY_KINDS.get(kind) or COUNT_KINDS[kind]
    rows = []
    for n in range(n_max + 1):
        row: list = [n]
        for k in range(n_max + 1):
            row.append(str(f(n, k)) if k <= n else "")
        if kind == "a":
            row += [allowable_bell(n), classical_bell(n)]
        elif kind == "d":
            row += [rowsum_first(n), math.factorial(n)]
        rows.append(row)
    return header, rows


def cmd_table(args) -> int:
    kind, n_max = args.kind, args.n_max
    if args.format == "json":
        if kind == "bell":
            obj = {"kind": kind, "rows": [{"n": n, "a": allowable_bell(n), "b": classical_bell(n)}
                                          for n in range(n_max + 1)]}
        else:
            f = POLY_KINDS.get(kind) or COUNT_KINDS[kind]
            entries = []
            for n in range(n_max + 1):
                for k in range(n + 1):
                    v = f(n, k)
                    entries.append({"n": n, "k": k,
                                    "value": v.to_json_obj() if kind in POLY_KINDS else v})
            obj = {"kind": kind, "n_max": n_max, "entries": entries}
        print(json.dumps(obj, indent=1))
        return 0
    header, rows = _table_grid(kind, n_max)
    if args.format == "csv":
        sys.stdout.write(_csv([header] + rows))
        return 0
    if kind in POLY_KINDS:
        f = POLY_KINDS[kind]
        for n in range(n_max + 1):
            for k in range(n + 1):
                print(f"{kind}[{n},{k}] = {f(n, k)}")
        return 0
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def cmd_enumerate(args) -> int:
    what, a, b = args.what, args.a, args.b
    records = []
    if what in ("rg", "allowable"):
        for w in iter_rg(a, b, allowable=(what == "allowable")):
            word = RGWord(w)
            rec = {"word": str(word), "partition": str(word_to_partition(word)), "wt": str(wt(w))}
            if what == "allowable":
                rec["wt_prime"] = str(wt_prime(w))
            records.append(rec)
    else:
        for T in iter_rooks(a, b, allowable=(what == "allowable-rooks")):
            rec = {"rook_word": "".join(map(str, rook_word(T))) if a <= 10
                   else ",".join(map(str, rook_word(T))),
                   "rooks": [list(r) for r in T.rooks], "below": below(T)}
            if what == "allowable-rooks":
                rec["wt"] = str(wt_rook(T))
            records.append(rec)
    if args.json:
        print(json.dumps({"what": what, "params": [a, b], "count": len(records),
                          "items": records}, indent=1))
        return 0
    for rec in records:
        if what in ("rg", "allowable"):
            extra = f"  wt'={rec['wt_prime']}" if "wt_prime" in rec else ""
            print(f"{rec['word']}  {rec['partition']}  wt={rec['wt']}{extra}")
        else:
            extra = f"  wt={rec['wt']}" if "wt" in rec else ""
            squares = " ".join(f"({i},{j})" for i, j in rec["rooks"]) or "-"
            print(f"{rec['rook_word']}  {squares}  below={rec['below']}{extra}")
    print(f"# {len(records)} items")
    return 0


def _build(which: str, a: int, b: int, limit: int | None):
    return build_pi(a, b, limit) if which == "pi" else build_gamma(a, b, limit)


def cmd_poset(args) -> int:
    poset = _build(args.which, args.a, args.b, args.max_elements)
    matching = match(poset) if (args.match or args.decompose or args.dot) else None
    decomposition = decompose(poset) if args.decompose else None
    if args.dot:
        sys.stdout.write(to_dot(poset, matching, decomposition))
        return 0
    if args.json:
        print(to_json(poset, matching, decomposition))
        return 0
    print(f"{args.which}({args.a},{args.b}): {len(poset)} elements, {len(poset.covers)} covers")
    print(f"rank generating function: {poset.rank_genfn()}")
    if matching is not None:
        print(f"matched pairs: {len(matching.pairs)}")
        print("unmatched: " + " ".join(poset.label(h) for h in matching.unmatched))
        print(f"unmatched generating function: {unmatched_genfn(matching)}")
    if decomposition is not None:
        for iv in decomposition.intervals:
            print(f"  B{iv.dim}: [{poset.label(iv.base)}, {poset.label(iv.top)}]")
        print(f"base weight (t = 1+q): {decomposition.base_weight()}")
    return 0


def cmd_homology(args) -> int:
    poset = _build(args.which, args.a, args.b, args.max_elements)
    cx = build_complex(poset)
    result = homology(cx, backend=args.backend)
    if args.json:
        print(report_json(cx, result, matrices=args.matrices))
    else:
        print(describe(cx, result))
    return 0 if result.basis_verified and result.torsion_free else 1


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.n_max)
    if args.json:
        print(json.dumps(report.to_json_obj(), indent=1))
    elif args.quiet:
        print(f"{report.title}: {'PASS' if report.ok else 'FAIL'} "
              f"({len(report.checks) - len(report.failures)}/{len(report.checks)})")
        for c in report.failures:
            print(f"  FAIL {c.name}: {c.statement} ({c.detail})")
    else:
        print(report.render())
    return 0 if report.ok else 1


def _positive(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtstirling",
                                description="q- and (q,t)-Stirling numbers, posets and homology")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tables of Stirling numbers")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--n-max", type=_positive, default=10)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("enumerate", help="list RG-words or rook placements")
    e.add_argument("what", choices=("rg", "allowable", "rooks", "allowable-rooks"))
    e.add_argument("a", type=_positive, help="word length n, or board length m")
    e.add_argument("b", type=_positive, help="maximum letter k, or number of rooks")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (("poset", cmd_poset, "build a Stirling poset"),
                                 ("homology", cmd_homology, "integer homology of a Stirling complex")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("which", choices=("pi", "gamma"))
        s.add_argument("a", type=_positive)
        s.add_argument("b", type=_positive)
        s.add_argument("--max-elements", type=_positive, default=None,
                       help="element ceiling (default: $QTSTIRLING_MAX_ELEMENTS or 200000)")
        s.add_argument("--json", action="store_true")
        s.set_defaults(func=func)
        if name == "poset":
            s.add_argument("--match", action="store_true")
            s.add_argument("--decompose", action="store_true")
            s.add_argument("--dot", action="store_true")
        else:
            s.add_argument("--matrices", action="store_true", help="include boundary matrices in JSON")
            s.add_argument("--backend", choices=("auto", "compiled", "python"), default="auto")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n-max", type=_positive, default=None,
                   help="defaults: " + ", ".join(f"{k}={n}" for k, n in DEFAULT_N_MAX.items()))
    v.add_argument("--json", action="store_true")
    v.add_argument("-q", "--quiet", action="store_true", help="summary and failures only")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "dot", False) and getattr(args, "json", False):
        print("qtstirling: choose one of --dot and --json", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (PosetTooLarge, ValueError) as exc:
        print(f"qtstirling: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
