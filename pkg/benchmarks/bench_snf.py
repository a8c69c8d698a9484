"""Compare the compiled and pure-Python Smith normal form backends.

Runs on the boundary matrices of a few Stirling complexes and on random
sparse integer matrices; reports the best of several runs per backend and
checks that both produce the same invariant factors.

    python3 benchmarks/bench_snf.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

from qtstirling import snf
from qtstirling.homology import build_complex
from qtstirling.posets import build_gamma, build_pi


def boundary_cases():
    for label, poset in (("Pi(8,4)", build_pi(8, 4)), ("Gamma(8,3)", build_gamma(8, 3)),
                         ("Gamma(9,3)", build_gamma(9, 3))):
        cx = build_complex(poset)
        big = max(cx.boundaries[1:], key=lambda m: m.nrows * m.ncols)
        yield f"{label} d_{big.rank}", big.nrows, big.ncols, big.entries


def random_cases(seed: int = 7):
    rng = random.Random(seed)
    # +-1 entries with a few per column, like a boundary matrix, then a
    # denser small-integer case where int64 elimination may overflow
    for size, per_col, span in ((300, 3, 1), (600, 3, 1), (80, 16, 3)):
        entries = {}
        for c in range(size):
            for r in rng.sample(range(size), per_col):
                entries[(r, c)] = rng.choice([v for v in range(-span, span + 1) if v])
        yield f"random {size}x{size} {per_col}/col |v|<={span}", size, size, entries


def best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not snf.HAVE_COMPILED:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    print(f"{'case':32} {'shape':>11} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for name, nr, nc, entries in list(boundary_cases()) + list(random_cases()):
        fp = snf.invariant_factors(nr, nc, entries, backend="python")
        tp = best_time(lambda: snf.invariant_factors(nr, nc, entries, backend="python"), args.repeat)
        try:
            fc = snf.invariant_factors(nr, nc, entries, backend="compiled")
        except OverflowError:
            print(f"{name:32} {f'{nr}x{nc}':>11} {'overflow':>11} {tp:10.4f} {'-':>8}")
            continue
        if fc != fp:
            raise SystemExit(f"{name}: backends disagree")
        tc = best_time(lambda: snf.invariant_factors(nr, nc, entries, backend="compiled"), args.repeat)
        print(f"{name:32} {f'{nr}x{nc}':>11} {tc:11.4f} {tp:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
