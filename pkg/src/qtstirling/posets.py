"""Graded posets on RG-words and rook placements, their Morse matchings and
Boolean interval decompositions.

Handles are dense integer indices into ``GradedPoset.elements`` assigned in
enumeration order.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Hashable, Sequence, Union

from .qtpoly import BiPoly
from .rgwords import RGWord, is_allowable, inversion_positions, iter_rg
from .rookboards import (
    RookPlacement,
    below,
    is_shaded,
    iter_rooks,
    rook_word,
)
from .stirlingnum import classical_stirling1, classical_stirling2

Payload = Union[RGWord, RookPlacement]

DEFAULT_MAX_ELEMENTS = 200_000


class PosetTooLarge(ValueError):
    pass


def max_elements() -> int:
    return int(os.environ.get("QTSTIRLING_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS))


def payload_label(x) -> str:
    if not isinstance(x, RookPlacement):
        return str(x)
    word = rook_word(x)
    sep = "," if any(v > 9 for v in word) else ""
    return sep.join(map(str, word))


@dataclass(frozen=True, eq=False)
class GradedPoset:
    kind: str  # "pi" or "gamma"
    params: tuple[int, int]
    elements: tuple[Payload, ...]
    ranks: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]  # (lower, upper)
    index: dict = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def handle(self, payload: Hashable) -> int:
        return self.index[payload]

    def label(self, h: int) -> str:
        return payload_label(self.elements[h])

    @property
    def top_rank(self) -> int:
        return max(self.ranks, default=0)

    def layers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.top_rank + 1)]
        for h, r in enumerate(self.ranks):
            out[r].append(h)
        return out

    def rank_genfn(self) -> BiPoly:
        counts: dict[tuple[int, int], int] = {}
        for r in self.ranks:
            counts[(r, 0)] = counts.get((r, 0), 0) + 1
        return BiPoly(counts)

    def cover_set(self) -> set[tuple[int, int]]:
        return set(self.covers)

    def check_graded(self) -> bool:
        return all(self.ranks[b] == self.ranks[a] + 1 for a, b in self.covers)


def make_poset(kind: str, params, elements, ranks, covers) -> GradedPoset:
    """A poset from explicit data; ``covers`` are ``(lower, upper)`` handle pairs."""
    elements = tuple(elements)
    index = {x: h for h, x in enumerate(elements)}
    return GradedPoset(kind, tuple(params), elements, tuple(ranks),
                       tuple(sorted(map(tuple, covers))), index)


def _finish(kind, params, elements, rank_of, neighbours) -> GradedPoset:
    index = {x: h for h, x in enumerate(elements)}
    covers = []
    for h, x in enumerate(elements):
        for y in neighbours(x):
            g = index.get(y)
            if g is not None:
                covers.append((h, g))
    covers.sort()
    ranks = tuple(rank_of(x) for x in elements)
    return GradedPoset(kind, params, tuple(elements), ranks, tuple(covers), index)


def build_pi(n: int, k: int, limit: int | None = None) -> GradedPoset:
    """The poset on ``R(n, k)`` ordered by incrementing single letters."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    limit = max_elements() if limit is None else limit
    size = classical_stirling2(n, k)
    if size > limit:
        raise PosetTooLarge(f"Pi({n},{k}) has {size} elements, ceiling is {limit}")
    elements = [RGWord(w) for w in iter_rg(n, k)]

    def ups(w: RGWord):
        for i in range(1, w.n):
            letters = list(w.letters)
            letters[i] += 1
            try:
                yield RGWord(tuple(letters))
            except ValueError:
                continue

    def rank(w: RGWord) -> int:
        return sum(w.letters) - n - k * (k - 1) // 2

    return _finish("pi", (n, k), elements, rank, ups)


def build_gamma(m: int, n: int, limit: int | None = None) -> GradedPoset:
    """The poset on placements of ``n`` rooks on the length-``m`` board;
    covers move one rook a square west or north."""
    if not 0 <= n <= max(m - 1, 0):
        raise ValueError(f"need 0 <= n <= m-1, got m={m}, n={n}")
    limit = max_elements() if limit is None else limit
    size = classical_stirling1(m, m - n)
    if size > limit:
        raise PosetTooLarge(f"Gamma({m},{n}) has {size} elements, ceiling is {limit}")
    elements = list(iter_rooks(m, n))

    def ups(T: RookPlacement):
        cols = set(T.columns())
        for i, j in T.rooks:
            if j > 1 and (j - 1) not in cols:
                yield T.move((i, j), (i, j - 1))
            if i > 1:
                yield T.move((i, j), (i - 1, j))

    return _finish("gamma", (m, n), elements, below, ups)


# -- matchings ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Matching:
    poset: GradedPoset = field(repr=False)
    pairs: tuple[tuple[int, int], ...]  # (lower, upper) cover edges
    unmatched: tuple[int, ...]

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def unmatched_payloads(self) -> list[Payload]:
        return [self.poset.elements[h] for h in self.unmatched]


def pi_partner(w: Sequence[int]) -> tuple[int, int] | None:
    """The matching rule on RG-words.

    Returns ``(position, +1 or -1)`` for the letter that moves, or ``None``
    when ``w`` is unmatched.  The scan looks for the first ``i`` with
    ``w_{i-1} > w_i`` or ``w_{i-1} = w_i`` both even.
    """
    for i in range(1, len(w)):
        a, b = w[i - 1], w[i]
        if a > b or (a == b and a % 2 == 0):
            return (i, -1) if b % 2 == 0 else (i, +1)
    return None


def gamma_partner(T: RookPlacement) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """The matching rule on rook placements: ``(rook, new square)`` or ``None``."""
    for i, j in T.rooks:  # sorted left to right
        if is_shaded(T.m, i, j):
            if i == 1:
                continue
            return (i, j), (i - 1, j)
        return (i, j), (i + 1, j)
    return None


def _build_matching(poset: GradedPoset, partner_of) -> Matching:
    pairs = []
    unmatched = []
    for h, x in enumerate(poset.elements):
        y = partner_of(x)
        if y is None:
            unmatched.append(h)
            continue
        g = poset.index[y]
        if poset.ranks[g] > poset.ranks[h]:
            pairs.append((h, g))
    return Matching(poset, tuple(pairs), tuple(unmatched))


def match_pi(poset: GradedPoset) -> Matching:
    def partner(w: RGWord):
        rule = pi_partner(w.letters)
        if rule is None:
            return None
        i, step = rule
        return w.replace(i, w[i] + step)

    return _build_matching(poset, partner)


def match_gamma(poset: GradedPoset) -> Matching:
    def partner(T: RookPlacement):
        rule = gamma_partner(T)
        if rule is None:
            return None
        return T.move(*rule)

    return _build_matching(poset, partner)


def match(poset: GradedPoset) -> Matching:
    return match_pi(poset) if poset.kind == "pi" else match_gamma(poset)


def matching_problems(poset: GradedPoset, matching: Matching) -> list[str]:
    """Everything wrong with ``matching`` as a partial matching; empty if valid."""
    problems = []
    covers = poset.cover_set()
    seen: dict[int, int] = {}
    for a, b in matching.pairs:
        if (a, b) not in covers:
            problems.append(f"pair {poset.label(a)} < {poset.label(b)} is not a cover")
        for h in (a, b):
            seen[h] = seen.get(h, 0) + 1
    for h, c in seen.items():
        if c > 1:
            problems.append(f"{poset.label(h)} is in {c} pairs")
    un = set(matching.unmatched)
    if un & set(seen):
        problems.append("an element is both matched and unmatched")
    if len(un) + len(seen) != len(poset) or len(un) != len(matching.unmatched):
        problems.append("pairs and unmatched elements do not partition the poset")
    return problems


def check_acyclic(poset: GradedPoset, matching: Matching) -> tuple[bool, list[str] | None]:
    """Orient matched covers up and the rest down; look for a directed cycle.

    Returns ``(True, None)`` or ``(False, cycle)`` with the cycle as labels.
    """
    matched = set(matching.pairs)
    succ: list[list[int]] = [[] for _ in range(len(poset))]
    for a, b in poset.covers:
        if (a, b) in matched:
            succ[a].append(b)
        else:
            succ[b].append(a)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * len(poset)
    for root in range(len(poset)):
        if colour[root] != WHITE:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        colour[root] = GREY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = BLACK
                stack.pop()
                path.pop()
            elif colour[nxt] == GREY:
                cycle = path[path.index(nxt):] + [nxt]
                return False, [poset.label(h) for h in cycle]
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                stack.append((nxt, iter(succ[nxt])))
                path.append(nxt)
    return True, None


def unmatched_genfn(matching: Matching) -> BiPoly:
    """Sum of ``q^rank`` over the unmatched elements."""
    counts: dict[tuple[int, int], int] = {}
    for h in matching.unmatched:
        r = matching.poset.ranks[h]
        counts[(r, 0)] = counts.get((r, 0), 0) + 1
    return BiPoly(counts)


def unmatched_words(n: int, k: int) -> list[RGWord]:
    """Words of ``R(n,k)`` left unmatched, found without materializing the poset."""
    return [RGWord(w) for w in iter_rg(n, k) if pi_partner(w) is None]


def fibonacci_unmatched_total(n: int) -> int:
    """Total number of unmatched words over ``k = 1..n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(1 for k in range(1, n + 1) for w in iter_rg(n, k) if pi_partner(w) is None)


# -- Boolean decompositions ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class BooleanInterval:
    base: int
    top: int
    dim: int
    members: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class BooleanDecomposition:
    poset: GradedPoset = field(repr=False)
    intervals: tuple[BooleanInterval, ...]

    def base_weight(self) -> BiPoly:
        """``sum q^rank(base) t^dim`` over the intervals."""
        counts: dict[tuple[int, int], int] = {}
        for iv in self.intervals:
            key = (self.poset.ranks[iv.base], iv.dim)
            counts[key] = counts.get(key, 0) + 1
        return BiPoly(counts)

    def interval_of(self) -> dict[int, int]:
        out = {}
        for n, iv in enumerate(self.intervals):
            for h in iv.members:
                out[h] = n
        return out


class DecompositionError(AssertionError):
    pass


def _boolean_interval(poset: GradedPoset, base: int, raise_one, directions: list) -> BooleanInterval:
    # members indexed by subsets of ``directions``; each subset raises those coordinates
    covers = poset.cover_set()
    handles: dict[frozenset, int] = {}
    x0 = poset.elements[base]
    for r in range(len(directions) + 1):
        for subset in itertools.combinations(directions, r):
            x = x0
            for d in subset:
                x = raise_one(x, d)
            h = poset.index.get(x)
            if h is None:
                raise DecompositionError(f"{payload_label(x)} missing from interval over {poset.label(base)}")
            if poset.ranks[h] != poset.ranks[base] + r:
                raise DecompositionError(f"{payload_label(x)} has the wrong rank")
            handles[frozenset(subset)] = h
    for subset, h in handles.items():
        for d in directions:
            if d not in subset:
                g = handles[subset | {d}]
                if (h, g) not in covers:
                    raise DecompositionError(f"missing cover {poset.label(h)} < {poset.label(g)}")
    top = handles[frozenset(directions)]
    members = tuple(handles[frozenset(s)] for r in range(len(directions) + 1)
                    for s in itertools.combinations(directions, r))
    return BooleanInterval(base, top, len(directions), members)


def _check_cover(poset: GradedPoset, intervals: list[BooleanInterval]) -> None:
    seen = set()
    for iv in intervals:
        for h in iv.members:
            if h in seen:
                raise DecompositionError(f"{poset.label(h)} lies in two intervals")
            seen.add(h)
    if len(seen) != len(poset):
        raise DecompositionError("intervals do not cover the poset")


def pi_projection(w: Sequence[int]) -> tuple[int, ...]:
    """Lower every repeated even letter by one, keeping first occurrences."""
    seen = set()
    out = []
    for x in w:
        if x % 2 == 0 and x in seen:
            out.append(x - 1)
        else:
            out.append(x)
            seen.add(x)
    return tuple(out)


def gamma_projection(T: RookPlacement) -> RookPlacement:
    """Shift every rook on an unshaded square down by one."""
    return T.with_rooks((i if is_shaded(T.m, i, j) else i + 1, j) for i, j in T.rooks)


def decompose_pi(poset: GradedPoset) -> BooleanDecomposition:
    """Intervals ``[w, alpha(w)]`` over allowable ``w``; alpha raises the letters
    sitting below an earlier larger letter."""
    intervals = []
    for h, w in enumerate(poset.elements):
        if not is_allowable(w.letters):
            continue
        directions = inversion_positions(w.letters)
        intervals.append(_boolean_interval(poset, h, lambda x, i: x.replace(i, x[i] + 1), directions))
    _check_cover(poset, intervals)
    for iv in intervals:
        for h in iv.members:
            letters = poset.elements[h].letters
            if h != iv.base and is_allowable(letters):
                raise DecompositionError(f"non-base member {poset.label(h)} is allowable")
            if pi_projection(letters) != poset.elements[iv.base].letters:
                raise DecompositionError(f"projection of {poset.label(h)} misses its base")
    return BooleanDecomposition(poset, tuple(intervals))


def decompose_gamma(poset: GradedPoset) -> BooleanDecomposition:
    """Intervals ``[T, alpha(T)]`` over allowable ``T``; alpha lifts each rook
    outside the first row by one square."""
    intervals = []
    for h, T in enumerate(poset.elements):
        if not T.is_allowable():
            continue
        directions = [j for i, j in T.rooks if i != 1]

        def lift(x: RookPlacement, j: int) -> RookPlacement:
            i = x.row_in_column(j)
            return x.move((i, j), (i - 1, j))

        intervals.append(_boolean_interval(poset, h, lift, directions))
    _check_cover(poset, intervals)
    for iv in intervals:
        for h in iv.members:
            T = poset.elements[h]
            if h != iv.base and T.is_allowable():
                raise DecompositionError(f"non-base member {poset.label(h)} is allowable")
            if gamma_projection(T) != poset.elements[iv.base]:
                raise DecompositionError(f"projection of {poset.label(h)} misses its base")
    return BooleanDecomposition(poset, tuple(intervals))


def decompose(poset: GradedPoset) -> BooleanDecomposition:
    return decompose_pi(poset) if poset.kind == "pi" else decompose_gamma(poset)


# -- export -------------------------------------------------------------------


def to_dot(poset: GradedPoset, matching: Matching | None = None,
           decomposition: BooleanDecomposition | None = None) -> str:
    """Graphviz source; matched covers are red arrows pointing up."""
    name = f"{poset.kind}_{poset.params[0]}_{poset.params[1]}"
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    if decomposition is not None:
        for n, iv in enumerate(decomposition.intervals):
            lines.append(f"  subgraph cluster_{n} {{")
            lines.append(f'    label="B{iv.dim}"; style=rounded;')
            for h in iv.members:
                lines.append(f'    n{h} [label="{poset.label(h)}"];')
            lines.append("  }")
    else:
        for h in range(len(poset)):
            lines.append(f'  n{h} [label="{poset.label(h)}"];')
    matched = set(matching.pairs) if matching is not None else set()
    for a, b in poset.covers:
        if (a, b) in matched:
            lines.append(f"  n{a} -> n{b} [color=red, penwidth=2];")
        else:
            lines.append(f"  n{a} -> n{b} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(poset: GradedPoset, matching: Matching | None = None,
                decomposition: BooleanDecomposition | None = None) -> dict:
    obj = {
        "kind": poset.kind,
        "params": list(poset.params),
        "elements": [{"id": h, "label": poset.label(h), "rank": poset.ranks[h]}
                     for h in range(len(poset))],
        "covers": [list(c) for c in poset.covers],
        "rank_genfn": poset.rank_genfn().to_json_obj(),
    }
    if matching is not None:
        obj["matching"] = {"pairs": [list(p) for p in matching.pairs],
                           "unmatched": list(matching.unmatched)}
    if decomposition is not None:
        obj["decomposition"] = [
            {"base": iv.base, "top": iv.top, "dim": iv.dim, "members": list(iv.members)}
            for iv in decomposition.intervals
        ]
    return obj


def to_json(poset: GradedPoset, matching=None, decomposition=None) -> str:
    return json.dumps(to_json_obj(poset, matching, decomposition), indent=1)
