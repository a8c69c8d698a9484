"""Integer homology of the algebraic complexes supported by the Stirling posets.

Chains of rank ``i`` are formal integer sums of rank-``i`` poset elements.
On words, the boundary lowers repeated even letters; on rook placements it
drops rooks that sit on unshaded squares.  Signs alternate left to right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .posets import GradedPoset, Matching, match, payload_label
from .qtpoly import BiPoly, gauss_binomial
from .rgwords import RGWord
from .rookboards import RookPlacement, is_shaded
from . import snf

Payload = Union[RGWord, RookPlacement]
Chain = dict  # payload -> nonzero int


class BoundaryError(AssertionError):
    """Raised when the composite of two boundaries is not zero."""


def repeated_even_positions(w) -> list[int]:
    """0-based positions of even letters that already occurred to their left."""
    seen = set()
    out = []
    for i, x in enumerate(w):
        if x % 2 == 0 and x in seen:
            out.append(i)
        seen.add(x)
    return out


def unshaded_rooks(T: RookPlacement) -> list[tuple[int, int]]:
    return [(i, j) for i, j in T.rooks if not is_shaded(T.m, i, j)]


def boundary_pi(w: RGWord) -> Chain:
    out: Chain = {}
    for n, i in enumerate(repeated_even_positions(w.letters)):
        out[w.replace(i, w[i] - 1)] = -1 if n % 2 else 1
    return out


def boundary_gamma(T: RookPlacement) -> Chain:
    out: Chain = {}
    for n, (i, j) in enumerate(unshaded_rooks(T)):
        out[T.move((i, j), (i + 1, j))] = -1 if n % 2 else 1
    return out


def boundary_of_chain(chain: Chain, boundary) -> Chain:
    out: Chain = {}
    for x, c in chain.items():
        for y, d in boundary(x).items():
            v = out.get(y, 0) + c * d
            if v:
                out[y] = v
            else:
                out.pop(y, None)
    return out


@dataclass(frozen=True, eq=False)
class BoundaryMatrix:
    rank: int  # maps rank ``rank`` chains to rank ``rank - 1``
    nrows: int
    ncols: int
    entries: dict = field(repr=False)  # (row, col) -> int

    def triples(self) -> list[tuple[int, int, int]]:
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]


@dataclass(frozen=True, eq=False)
class ChainComplex:
    poset: GradedPoset = field(repr=False)
    layers: tuple[tuple[int, ...], ...]  # handles per rank
    boundaries: tuple[BoundaryMatrix, ...]  # index i holds the map out of rank i; [0] is empty

    def boundary(self, x: Payload) -> Chain:
        return boundary_pi(x) if self.poset.kind == "pi" else boundary_gamma(x)

    @property
    def top(self) -> int:
        return len(self.layers) - 1


def build_complex(poset: GradedPoset, which: str | None = None) -> ChainComplex:
    """Assemble the boundary matrices of ``poset`` and confirm ``d o d = 0``."""
    which = which or poset.kind
    if which != poset.kind:
        raise ValueError(f"poset is of kind {poset.kind!r}, not {which!r}")
    bd = boundary_pi if which == "pi" else boundary_gamma
    layers = tuple(tuple(layer) for layer in poset.layers())
    position = {}
    for layer in layers:
        for pos, h in enumerate(layer):
            position[h] = pos

    mats = [BoundaryMatrix(0, 0, len(layers[0]) if layers else 0, {})]
    for r in range(1, len(layers)):
        entries = {}
        for col, h in enumerate(layers[r]):
            x = poset.elements[h]
            for y, c in bd(x).items():
                g = poset.index[y]
                if poset.ranks[g] != r - 1:
                    raise BoundaryError(f"boundary of {poset.label(h)} leaves rank {r - 1}")
                entries[(position[g], col)] = c
        mats.append(BoundaryMatrix(r, len(layers[r - 1]), len(layers[r]), entries))

    for h, x in enumerate(poset.elements):
        twice = boundary_of_chain(bd(x), bd)
        if twice:
            raise BoundaryError(f"boundary squared of {poset.label(h)} is {twice}")
    return ChainComplex(poset, layers, tuple(mats))


@dataclass(frozen=True)
class HomologyResult:
    dims: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[int, ...], ...]
    boundary_ranks: tuple[int, ...]
    basis_verified: bool

    def genfn(self) -> BiPoly:
        return BiPoly({(i, 0): d for i, d in enumerate(self.dims)})

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)


def _factors(mat: BoundaryMatrix, backend: str) -> list[int]:
    return snf.invariant_factors(mat.nrows, mat.ncols, mat.entries, backend)


def _basis_spans_homology(cx: ChainComplex, r: int, basis: list[int], image_rank: int,
                          backend: str) -> bool:
    # The claimed cycles together with the image of the next boundary must
    # span a saturated sublattice of full cycle rank: all invariant factors 1.
    for h in basis:
        if cx.boundary(cx.poset.elements[h]):
            return False
    layer = cx.layers[r]
    pos = {h: i for i, h in enumerate(layer)}
    entries = {}
    ncols = 0
    if r + 1 < len(cx.boundaries):
        nxt = cx.boundaries[r + 1]
        entries.update(nxt.entries)
        ncols = nxt.ncols
    for extra, h in enumerate(basis):
        entries[(pos[h], ncols + extra)] = 1
    factors = snf.invariant_factors(len(layer), ncols + len(basis), entries, backend)
    return len(factors) == image_rank + len(basis) and all(f == 1 for f in factors)


def homology(cx: ChainComplex, matching: Matching | None = None,
             backend: str = "auto") -> HomologyResult:
    """Betti numbers and torsion by Smith normal form.

    The claimed generators are the unmatched elements of the Morse matching;
    they are checked to be cycles whose classes form a basis of ``H_i``.
    """
    matching = matching or match(cx.poset)
    factors = [_factors(m, backend) for m in cx.boundaries]
    ranks = [len(f) for f in factors] + [0]
    top = cx.top
    dims = tuple(len(cx.layers[i]) - ranks[i] - ranks[i + 1] for i in range(top + 1))
    torsion = tuple(
        tuple(f for f in (factors[i + 1] if i + 1 <= top else []) if f > 1)
        for i in range(top + 1)
    )
    per_rank: list[list[int]] = [[] for _ in range(top + 1)]
    for h in sorted(matching.unmatched):
        per_rank[cx.poset.ranks[h]].append(h)
    verified = True
    for i in range(top + 1):
        if len(per_rank[i]) != dims[i]:
            verified = False
            continue
        if per_rank[i] and not _basis_spans_homology(cx, i, per_rank[i], ranks[i + 1], backend):
            verified = False
    return HomologyResult(dims, torsion, tuple(tuple(b) for b in per_rank),
                          tuple(ranks[:top + 1]), verified)


def expected_genfn(kind: str, a: int, b: int) -> BiPoly:
    """Closed form of the Poincare polynomial for ``pi(n,k)`` or ``gamma(m,n)``."""
    if kind == "pi":
        n, k = a, b
        return gauss_binomial(n - 1 - k // 2, (k - 1) // 2, square=True)
    m, n = a, b
    return gauss_binomial(m // 2, n, square=True).shift(n * (n - 1), 0)


def report_json_obj(cx: ChainComplex, result: HomologyResult, matrices: bool = False) -> dict:
    poset = cx.poset
    obj = {
        "kind": poset.kind,
        "params": list(poset.params),
        "ranks": [
            {
                "rank": i,
                "chains": len(cx.layers[i]),
                "dim": result.dims[i],
                "torsion": list(result.torsion[i]),
                "basis": [poset.label(h) for h in result.basis[i]],
            }
            for i in range(len(result.dims))
        ],
        "poincare": result.genfn().to_json_obj(),
        "torsion_free": result.torsion_free,
        "basis_verified": result.basis_verified,
    }
    if matrices:
        obj["boundaries"] = [
            {"rank": m.rank, "shape": [m.nrows, m.ncols], "entries": [list(t) for t in m.triples()]}
            for m in cx.boundaries[1:]
        ]
    return obj


def report_json(cx: ChainComplex, result: HomologyResult, matrices: bool = False) -> str:
    return json.dumps(report_json_obj(cx, result, matrices), indent=1)


def describe(cx: ChainComplex, result: HomologyResult) -> str:
    poset = cx.poset
    lines = [f"{poset.kind}{tuple(poset.params)}: {len(poset)} chains, Poincare polynomial {result.genfn()}"]
    for i, d in enumerate(result.dims):
        gens = " ".join(payload_label(poset.elements[h]) for h in result.basis[i])
        tors = f" torsion {list(result.torsion[i])}" if result.torsion[i] else ""
        lines.append(f"  H_{i}: rank {d}{tors}" + (f"  [{gens}]" if gens else ""))
    lines.append(f"  basis verified: {'yes' if result.basis_verified else 'no'}")
    return "\n".join(lines)
