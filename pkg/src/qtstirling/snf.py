"""Smith normal form front end.

The compiled int64 kernel is used when it imported and the matrix is small
enough to hold densely; on overflow or when the extension is missing the
pure-Python sparse routine takes over.  Set ``QTSTIRLING_PURE_PYTHON=1`` to
force the fallback.
"""

from __future__ import annotations

import os
from array import array
from typing import Mapping

from . import _snf_py

try:
    from ._snf_kernel import diagonalize_dense as _diagonalize_dense
except ImportError:  # extension not built
    _diagonalize_dense = None

HAVE_COMPILED = _diagonalize_dense is not None
DENSE_LIMIT = 16_000_000  # cells


def _use_compiled() -> bool:
    return HAVE_COMPILED and os.environ.get("QTSTIRLING_PURE_PYTHON", "") not in ("1", "true", "yes")


def backend_name() -> str:
    return "compiled" if _use_compiled() else "python"


def diagonal_compiled(nrows: int, ncols: int, entries: Mapping[tuple[int, int], int]) -> list[int]:
    if not HAVE_COMPILED:
        raise RuntimeError("compiled SNF kernel is not available")
    buf = array("q", bytes(8 * nrows * ncols))
    for (r, c), v in entries.items():
        buf[r * ncols + c] = v
    return list(_diagonalize_dense(buf, nrows, ncols))


def invariant_factors(nrows: int, ncols: int, entries: Mapping[tuple[int, int], int],
                      backend: str = "auto") -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    ``entries`` maps ``(row, col)`` to the nonzero values; ``backend`` is one
    of ``"auto"``, ``"compiled"`` or ``"python"``.
    """
    if not entries:
        return []
    if backend == "python" or (backend == "auto" and not _use_compiled()):
        return _snf_py.invariant_factors(entries)
    if backend == "compiled" or nrows * ncols <= DENSE_LIMIT:
        try:
            return _snf_py.normalize_diagonal(diagonal_compiled(nrows, ncols, entries))
        except OverflowError:
            if backend == "compiled":
                raise
    return _snf_py.invariant_factors(entries)


def matrix_rank(nrows: int, ncols: int, entries: Mapping[tuple[int, int], int],
                backend: str = "auto") -> int:
    return len(invariant_factors(nrows, ncols, entries, backend))
