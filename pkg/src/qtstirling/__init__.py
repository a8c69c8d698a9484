"""Exact q- and (q,t)-Stirling numbers, Stirling posets, their homology and
the orthogonality involutions."""

from .qtpoly import BiPoly, gauss_binomial, q_int, qt_int
from .rgwords import RGWord, SetPartition
from .rookboards import RookPlacement

__version__ = "0.1.0"

__all__ = ["BiPoly", "RGWord", "RookPlacement", "SetPartition",
           "gauss_binomial", "q_int", "qt_int", "__version__"]
