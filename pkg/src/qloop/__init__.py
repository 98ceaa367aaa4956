"""Exact q-characters for quantum loop algebra modules.

Core surfaces: the Y-variable Laurent ring (ymono), rank-one closed
forms and the R-matrix (sl2), Dynkin quiver representations and quiver
Grassmannians (quiverrep), the graded preprojective algebra route to
fundamental and standard q-characters (preproj), cluster algebra seeds
and enumeration (cluster), and the cross-verification engine with the
command line interface (engine, cli).
"""

from .cartan import CartanData
from .errors import (CapExceededError, ConsistencyError, InvalidInputError,
                     QloopError, SingularityError, WindowTooSmallError)
from .ymono import YMonomial, YPolynomial, WeightVector

__version__ = "0.1.0"

__all__ = [
    "CartanData", "YMonomial", "YPolynomial", "WeightVector",
    "QloopError", "InvalidInputError", "SingularityError",
    "ConsistencyError", "WindowTooSmallError", "CapExceededError",
    "__version__",
]
