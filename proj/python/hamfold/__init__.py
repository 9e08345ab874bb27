"""Walk homotopy in Hamming graphs.

Elementary homotopy moves on walks, reduction of based closed walks to
canonical products of ground walks with replayable certificates,
fundamental-group classes, quotient covers with lifting and monodromy, pleat
detection, and a brute-force search oracle.
"""

from hamfold._core import *  # noqa: F401,F403
from hamfold._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
