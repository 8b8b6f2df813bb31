"""ARX time-series model evolution.

Identification-seeded genetic search over annual time-series data: ARX
models fitted by least squares over sliding windows become a real-coded
chromosome population evolved under a 3x3 selection/crossover/mutation
matrix with three adaptation-function variants.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _core_doc  # noqa: F401
except ImportError:  # running against a bare CMake build tree
    from _core import *  # noqa: F401,F403
