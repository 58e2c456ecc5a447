"""Kernel backend selection.

The compiled Cython kernels are used when the extension built; setting the
environment variable TCORE_PURE_PYTHON=1 forces the pure-Python kernels
(useful for benchmarking and debugging).
"""

import os

from . import _series_py

if os.environ.get("TCORE_PURE_PYTHON"):
    kernels = _series_py
    BACKEND = "python"
else:
    try:
        from . import _series_cy as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        kernels = _series_py
        BACKEND = "python"
