"""Backend selection for the bitset kernels.

The compiled extension is used when it was built and the graph fits in a
64-bit word; otherwise the pure-Python module is used.  Setting the
environment variable ``MAXSUB_PURE_PYTHON=1`` before import disables the
compiled backend.
"""

import os
from array import array

from . import _kernels_py

try:
    if os.environ.get("MAXSUB_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("compiled kernels disabled by MAXSUB_PURE_PYTHON")
    from . import _kernels_c
except ImportError:
    _kernels_c = None

WORD_BITS = 64

HAVE_COMPILED = _kernels_c is not None
_preferred = "c" if HAVE_COMPILED else "python"


def available_backends():
    return ["c", "python"] if HAVE_COMPILED else ["python"]


def get_backend():
    return _preferred


def set_backend(name):
    """Choose the backend used by graphs constructed from now on."""
    global _preferred
    if name not in available_backends():
        raise ValueError(f"kernel backend {name!r} is not available")
    _preferred = name


def for_graph(n):
    """Return ``(module, table_factory)`` for a graph with ``n`` vertices."""
    if _preferred == "c" and n <= WORD_BITS:
        return _kernels_c, _word_table
    return _kernels_py, tuple


def _word_table(values):
    return array("Q", values)
