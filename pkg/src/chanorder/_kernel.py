"""Pick the simplex pivot backend at import time.

The compiled ``_simplex_core`` is used when it was built; setting
``CHANORDER_PURE_PYTHON=1`` forces the numpy fallback.
"""

import os

from . import _simplex_py

BACKEND = "python"
iterate = _simplex_py.iterate
pivot = _simplex_py.pivot

if not os.environ.get("CHANORDER_PURE_PYTHON"):
    try:
        from . import _simplex_core
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        iterate = _simplex_core.iterate
        pivot = _simplex_core.pivot


def backends():
    """Return ``{name: (iterate, pivot)}`` for every importable backend."""
    found = {"python": (_simplex_py.iterate, _simplex_py.pivot)}
    try:
        from . import _simplex_core
    except ImportError:
        pass
    else:
        found["cython"] = (_simplex_core.iterate, _simplex_core.pivot)
    return found
