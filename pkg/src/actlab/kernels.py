"""Kernel selection: compiled ``_speedups`` when importable, else pure Python.

Set ``ACTLAB_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
active implementation; ``py`` always exposes the fallback for cross-checks.
"""

import os

from . import _pykernels as py

if os.environ.get("ACTLAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = py
        BACKEND = "python"

close_partial = _impl.close_partial
hom_search = _impl.hom_search
transformation_homs = _impl.transformation_homs
canonical_table = _impl.canonical_table
all_maps = py.all_maps

__all__ = [
    "BACKEND",
    "all_maps",
    "canonical_table",
    "close_partial",
    "hom_search",
    "py",
    "transformation_homs",
]
