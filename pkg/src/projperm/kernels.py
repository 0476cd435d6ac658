"""Selects the compiled kernels when built, else the pure-Python ones.

Set ``PROJPERM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
if not os.environ.get("PROJPERM_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

star_distance = _impl.star_distance
pgl_scan = _impl.pgl_scan
lehmer_rank = _impl.lehmer_rank
bfs_levels = _impl.bfs_levels
UNREACHED = _pykernels.UNREACHED

__all__ = ["BACKEND", "star_distance", "pgl_scan", "lehmer_rank", "bfs_levels", "UNREACHED"]
