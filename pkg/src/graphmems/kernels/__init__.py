"""Kernel backend selection.

The compiled Cython module is preferred when present; set
``GRAPHMEMS_PURE=1`` to force the numpy fallback.  Both backends share
the same contracts and are cross-checked in the test suite.
"""
from __future__ import annotations

import os

BACKEND = "pure"
if not os.environ.get("GRAPHMEMS_PURE"):
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import pure as _impl
else:
    from . import pure as _impl

suffix_array = _impl.suffix_array
lcp_array = _impl.lcp_array
string_mems = _impl.string_mems

__all__ = ["BACKEND", "suffix_array", "lcp_array", "string_mems"]
