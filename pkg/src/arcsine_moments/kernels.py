"""Backend selection for the fixed-point series kernels.

The compiled module is used when it imports; set ``ARCSINE_MOMENTS_PURE=1``
to force the pure-Python fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("ARCSINE_MOMENTS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

g_sum = _impl.g_sum
h_sum = _impl.h_sum
odd_square_sum = _impl.odd_square_sum

__all__ = ["BACKEND", "g_sum", "h_sum", "odd_square_sum", "backends"]


def backends() -> dict:
    """Every importable backend module by name (for tests and benchmarks)."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
