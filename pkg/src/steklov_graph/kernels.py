"""Kernel backend selection.

The compiled extension is used when importable; otherwise the NumPy
fallback takes over.  Set ``STEKLOV_PURE_PYTHON=1`` before import to force
the fallback (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("STEKLOV_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

cholesky_factor = _impl.cholesky_factor
cholesky_solve = _impl.cholesky_solve
jacobi_eigh = _impl.jacobi_eigh


def backend() -> str:
    """Name of the active kernel backend ('cython' or 'python')."""
    return BACKEND
