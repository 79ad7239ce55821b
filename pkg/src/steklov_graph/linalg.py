"""Dense symmetric linear algebra with explicit numeric contracts.

Matrices are plain float64 ndarrays; :func:`as_dense_sym` is the gate that
checks finiteness and symmetry before any factorization.  The heavy loops
(Cholesky, cyclic Jacobi) live in the kernel backend selected at import
time, see :mod:`steklov_graph.kernels`.

Contracts enforced here:

* ``solve_spd``: infinity-norm residual at most ``1e-9 * (1 + ||rhs||_inf)``
  per right-hand side (one refinement step is attempted before giving up).
* ``eigenvalues_symmetric``: eigenvalues ascending, eigenvectors orthonormal
  columns, deterministic sign (first coordinate above 1e-12 is positive).
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import NumericalError

SYMMETRY_RTOL = 1e-12
SOLVE_RESIDUAL_RTOL = 1e-9
JACOBI_OFFDIAG_TOL = 1e-12
JACOBI_SWEEP_CAP_FACTOR = 100
SIGN_EPS = 1e-12


def as_dense_sym(entries) -> np.ndarray:
    """Validate a dense symmetric matrix and return an exactly symmetric copy.

    Accepts anything array-like, requires a square 2-D shape, finite
    entries and ``|A_ij - A_ji| <= 1e-12 * max(1, max|A|)``.
    """
    a = np.asarray(entries, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size == 0:
        raise ValueError("matrix must be non-empty")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(a).max()))
    if float(np.abs(a - a.T).max()) > SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric")
    return (a + a.T) / 2.0


def solve_spd(a, rhs) -> np.ndarray:
    """Solve ``A x = rhs`` for symmetric positive definite ``A``.

    ``rhs`` may be a vector or a matrix of stacked right-hand side columns.
    Raises NotSPDError if a non-positive pivot is met and NumericalError if
    the residual contract cannot be satisfied.
    """
    a = as_dense_sym(a)
    r = np.asarray(rhs, dtype=np.float64)
    if r.ndim not in (1, 2) or r.shape[0] != a.shape[0]:
        raise ValueError(f"right-hand side shape {r.shape} does not match matrix dim {a.shape[0]}")
    if r.size and not np.isfinite(r).all():
        raise ValueError("right-hand side has non-finite entries")

    L = kernels.cholesky_factor(a)
    x = kernels.cholesky_solve(L, r)

    def _resid_ok(x):
        resid = np.abs(r - a @ x)
        bound = SOLVE_RESIDUAL_RTOL * (1.0 + np.abs(r).max(axis=0))
        return bool(np.all(resid.max(axis=0) <= bound)) if r.size else True

    if not _resid_ok(x):
        x = x + kernels.cholesky_solve(L, r - a @ x)
        if not _resid_ok(x):
            raise NumericalError("solve_spd could not meet its residual bound")
    return x


def orient_columns(v: np.ndarray) -> np.ndarray:
    """Flip column signs so each column's first non-negligible entry is positive."""
    v = v.copy()
    for k in range(v.shape[1]):
        idx = np.flatnonzero(np.abs(v[:, k]) > SIGN_EPS)
        if idx.size and v[idx[0], k] < 0.0:
            v[:, k] = -v[:, k]
    return v


def eigenvalues_symmetric(a) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a symmetric matrix.

    Returns ascending eigenvalues and the matching orthonormal eigenvectors
    as columns, with deterministic sign and tie order.
    """
    a = as_dense_sym(a)
    n = a.shape[0]
    w, v = kernels.jacobi_eigh(a, JACOBI_OFFDIAG_TOL,
                               JACOBI_SWEEP_CAP_FACTOR * max(1, n * n))
    order = np.argsort(w, kind="stable")
    return w[order], orient_columns(v[:, order])
