"""NumPy implementations of the dense kernels.

This is the fallback backend used when the compiled extension is not
available (or is disabled via ``STEKLOV_PURE_PYTHON=1``).  The algorithms
are identical to the compiled ones; row-level vectorization keeps the
O(n^3) loops usable at desk scale.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import EigenConvergenceError, NotSPDError


def cholesky_factor(a):
    """Lower Cholesky factor of a symmetric positive definite matrix.

    Raises NotSPDError as soon as a non-positive pivot appears.
    """
    w = np.array(a, dtype=np.float64)
    n = w.shape[0]
    L = np.zeros((n, n))
    for j in range(n):
        d = w[j, j]
        if not d > 0.0:  # also catches NaN
            raise NotSPDError(f"matrix not SPD: pivot {d!r} at column {j}")
        r = math.sqrt(d)
        L[j, j] = r
        if j + 1 < n:
            col = w[j + 1:, j] / r
            L[j + 1:, j] = col
            w[j + 1:, j + 1:] -= np.outer(col, col)
    return L


def cholesky_solve(L, rhs):
    """Solve A x = rhs given the lower Cholesky factor L of A.

    rhs may be one vector or a matrix of stacked right-hand side columns.
    """
    r = np.asarray(rhs, dtype=np.float64)
    one_d = r.ndim == 1
    x = np.array(r.reshape(r.shape[0], -1), dtype=np.float64)
    n = L.shape[0]
    for i in range(n):
        if i:
            x[i] -= L[i, :i] @ x[:i]
        x[i] /= L[i, i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            x[i] -= L[i + 1:, i] @ x[i + 1:]
        x[i] /= L[i, i]
    return x[:, 0] if one_d else x


def _offdiag_norm(w):
    total = float((w * w).sum()) - float((np.diagonal(w) ** 2).sum())
    return math.sqrt(max(0.0, total))


def _rotate(w, v, p, q, apq):
    app = w[p, p]
    aqq = w[q, q]
    theta = (aqq - app) / (2.0 * apq)
    if theta >= 0.0:
        t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
    else:
        t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    cp = w[:, p].copy()
    cq = w[:, q].copy()
    w[:, p] = c * cp - s * cq
    w[:, q] = s * cp + c * cq
    rp = w[p, :].copy()
    rq = w[q, :].copy()
    w[p, :] = c * rp - s * rq
    w[q, :] = s * rp + c * rq
    # the 2x2 pivot block is written from the closed form for accuracy
    w[p, p] = app - t * apq
    w[q, q] = aqq + t * apq
    w[p, q] = 0.0
    w[q, p] = 0.0

    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp - s * vq
    v[:, q] = s * vp + c * vq


def jacobi_eigh(a, tol, max_sweeps):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues, eigenvectors-as-columns), unsorted.  Convergence
    is declared when the off-diagonal Frobenius mass drops below
    ``tol * max(1, ||A||_F)``; exceeding ``max_sweeps`` raises
    EigenConvergenceError.
    """
    w = np.array(a, dtype=np.float64)
    n = w.shape[0]
    v = np.eye(n)
    if n < 2:
        return np.diagonal(w).copy(), v
    limit = tol * max(1.0, math.sqrt(float((w * w).sum())))
    skip = limit / (2.0 * n)
    for _ in range(max_sweeps):
        if _offdiag_norm(w) <= limit:
            return np.diagonal(w).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                if abs(apq) > skip:
                    _rotate(w, v, p, q, apq)
    if _offdiag_norm(w) <= limit:
        return np.diagonal(w).copy(), v
    raise EigenConvergenceError(
        f"Jacobi sweep cap {max_sweeps} exceeded at dimension {n}")
