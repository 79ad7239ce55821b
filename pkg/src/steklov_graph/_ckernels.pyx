# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense kernels: Cholesky factor/solve and cyclic Jacobi."""

from libc.math cimport fabs, sqrt

import numpy as np

from .errors import EigenConvergenceError, NotSPDError


def cholesky_factor(a):
    """Lower Cholesky factor of a symmetric positive definite matrix."""
    w = np.array(a, dtype=np.float64, order="C")
    cdef double[:, ::1] m = w
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double d, r, mkj
    for j in range(n):
        d = m[j, j]
        if not d > 0.0:
            raise NotSPDError(f"matrix not SPD: pivot {d!r} at column {j}")
        r = sqrt(d)
        m[j, j] = r
        for i in range(j + 1, n):
            m[i, j] /= r
        for k in range(j + 1, n):
            mkj = m[k, j]
            if mkj != 0.0:
                for i in range(k, n):
                    m[i, k] -= m[i, j] * mkj
    return np.tril(w)


def cholesky_solve(L, rhs):
    """Solve A x = rhs given the lower Cholesky factor of A (1-D or 2-D rhs)."""
    r = np.asarray(rhs, dtype=np.float64)
    one_d = r.ndim == 1
    x = np.array(r.reshape(r.shape[0], -1), dtype=np.float64, order="C")
    cdef double[:, ::1] lf = np.ascontiguousarray(L, dtype=np.float64)
    cdef double[:, ::1] y = x
    cdef Py_ssize_t n = lf.shape[0], nrhs = y.shape[1]
    cdef Py_ssize_t i, k, c
    cdef double acc
    for c in range(nrhs):
        for i in range(n):
            acc = y[i, c]
            for k in range(i):
                acc -= lf[i, k] * y[k, c]
            y[i, c] = acc / lf[i, i]
        for i in range(n - 1, -1, -1):
            acc = y[i, c]
            for k in range(i + 1, n):
                acc -= lf[k, i] * y[k, c]
            y[i, c] = acc / lf[i, i]
    return x[:, 0] if one_d else x


cdef double _offdiag_norm(double[:, ::1] m, Py_ssize_t n):
    cdef double total = 0.0
    cdef Py_ssize_t p, q
    for p in range(n - 1):
        for q in range(p + 1, n):
            total += 2.0 * m[p, q] * m[p, q]
    return sqrt(total)


def jacobi_eigh(a, double tol, long max_sweeps):
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues, eigenvectors-as-columns), unsorted.  Convergence
    is declared when the off-diagonal Frobenius mass drops below
    ``tol * max(1, ||A||_F)``; exceeding ``max_sweeps`` raises
    EigenConvergenceError.
    """
    w = np.array(a, dtype=np.float64, order="C")
    cdef double[:, ::1] m = w
    cdef Py_ssize_t n = m.shape[0]
    v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] v = v_arr
    if n < 2:
        return np.diagonal(w).copy(), v_arr

    cdef double fro = 0.0
    cdef Py_ssize_t p, q, i
    for p in range(n):
        for q in range(n):
            fro += m[p, q] * m[p, q]
    cdef double limit = tol * max(1.0, sqrt(fro))
    cdef double skip = limit / (2.0 * n)
    cdef double apq, app, aqq, theta, t, c, s, xp, xq
    cdef long sweep
    for sweep in range(max_sweeps):
        if _offdiag_norm(m, n) <= limit:
            return np.diagonal(w).copy(), v_arr
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if fabs(apq) <= skip:
                    continue
                app = m[p, p]
                aqq = m[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + sqrt(1.0 + theta * theta))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    xp = m[i, p]
                    xq = m[i, q]
                    m[i, p] = c * xp - s * xq
                    m[i, q] = s * xp + c * xq
                for i in range(n):
                    xp = m[p, i]
                    xq = m[q, i]
                    m[p, i] = c * xp - s * xq
                    m[q, i] = s * xp + c * xq
                m[p, p] = app - t * apq
                m[q, q] = aqq + t * apq
                m[p, q] = 0.0
                m[q, p] = 0.0
                for i in range(n):
                    xp = v[i, p]
                    xq = v[i, q]
                    v[i, p] = c * xp - s * xq
                    v[i, q] = s * xp + c * xq
    if _offdiag_norm(m, n) <= limit:
        return np.diagonal(w).copy(), v_arr
    raise EigenConvergenceError(
        f"Jacobi sweep cap {max_sweeps} exceeded at dimension {n}")
