"""Benchmark the compiled kernels against the NumPy fallback.

Usage:
    python -m steklov_graph.benchmark [--repeat 3] [--csv]

Times the two hot kernels (Cholesky factor+solve and the Jacobi
eigensolver) on seeded inputs of growing size, for every backend that can
be imported.  When the compiled extension is missing only the fallback
column is reported.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

CHOLESKY_SIZES = (100, 200, 400, 800)
JACOBI_SIZES = (16, 32, 64, 128)


def _spd(n: int, rng) -> np.ndarray:
    m = rng.standard_normal((n, n))
    return m @ m.T + n * np.eye(n)


def _sym(n: int, rng) -> np.ndarray:
    m = rng.standard_normal((n, n))
    return (m + m.T) / 2.0


def _time(fn, repeat: int) -> float:
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(repeat: int = 3):
    """Yield (workload, size, python_seconds, cython_seconds_or_None)."""
    rng = np.random.default_rng(42)
    for n in CHOLESKY_SIZES:
        a = _spd(n, rng)
        rhs = rng.standard_normal((n, 8))

        def solve(mod, a=a, rhs=rhs):
            mod.cholesky_solve(mod.cholesky_factor(a), rhs)

        py = _time(lambda: solve(_pykernels), repeat)
        cy = _time(lambda: solve(_ckernels), repeat) if _ckernels else None
        yield ("cholesky_solve", n, py, cy)

    for n in JACOBI_SIZES:
        a = _sym(n, rng)

        def eig(mod, a=a):
            mod.jacobi_eigh(a, 1e-12, 100 * n * n)

        py = _time(lambda: eig(_pykernels), repeat)
        cy = _time(lambda: eig(_ckernels), repeat) if _ckernels else None
        yield ("jacobi_eigh", n, py, cy)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per measurement (best is kept)")
    parser.add_argument("--csv", action="store_true",
                        help="machine-readable output")
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("note: compiled extension not available; timing the fallback only",
              file=sys.stderr)

    rows = list(run(args.repeat))
    if args.csv:
        print("workload,size,python_s,cython_s,speedup")
        for wl, n, py, cy in rows:
            cy_s = "" if cy is None else f"{cy:.6f}"
            ratio = "" if cy is None else f"{py / cy:.2f}"
            print(f"{wl},{n},{py:.6f},{cy_s},{ratio}")
    else:
        print(f"{'workload':<16}{'size':>6}{'python [s]':>14}{'cython [s]':>14}{'speedup':>10}")
        for wl, n, py, cy in rows:
            cy_s = "-" if cy is None else f"{cy:.6f}"
            ratio = "-" if cy is None else f"{py / cy:.1f}x"
            print(f"{wl:<16}{n:>6}{py:>14.6f}{cy_s:>14}{ratio:>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
