"""Lower bounds for the first non-zero Steklov eigenvalue.

Two combinatorial bounds in terms of the boundary size ``b`` and the
boundary diameter ``d_B``, one weighted bound in terms of the minimum edge
weight and the boundary volume, and the boundary-spread minimization that
powers the refined bound: minimize ``x_1 - x_b`` over non-increasing unit
vectors with zero sum.  The spread minimum has a closed form, a family of
two-level candidate vectors, and an independent sampling/descent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import GraphWithBoundary, boundary_diameter, boundary_volume
from .steklov import Normalization, steklov_spectrum

BOUND_VIOLATION_TOL = 1e-8
_DESCENT_STEP_START = 0.1
_DESCENT_STEP_MIN = 1e-7
_DESCENT_STARTS = 24


def _check_int(value, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def thm1_bound(b: int, d_b: int) -> float:
    """Lower bound b / ((b-1)^2 d_B); tight exactly for two boundary vertices."""
    _check_int(b, "b", 2)
    _check_int(d_b, "d_B", 1)
    return b / ((b - 1) ** 2 * d_b)


def thm2_bound(b: int, d_b: int) -> float:
    """Refined lower bound b / (floor(b/2) ceil(b/2) d_B).

    Always at least as large as :func:`thm1_bound`; asymptotically attained
    by the two-hub families as the boundary diameter grows.
    """
    _check_int(b, "b", 2)
    _check_int(d_b, "d_B", 1)
    return b / ((b // 2) * ((b + 1) // 2) * d_b)


def weighted_bound(g: GraphWithBoundary) -> float:
    """Lower bound c / (d_B Vol(B)) with c the minimum edge weight.

    Applies to the MEASURE-normalized first eigenvalue of weighted graphs.
    """
    if g.b < 2:
        raise ValueError("weighted bound needs at least two boundary vertices")
    if not g.edges:
        raise ValueError("weighted bound undefined on an edgeless graph")
    c = 1.0 if g.weights is None else min(g.weights)
    return c / (boundary_diameter(g) * boundary_volume(g))


def prop1_min_closed(b: int) -> float:
    """Closed-form spread minimum sqrt(b) / (sqrt(floor(b/2)) sqrt(ceil(b/2)))."""
    _check_int(b, "b", 2)
    return math.sqrt(b) / (math.sqrt(b // 2) * math.sqrt((b + 1) // 2))


@dataclass(frozen=True, eq=False)
class SpreadCandidate:
    """Two-level feasible vector: ``split`` coordinates at the lower level."""

    split: int
    vector: np.ndarray
    spread: float


def spread_candidates(b: int) -> list[SpreadCandidate]:
    """All two-level candidates y^k, k = 1..b-1, with their spreads.

    Each vector has ``b - k`` equal top entries and ``k`` equal bottom
    entries, zero sum and unit norm; the spread sqrt(b)/(sqrt(b-k) sqrt(k))
    is minimal at the balanced split ``k = floor(b/2)``.
    """
    _check_int(b, "b", 2)
    rb = math.sqrt(b)
    out = []
    for k in range(1, b):
        rk = math.sqrt(k)
        rbk = math.sqrt(b - k)
        top = k * rbk / ((b - k) * rb * rk)
        bot = -rbk / (rb * rk)
        y = np.concatenate([np.full(b - k, top), np.full(k, bot)])
        out.append(SpreadCandidate(k, y, rb / (rbk * rk)))
    return out


def _project_feasible(x: np.ndarray) -> np.ndarray | None:
    """Center, normalize and sort non-increasing; None if degenerate."""
    x = x - x.mean()
    nrm = math.sqrt(float((x * x).sum()))
    if nrm < 1e-12:
        return None
    return np.sort(x / nrm)[::-1]


def _pair_descent(x: np.ndarray, iters: int) -> tuple[float, np.ndarray]:
    """Projected local descent on the spread via coordinate-pair perturbations.

    Steps halve from 0.1 down to 1e-7; after each trial step the point is
    re-centered, re-normalized and re-sorted, so it never leaves the
    feasible set.  ``iters`` caps the number of full passes.
    """
    b = x.size
    best = float(x[0] - x[-1])
    step = _DESCENT_STEP_START
    passes = 0
    while step >= _DESCENT_STEP_MIN and passes < iters:
        improved = False
        for i in range(b - 1):
            for j in range(i + 1, b):
                for delta in (step, -step):
                    y = x.copy()
                    y[i] += delta
                    y[j] -= delta
                    y = _project_feasible(y)
                    if y is None:
                        continue
                    fy = float(y[0] - y[-1])
                    if fy < best - 1e-15:
                        x, best = y, fy
                        improved = True
        passes += 1
        if not improved:
            step /= 2.0
    return best, x


def prop1_oracle(b: int, samples: int = 10_000, iters: int = 200,
                 seed: int = 0) -> tuple[float, np.ndarray]:
    """Sampling + projected-descent estimate of the spread minimum.

    Draws ``samples`` Gaussian points, projects each onto the feasible set
    (zero sum, unit norm, sorted non-increasing), then runs pair-perturbation
    descent from the lowest-spread starts.  Deterministic for a fixed seed;
    always returns a feasible point, so the value can only overshoot the true
    minimum.
    """
    _check_int(b, "b", 2)
    _check_int(samples, "samples", 1)
    _check_int(iters, "iters", 0)
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((samples, b))
    pts -= pts.mean(axis=1, keepdims=True)
    norms = np.sqrt((pts * pts).sum(axis=1))
    pts = pts[norms > 1e-12]
    pts /= np.sqrt((pts * pts).sum(axis=1))[:, None]
    pts = np.sort(pts, axis=1)[:, ::-1]
    spreads = pts[:, 0] - pts[:, -1]
    order = np.argsort(spreads, kind="stable")

    best_val = float(spreads[order[0]])
    best_x = pts[order[0]].copy()
    for idx in order[:_DESCENT_STARTS]:
        val, x = _pair_descent(pts[idx].copy(), iters)
        if val < best_val:
            best_val, best_x = val, x
    return best_val, best_x


@dataclass(frozen=True, eq=False)
class SpreadProblem:
    """Spread minimization instance: closed form, candidates and oracle result."""

    b: int
    closed_form: float
    candidates: list[SpreadCandidate]
    oracle_min: float
    oracle_argmin: np.ndarray


def spread_problem(b: int, samples: int = 10_000, iters: int = 200,
                   seed: int = 0) -> SpreadProblem:
    """Assemble the full spread-problem record for one boundary size."""
    closed = prop1_min_closed(b)
    cands = spread_candidates(b)
    oracle_min, oracle_argmin = prop1_oracle(b, samples, iters, seed)
    return SpreadProblem(b, closed, cands, oracle_min, oracle_argmin)


@dataclass(frozen=True)
class BoundReport:
    """Exact sigma_1 of one graph next to every applicable lower bound.

    ``weighted`` is populated in MEASURE normalization only, where the
    weighted bound is guaranteed.  ``violated`` lists bounds that exceed
    sigma_1 beyond tolerance; a non-empty list indicates an implementation
    bug, never expected behavior.
    """

    b: int
    d_b: int
    sigma1: float
    thm1: float
    thm2: float
    weighted: float | None
    slack_thm2: float
    violated: tuple[str, ...] = ()


def check_bounds(g: GraphWithBoundary,
                 norm: Normalization = Normalization.UNIT) -> BoundReport:
    """Compute sigma_1 and compare it against all applicable lower bounds.

    The combinatorial bounds are flagged as guaranteed only in the UNIT
    convention on unit-weight graphs; the weighted bound only in MEASURE.
    """
    if g.b < 2:
        raise ValueError("bound report needs at least two boundary vertices")
    b = g.b
    d_b = boundary_diameter(g)
    s1 = float(steklov_spectrum(g, norm).sigmas[1])
    t1 = thm1_bound(b, d_b)
    t2 = thm2_bound(b, d_b)
    wb = weighted_bound(g) if norm is Normalization.MEASURE else None

    unit_weights = g.weights is None or all(w == 1.0 for w in g.weights)
    violated = []
    if norm is Normalization.UNIT and unit_weights:
        if s1 < t1 - BOUND_VIOLATION_TOL:
            violated.append("thm1")
        if s1 < t2 - BOUND_VIOLATION_TOL:
            violated.append("thm2")
    if wb is not None and s1 < wb - BOUND_VIOLATION_TOL:
        violated.append("weighted")
    return BoundReport(b, d_b, s1, t1, t2, wb, s1 - t2, tuple(violated))
