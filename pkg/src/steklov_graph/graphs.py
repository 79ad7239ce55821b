"""Finite graphs with a distinguished boundary.

The central object pairs a simple connected graph with a set of boundary
vertices that are pairwise non-adjacent, each touching the interior.  Edge
weights are optional and strictly positive; ``weights=None`` means weight 1
everywhere.  Parallel edges are not stored: a multigraph input must be
reduced beforehand by summing the weights of its parallel edges, which
leaves every quantity derived here (Laplacian, vertex measures, volumes,
minimum edge weight) unchanged.

Vertex ids are dense integers ``0..n-1`` and the boundary tuple is kept
sorted; every boundary-indexed vector or matrix in the package follows
that order.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import GraphFormatError

Edge = tuple[int, int]

_JSON_KEYS = {"n", "edges", "boundary"}


def _as_vertex(value, n: int, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    if not 0 <= value < n:
        raise ValueError(f"{what} {value} out of range 0..{n - 1}")
    return value


@dataclass(frozen=True)
class GraphWithBoundary:
    """A simple graph together with a nonempty set of boundary vertices.

    ``edges`` holds each unordered pair once as ``(i, j)`` with ``i < j``;
    ``weights``, when present, is parallel to ``edges``.  The constructor
    normalizes edge order, sorts everything deterministically and rejects
    malformed input (loops, duplicate pairs, out-of-range ids, non-positive
    weights).  The boundary axioms themselves (no edge inside the boundary,
    boundary touching the interior, connectivity) are *not* enforced here;
    use :func:`validate` to check them.
    """

    n: int
    edges: tuple[Edge, ...]
    boundary: tuple[int, ...]
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")

        normalized: list[Edge] = []
        for pair in self.edges:
            i, j = pair
            i = _as_vertex(i, self.n, "edge endpoint")
            j = _as_vertex(j, self.n, "edge endpoint")
            if i == j:
                raise ValueError(f"loop edge at vertex {i} is not allowed")
            normalized.append((i, j) if i < j else (j, i))
        order = sorted(range(len(normalized)), key=lambda k: normalized[k])
        edges = tuple(normalized[k] for k in order)
        for a, b in zip(edges, edges[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}; sum parallel weights before construction")

        weights = self.weights
        if isinstance(weights, Mapping):
            lookup = {}
            for key, w in weights.items():
                i, j = key
                lookup[(i, j) if i < j else (j, i)] = w
            try:
                weights = [lookup[e] for e in edges]
            except KeyError as exc:
                raise ValueError(f"weight missing for edge {exc.args[0]}") from exc
        elif weights is not None:
            if len(weights) != len(normalized):
                raise ValueError("weights must be given for every edge")
            weights = [weights[k] for k in order]
        if weights is not None:
            weights = tuple(float(w) for w in weights)
            for w in weights:
                if not (math.isfinite(w) and w > 0.0):
                    raise ValueError(f"edge weights must be positive and finite, got {w!r}")

        boundary = tuple(sorted(_as_vertex(v, self.n, "boundary vertex") for v in self.boundary))
        if not boundary:
            raise ValueError("boundary must contain at least one vertex")
        if len(set(boundary)) != len(boundary):
            raise ValueError("boundary vertices must be distinct")

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "weights", weights)

    @property
    def b(self) -> int:
        """Number of boundary vertices."""
        return len(self.boundary)

    @property
    def interior(self) -> tuple[int, ...]:
        bset = set(self.boundary)
        return tuple(v for v in range(self.n) if v not in bset)

    @property
    def is_weighted(self) -> bool:
        return self.weights is not None

    def edge_weight(self, idx: int) -> float:
        return 1.0 if self.weights is None else self.weights[idx]


def adjacency_lists(g: GraphWithBoundary) -> list[list[tuple[int, float]]]:
    """Per-vertex list of (neighbor, weight) pairs."""
    nbrs: list[list[tuple[int, float]]] = [[] for _ in range(g.n)]
    for idx, (i, j) in enumerate(g.edges):
        w = g.edge_weight(idx)
        nbrs[i].append((j, w))
        nbrs[j].append((i, w))
    return nbrs


def vertex_measures(g: GraphWithBoundary) -> np.ndarray:
    """Measure m_i of each vertex: the sum of incident edge weights."""
    m = np.zeros(g.n)
    for idx, (i, j) in enumerate(g.edges):
        w = g.edge_weight(idx)
        m[i] += w
        m[j] += w
    return m


@dataclass(frozen=True)
class Violation:
    """One failed structural invariant, with the offending vertices/edges."""

    code: str
    message: str
    offenders: tuple = ()


def validate(g: GraphWithBoundary) -> list[Violation]:
    """Check the boundary axioms; an empty list means the graph is valid.

    Reported violations: an edge joining two boundary vertices, a boundary
    vertex with no interior neighbor, and disconnectedness.  Representation
    problems (loops, duplicates, bad weights) cannot occur because the
    constructor rejects them.
    """
    violations: list[Violation] = []
    bset = set(g.boundary)

    inside = tuple(e for e in g.edges if e[0] in bset and e[1] in bset)
    if inside:
        violations.append(Violation(
            "edge-within-boundary",
            f"E(B,B) ≠ ∅: boundary-boundary edges {list(inside)}",
            inside))

    nbrs = adjacency_lists(g)
    lonely = tuple(v for v in g.boundary
                   if not any(u not in bset for u, _ in nbrs[v]))
    if lonely:
        violations.append(Violation(
            "boundary-without-interior-neighbor",
            f"δ(B^c) ≠ B: boundary vertices {list(lonely)} have no interior neighbor",
            lonely))

    seen = [False] * g.n
    queue = deque([0])
    seen[0] = True
    while queue:
        v = queue.popleft()
        for u, _ in nbrs[v]:
            if not seen[u]:
                seen[u] = True
                queue.append(u)
    missing = tuple(v for v, ok in enumerate(seen) if not ok)
    if missing:
        violations.append(Violation(
            "not-connected",
            f"not connected: vertices {list(missing)} unreachable from vertex 0",
            missing))

    return violations


def is_valid(g: GraphWithBoundary) -> bool:
    return not validate(g)


@dataclass(frozen=True, eq=False)
class DistanceTable:
    """Hop distances from one source vertex to every vertex."""

    source: int
    dist: np.ndarray


def bfs_distances(g: GraphWithBoundary, source: int) -> DistanceTable:
    """Exact hop distances from ``source``; edge weights are ignored."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range 0..{g.n - 1}")
    nbrs = adjacency_lists(g)
    dist = np.full(g.n, -1, dtype=int)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u, _ in nbrs[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    if (dist < 0).any():
        raise ValueError("graph is not connected; distances are undefined")
    return DistanceTable(source, dist)


def diameter(g: GraphWithBoundary) -> int:
    """Maximum hop distance over all vertex pairs."""
    return max(int(bfs_distances(g, v).dist.max()) for v in range(g.n))


def boundary_diameter(g: GraphWithBoundary) -> int:
    """Maximum hop distance between two boundary vertices (extrinsic)."""
    if g.b < 2:
        raise ValueError("boundary diameter undefined: fewer than two boundary vertices")
    best = 0
    targets = list(g.boundary)
    for v in g.boundary:
        dist = bfs_distances(g, v).dist
        best = max(best, int(dist[targets].max()))
    return best


def boundary_volume(g: GraphWithBoundary) -> float:
    """Vol(B): the sum of vertex measures m_i over the boundary."""
    m = vertex_measures(g)
    return float(m[list(g.boundary)].sum())


def graph_to_json(g: GraphWithBoundary) -> str:
    """Serialize to the package's graph JSON format."""
    if g.weights is None:
        edges = [[i, j] for i, j in g.edges]
    else:
        edges = [[i, j, w] for (i, j), w in zip(g.edges, g.weights)]
    return json.dumps({"n": g.n, "edges": edges, "boundary": list(g.boundary)})


def graph_from_json(text: str) -> GraphWithBoundary:
    """Parse the graph JSON format.

    Rejects loops, duplicate pairs, ids outside ``0..n-1`` and non-positive
    weights.  Pairs may be written in either order; they are normalized to
    ``i < j``.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise GraphFormatError("top-level JSON value must be an object")
    unknown = set(obj) - _JSON_KEYS
    if unknown:
        raise GraphFormatError(f"unknown keys {sorted(unknown)}")
    missing = _JSON_KEYS - set(obj)
    if missing:
        raise GraphFormatError(f"missing keys {sorted(missing)}")

    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GraphFormatError(f"'n' must be a positive integer, got {n!r}")

    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise GraphFormatError("'edges' must be a list")
    edges: list[Edge] = []
    weights: list[float] = []
    weighted = False
    for entry in raw_edges:
        if not isinstance(entry, (list, tuple)) or len(entry) not in (2, 3):
            raise GraphFormatError(f"edge entry {entry!r} must be [i, j] or [i, j, w]")
        i, j = entry[0], entry[1]
        if len(entry) == 3:
            w = entry[2]
            if isinstance(w, bool) or not isinstance(w, (int, float)):
                raise GraphFormatError(f"edge weight {w!r} must be a number")
            w = float(w)
            if not (math.isfinite(w) and w > 0.0):
                raise GraphFormatError(f"edge weight {w!r} must be positive and finite")
            weighted = True
        else:
            w = 1.0
        edges.append((i, j))
        weights.append(w)

    boundary = obj["boundary"]
    if not isinstance(boundary, list):
        raise GraphFormatError("'boundary' must be a list")

    try:
        return GraphWithBoundary(
            n, tuple(edges), tuple(boundary),
            tuple(weights) if weighted else None)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def save_graph(g: GraphWithBoundary, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph_to_json(g))
        fh.write("\n")


def load_graph(path) -> GraphWithBoundary:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(fh.read())
