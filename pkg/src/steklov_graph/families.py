"""Deterministic graph families and the exhaustive minimizer search.

Generators for the three closed-form families (paths with both endpoints
as boundary, the bounded-boundary-diameter pendant family, and the two-hub
family that realizes the refined bound asymptotically), a seeded random
generator for property testing, and a brute-force search for minimal
sigma_1 over all small graphs with fixed boundary size and boundary
diameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

from .graphs import GraphWithBoundary, boundary_diameter
from .steklov import sigma1

SEARCH_MAX_VERTICES = 10
_SIGMA_TIE_TOL = 1e-9


def path_graph(n: int) -> GraphWithBoundary:
    """Path with ``n`` edges, both endpoints as boundary.

    ``n >= 2`` keeps the two boundary vertices non-adjacent.
    """
    if n < 2:
        raise ValueError("path length must be >= 2 so the endpoints are not adjacent")
    edges = tuple((i, i + 1) for i in range(n))
    return GraphWithBoundary(n + 1, edges, (0, n))


def d_family(n: int) -> GraphWithBoundary:
    """Two boundary vertices on a hub carrying a pendant interior path.

    Vertices 0 and 1 are the boundary, 2 is the hub, and ``n`` further
    interior vertices form a path hanging off the hub (``n + 3`` vertices
    in total).  The boundary diameter stays 2 for every ``n`` while the
    diameter grows linearly.
    """
    if n < 0:
        raise ValueError("pendant path length must be >= 0")
    edges = [(0, 2), (1, 2)]
    prev = 2
    for k in range(n):
        edges.append((prev, 3 + k))
        prev = 3 + k
    return GraphWithBoundary(n + 3, tuple(edges), (0, 1))


def h_family(b: int, d_b: int) -> GraphWithBoundary:
    """Two hubs joined by a path, with boundary leaves split as evenly as possible.

    The left hub carries ``floor(b/2)`` pendant boundary leaves, the right
    hub ``ceil(b/2)``, and the hubs are joined by an interior path of
    length ``d_b - 2`` (so ``d_b >= 3``).  Vertex labels: boundary first
    (left block, then right block), then left hub, middle path, right hub.
    For ``b = 2`` this is the path with ``d_b`` edges.
    """
    if b < 2:
        raise ValueError("need at least two boundary leaves")
    if d_b < 3:
        raise ValueError("boundary diameter must be >= 3; smaller values would merge the hubs")
    left_count = b // 2
    left_hub = b
    right_hub = b + d_b - 2
    edges = [(leaf, left_hub) for leaf in range(left_count)]
    edges += [(leaf, right_hub) for leaf in range(left_count, b)]
    path = [left_hub] + list(range(b + 1, b + d_b - 2)) + [right_hub]
    edges += [(u, v) for u, v in zip(path, path[1:])]
    return GraphWithBoundary(b + d_b - 1, tuple(edges), tuple(range(b)))


def h_family_sigma1(b: int, d_b: int) -> float:
    """Closed-form sigma_1 of the two-hub family: b / (floor(b/2) ceil(b/2) (d_B - 2) + b)."""
    if b < 2:
        raise ValueError("need at least two boundary leaves")
    if d_b < 3:
        raise ValueError("boundary diameter must be >= 3")
    return b / ((b // 2) * ((b + 1) // 2) * (d_b - 2) + b)


def random_valid_graph(n_interior: int, b: int, p: float, seed: int,
                       weighted: bool = False) -> GraphWithBoundary:
    """Seeded random graph satisfying the boundary axioms by construction.

    The interior is a random recursive tree plus extra edges drawn with
    probability ``p``; each of the ``b`` boundary vertices then attaches to
    one uniformly chosen interior vertex plus a geometric number of extra
    distinct ones.  Interior vertices are ``0..n_interior-1`` and boundary
    vertices follow.  Weighted graphs draw weights uniformly from
    [0.5, 2).
    """
    if n_interior < 1:
        raise ValueError("need at least one interior vertex")
    if b < 1:
        raise ValueError("need at least one boundary vertex")
    if not 0.0 < p <= 1.0:
        raise ValueError("edge probability must be in (0, 1]")
    rng = np.random.default_rng(seed)

    edges: list[tuple[int, int]] = []
    for v in range(1, n_interior):
        edges.append((int(rng.integers(0, v)), v))
    tree = set(edges)
    for i in range(n_interior - 1):
        for j in range(i + 1, n_interior):
            if (i, j) not in tree and rng.random() < p:
                edges.append((i, j))

    for k in range(b):
        extras = int(rng.geometric(0.5)) - 1
        count = min(1 + extras, n_interior)
        targets = rng.choice(n_interior, size=count, replace=False)
        edges.extend((int(t), n_interior + k) for t in sorted(targets))

    weights = tuple(rng.uniform(0.5, 2.0, len(edges))) if weighted else None
    boundary = tuple(range(n_interior, n_interior + b))
    return GraphWithBoundary(n_interior + b, tuple(edges), boundary, weights)


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    merged = 0
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            merged += 1
    return merged == n - 1


def canonical_key(g: GraphWithBoundary) -> bytes:
    """Canonical form under relabelings that keep the boundary/interior split.

    Minimizes the adjacency matrix bytes over all permutations of the
    interior block and all permutations of the boundary block, so two
    graphs compare equal exactly when a boundary-respecting isomorphism
    links them (weights are ignored).
    """
    adj = np.zeros((g.n, g.n), dtype=np.uint8)
    for i, j in g.edges:
        adj[i, j] = adj[j, i] = 1
    interior = list(g.interior)
    bnd = list(g.boundary)
    best = None
    for pi in permutations(interior):
        for pb in permutations(bnd):
            order = list(pi) + list(pb)
            key = adj[np.ix_(order, order)].tobytes()
            if best is None or key < best:
                best = key
    return best


@dataclass(frozen=True, eq=False)
class SearchResult:
    """Outcome of the exhaustive minimizer search."""

    b: int
    d_b: int
    max_vertices: int
    sigma1_min: float | None
    minimizers: tuple[GraphWithBoundary, ...]
    minimizer_keys: tuple[bytes, ...]
    h_family_minimizer: bool | None
    graphs_searched: int

    def contains(self, g: GraphWithBoundary) -> bool:
        """Whether ``g`` is isomorphic (boundary-respecting) to some minimizer."""
        return canonical_key(g) in set(self.minimizer_keys)


def exhaustive_minimizer_search(b: int, d_b: int,
                                max_vertices: int) -> SearchResult:
    """Enumerate all valid graphs with the given boundary size and boundary
    diameter, up to ``max_vertices`` vertices, and collect the sigma_1
    minimizers up to boundary-respecting isomorphism.

    Unweighted graphs and the UNIT convention only.  The vertex budget is
    capped at 10; runtime grows steeply with it.
    """
    if b < 2:
        raise ValueError("search needs at least two boundary vertices")
    if d_b < 2:
        raise ValueError("boundary diameter of a valid graph is at least 2")
    if max_vertices > SEARCH_MAX_VERTICES:
        raise ValueError(f"max_vertices capped at {SEARCH_MAX_VERTICES}")

    searched = 0
    best = np.inf
    kept: list[tuple[float, GraphWithBoundary]] = []
    for n in range(b + 1, max_vertices + 1):
        n_i = n - b
        ii_pairs = list(combinations(range(n_i), 2))
        boundary = tuple(range(n_i, n))
        attach_masks = range(1, 1 << n_i)
        for ii_bits in range(1 << len(ii_pairs)):
            interior_edges = [pair for k, pair in enumerate(ii_pairs)
                              if ii_bits >> k & 1]
            for attach in product(attach_masks, repeat=b):
                edges = list(interior_edges)
                for k, mask in enumerate(attach):
                    edges.extend((t, n_i + k) for t in range(n_i)
                                 if mask >> t & 1)
                searched += 1
                # connectivity also forces every vertex to be used, so each
                # isomorphism class shows up at exactly one vertex count
                if not _connected(n, edges):
                    continue
                g = GraphWithBoundary(n, tuple(edges), boundary)
                if boundary_diameter(g) != d_b:
                    continue
                s1 = sigma1(g)
                if s1 < best - _SIGMA_TIE_TOL:
                    best = s1
                    kept = [(s1, g)]
                elif s1 <= best + _SIGMA_TIE_TOL:
                    best = min(best, s1)
                    kept.append((s1, g))

    if not kept:
        return SearchResult(b, d_b, max_vertices, None, (), (), None, searched)

    by_key: dict[bytes, GraphWithBoundary] = {}
    for s1, g in kept:
        if s1 <= best + _SIGMA_TIE_TOL:
            by_key.setdefault(canonical_key(g), g)

    h_member: bool | None = None
    if d_b >= 3 and b + d_b - 1 <= max_vertices:
        h_member = canonical_key(h_family(b, d_b)) in by_key

    return SearchResult(b, d_b, max_vertices, float(best),
                        tuple(by_key.values()), tuple(by_key.keys()),
                        h_member, searched)
