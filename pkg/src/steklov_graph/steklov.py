"""The discrete Steklov problem on graphs with boundary.

Pipeline: assemble the (weighted) graph Laplacian, extend boundary data
harmonically into the interior, and read the Dirichlet-to-Neumann operator
off the Schur complement of the Laplacian onto the boundary block.  The
Steklov spectrum is the spectrum of that operator, in one of two
conventions:

* UNIT — eigenvalues of the DtN matrix itself (boundary norm sum v_i^2);
* MEASURE — eigenvalues weighted by the vertex measures m_i on the
  boundary (boundary norm sum v_i^2 m_i), computed through the diagonal
  congruence D^{-1/2} Λ D^{-1/2}.

The two conventions coincide when all weights are 1 and every boundary
vertex has degree 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graphs import GraphWithBoundary, vertex_measures
from .linalg import eigenvalues_symmetric, orient_columns, solve_spd


class Normalization(enum.Enum):
    """Boundary inner product used by the spectrum."""

    UNIT = "unit"
    MEASURE = "measure"

    @classmethod
    def from_string(cls, text: str) -> "Normalization":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown normalization {text!r}; use 'unit' or 'measure'") from None


def laplacian(g: GraphWithBoundary) -> np.ndarray:
    """Weighted graph Laplacian: diagonal m_i, off-diagonal -mu_ij."""
    L = np.zeros((g.n, g.n))
    for idx, (i, j) in enumerate(g.edges):
        w = g.edge_weight(idx)
        L[i, j] -= w
        L[j, i] -= w
        L[i, i] += w
        L[j, j] += w
    return L


def _split(g: GraphWithBoundary) -> tuple[np.ndarray, np.ndarray]:
    bnd = np.array(g.boundary, dtype=int)
    interior = np.array(g.interior, dtype=int)
    return bnd, interior


def harmonic_extension(g: GraphWithBoundary, phi) -> np.ndarray:
    """Unique function equal to ``phi`` on the boundary and harmonic inside.

    ``phi`` is indexed by the sorted boundary tuple.  The interior values
    solve the principal minor system of the Laplacian and obey the discrete
    maximum principle.
    """
    phi = np.asarray(phi, dtype=np.float64)
    bnd, interior = _split(g)
    if phi.shape != (bnd.size,):
        raise ValueError(f"boundary data must have length {bnd.size}, got shape {phi.shape}")
    v = np.zeros(g.n)
    v[bnd] = phi
    if interior.size:
        L = laplacian(g)
        attach = -L[np.ix_(interior, bnd)]
        v[interior] = solve_spd(L[np.ix_(interior, interior)], attach @ phi)
    return v


def normal_derivative(g: GraphWithBoundary, v) -> np.ndarray:
    """Outward normal derivative on the boundary: weighted differences into the interior.

    Equals the Laplacian applied to ``v`` restricted to the boundary rows,
    because boundary vertices are never adjacent to each other.
    """
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (g.n,):
        raise ValueError(f"expected a vector on all {g.n} vertices, got shape {v.shape}")
    bnd, _ = _split(g)
    return (laplacian(g) @ v)[bnd]


def dtn_matrix(g: GraphWithBoundary) -> np.ndarray:
    """Dirichlet-to-Neumann matrix: Schur complement of the Laplacian onto the boundary."""
    bnd, interior = _split(g)
    L = laplacian(g)
    L_bb = L[np.ix_(bnd, bnd)]
    if interior.size == 0:
        return L_bb
    L_bi = L[np.ix_(bnd, interior)]
    L_ib = L[np.ix_(interior, bnd)]
    x = solve_spd(L[np.ix_(interior, interior)], L_ib)
    return L_bb - L_bi @ x


def dtn_matrix_via_extensions(g: GraphWithBoundary) -> np.ndarray:
    """DtN matrix assembled column by column from harmonic extensions.

    Independent route used to cross-check :func:`dtn_matrix`.
    """
    b = g.b
    out = np.zeros((b, b))
    for k in range(b):
        e = np.zeros(b)
        e[k] = 1.0
        out[:, k] = normal_derivative(g, harmonic_extension(g, e))
    return out


def energy(g: GraphWithBoundary, v) -> float:
    """Dirichlet energy: sum of mu_ij (v_i - v_j)^2 over the edges."""
    v = np.asarray(v, dtype=np.float64)
    total = 0.0
    for idx, (i, j) in enumerate(g.edges):
        d = v[i] - v[j]
        total += g.edge_weight(idx) * d * d
    return total


def boundary_measures(g: GraphWithBoundary) -> np.ndarray:
    """Vertex measures m_i restricted to the sorted boundary."""
    return vertex_measures(g)[list(g.boundary)]


def rayleigh_quotient(g: GraphWithBoundary, v,
                      norm: Normalization = Normalization.UNIT) -> float:
    """Dirichlet energy of ``v`` divided by its boundary norm in the given convention."""
    v = np.asarray(v, dtype=np.float64)
    bnd = np.array(g.boundary, dtype=int)
    vb = v[bnd]
    if norm is Normalization.MEASURE:
        den = float((vb * vb * boundary_measures(g)).sum())
    else:
        den = float((vb * vb).sum())
    if den <= 0.0:
        raise ValueError("Rayleigh quotient undefined: boundary restriction is zero")
    return energy(g, v) / den


@dataclass(frozen=True, eq=False)
class SteklovSpectrum:
    """Full Steklov spectrum of one graph.

    ``sigmas`` ascend and ``sigmas[0]`` is zero up to roundoff (reported
    raw, never clamped).  ``boundary_eigvecs`` holds the eigenfunctions
    restricted to the sorted boundary as columns, orthonormal under the
    convention's boundary inner product; ``extensions`` holds their
    harmonic extensions to all vertices, column for column.
    """

    norm: Normalization
    sigmas: np.ndarray
    boundary_eigvecs: np.ndarray
    extensions: np.ndarray


def steklov_spectrum(g: GraphWithBoundary,
                     norm: Normalization = Normalization.UNIT) -> SteklovSpectrum:
    """Solve the Steklov eigenvalue problem in the requested convention."""
    lam = dtn_matrix(g)
    if norm is Normalization.MEASURE:
        scale = 1.0 / np.sqrt(boundary_measures(g))
        w, u = eigenvalues_symmetric(lam * np.outer(scale, scale))
        vecs = orient_columns(u * scale[:, None])
    else:
        w, vecs = eigenvalues_symmetric(lam)

    bnd, interior = _split(g)
    ext = np.zeros((g.n, g.b))
    ext[bnd] = vecs
    if interior.size:
        L = laplacian(g)
        attach = -L[np.ix_(interior, bnd)]
        ext[interior] = solve_spd(L[np.ix_(interior, interior)], attach @ vecs)
    return SteklovSpectrum(norm, w, vecs, ext)


def sigma1(g: GraphWithBoundary,
           norm: Normalization = Normalization.UNIT) -> float:
    """First non-zero Steklov eigenvalue (requires at least two boundary vertices)."""
    if g.b < 2:
        raise ValueError("sigma_1 undefined: fewer than two boundary vertices")
    return float(steklov_spectrum(g, norm).sigmas[1])


def combinatorial_laplacian_spectrum(g: GraphWithBoundary) -> np.ndarray:
    """Ascending eigenvalues of the full graph Laplacian."""
    return eigenvalues_symmetric(laplacian(g))[0]
