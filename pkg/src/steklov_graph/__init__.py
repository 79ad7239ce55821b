"""Discrete Steklov spectra on graphs with boundary.

Computes the Dirichlet-to-Neumann operator of finite connected graphs with
boundary via the Schur complement of the graph Laplacian, its full
spectrum in the unit and measure-weighted boundary normalizations, and the
lower bounds for the first non-zero eigenvalue in terms of the boundary
size, the boundary diameter and the boundary volume, together with the
graph families on which those bounds are sharp or asymptotically sharp.
"""

from .bounds import (BoundReport, SpreadCandidate, SpreadProblem,
                     check_bounds, prop1_min_closed, prop1_oracle,
                     spread_candidates, spread_problem, thm1_bound,
                     thm2_bound, weighted_bound)
from .errors import (EigenConvergenceError, GraphFormatError, NotSPDError,
                     NumericalError, SteklovError)
from .families import (SearchResult, canonical_key, d_family,
                       exhaustive_minimizer_search, h_family,
                       h_family_sigma1, path_graph, random_valid_graph)
from .graphs import (DistanceTable, GraphWithBoundary, Violation,
                     adjacency_lists, bfs_distances, boundary_diameter,
                     boundary_volume, diameter, graph_from_json,
                     graph_to_json, is_valid, load_graph, save_graph,
                     validate, vertex_measures)
from .kernels import backend as kernel_backend
from .linalg import as_dense_sym, eigenvalues_symmetric, solve_spd
from .steklov import (Normalization, SteklovSpectrum, boundary_measures,
                      combinatorial_laplacian_spectrum, dtn_matrix,
                      dtn_matrix_via_extensions, energy, harmonic_extension,
                      laplacian, normal_derivative, rayleigh_quotient,
                      sigma1, steklov_spectrum)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "SpreadCandidate", "SpreadProblem", "check_bounds",
    "prop1_min_closed", "prop1_oracle", "spread_candidates",
    "spread_problem", "thm1_bound", "thm2_bound", "weighted_bound",
    "EigenConvergenceError", "GraphFormatError", "NotSPDError",
    "NumericalError", "SteklovError",
    "SearchResult", "canonical_key", "d_family",
    "exhaustive_minimizer_search", "h_family", "h_family_sigma1",
    "path_graph", "random_valid_graph",
    "DistanceTable", "GraphWithBoundary", "Violation", "adjacency_lists",
    "bfs_distances", "boundary_diameter", "boundary_volume", "diameter",
    "graph_from_json", "graph_to_json", "is_valid", "load_graph",
    "save_graph", "validate", "vertex_measures",
    "kernel_backend",
    "as_dense_sym", "eigenvalues_symmetric", "solve_spd",
    "Normalization", "SteklovSpectrum", "boundary_measures",
    "combinatorial_laplacian_spectrum", "dtn_matrix",
    "dtn_matrix_via_extensions", "energy", "harmonic_extension",
    "laplacian", "normal_derivative", "rayleigh_quotient", "sigma1",
    "steklov_spectrum",
    "__version__",
]
