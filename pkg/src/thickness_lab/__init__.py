"""Thickness of K_n x P_m: biplanar constructions, bounds and an exact solver."""

from ._kernels import BACKEND
from .bounds import (
    BoundReport,
    euler_lower_bound_kn_p2,
    face_upper_bound,
    thickness_bounds,
    thickness_complete,
    thickness_kn_p2,
    thickness_kn_pm,
)
from .construction import (
    BiplanarDecomposition,
    DecompositionReport,
    GadgetKind,
    build_decomposition,
    gadget_edges,
    normalize_decomposition,
    verify_decomposition,
)
from .graph import Graph, ProductVertex, cartesian_product, complete_graph, kn_pm, path_graph
from .planarity import (
    Embedding,
    Face,
    FaceCensus,
    PlanarityCertificate,
    face_census,
    faces,
    is_planar,
)
from .solver import SolverRefusal, SolverResult, find_biplanar, thickness_exact

__all__ = [
    "BACKEND",
    "BiplanarDecomposition",
    "BoundReport",
    "DecompositionReport",
    "Embedding",
    "Face",
    "FaceCensus",
    "GadgetKind",
    "Graph",
    "PlanarityCertificate",
    "ProductVertex",
    "SolverRefusal",
    "SolverResult",
    "build_decomposition",
    "cartesian_product",
    "complete_graph",
    "euler_lower_bound_kn_p2",
    "face_census",
    "face_upper_bound",
    "faces",
    "find_biplanar",
    "gadget_edges",
    "is_planar",
    "kn_pm",
    "normalize_decomposition",
    "path_graph",
    "thickness_bounds",
    "thickness_complete",
    "thickness_exact",
    "thickness_kn_p2",
    "thickness_kn_pm",
    "verify_decomposition",
]
