"""Exact polytope machinery: vertex enumeration, face lattices, isomorphism.

The inner loop of vertex enumeration runs in a compiled extension when it
has been built (``composihedra.hull._core``) and in pure Python otherwise;
:mod:`composihedra.hull._backend` chooses at import time.
"""
from ..poset import FacePoset, product_poset
from . import _backend as backend
from .fm import extreme_points, feasible, is_extreme
from .lattice import face_lattice_geometric, facet_vertex_sets, poset_isomorphic
from .linalg import affine_dimension, rank
from .vertices import (
    EmptyPolytopeError, InfeasiblePointError, UnboundedPolytopeError,
    enumerate_vertices, tight_set, vertex_tight_masks,
)

__all__ = [
    "FacePoset", "product_poset", "backend",
    "extreme_points", "feasible", "is_extreme",
    "face_lattice_geometric", "facet_vertex_sets", "poset_isomorphic",
    "affine_dimension", "rank",
    "EmptyPolytopeError", "InfeasiblePointError", "UnboundedPolytopeError",
    "enumerate_vertices", "tight_set", "vertex_tight_masks",
]
