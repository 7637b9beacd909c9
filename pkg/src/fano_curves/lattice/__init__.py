from .cone import (
    LatticeVector,
    Pairing,
    RationalPolyhedralCone,
    Space,
    curve,
    divisor,
    dual_cone,
    pair,
)
from .points import degree_histogram, enumerate_lattice_points, hilbert_basis
from .polytope import RationalPolytope, polytope_volume, triangulate

__all__ = [
    "LatticeVector",
    "Pairing",
    "RationalPolyhedralCone",
    "RationalPolytope",
    "Space",
    "curve",
    "degree_histogram",
    "divisor",
    "dual_cone",
    "enumerate_lattice_points",
    "hilbert_basis",
    "pair",
    "polytope_volume",
    "triangulate",
]
