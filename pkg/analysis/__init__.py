"""Graph structure, acyclicity checks and discharging."""

from .structure import (
    HComponent,
    StrippedGraph,
    block_decompose,
    build_graph,
    degree_census,
    enumerate_faces,
    is_biconnected_block,
    strip_two_vertices,
)
from .acyclic import (
    alternating_path,
    bichromatic_path,
    cycle_through_edge,
    exists_bichromatic_path,
    find_bichromatic_cycle,
    is_proper,
    verify_acyclic,
    verify_local,
)

__all__ = [
    "HComponent",
    "StrippedGraph",
    "block_decompose",
    "build_graph",
    "degree_census",
    "enumerate_faces",
    "is_biconnected_block",
    "strip_two_vertices",
    "alternating_path",
    "bichromatic_path",
    "cycle_through_edge",
    "exists_bichromatic_path",
    "find_bichromatic_cycle",
    "is_proper",
    "verify_acyclic",
    "verify_local",
]
