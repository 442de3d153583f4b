"""Distance-k domination on sparse graphs with independent-set certificates."""

from .domination import DominationCertificate, dominating_set
from .graph import Graph, bfs_capped, build_graph, subdivide
from .orderings import (
    VertexOrdering,
    admissibility_ordering,
    degeneracy_ordering,
    ordering_stats,
    weak_reach_sets,
)

__all__ = [
    "DominationCertificate",
    "Graph",
    "VertexOrdering",
    "admissibility_ordering",
    "bfs_capped",
    "build_graph",
    "degeneracy_ordering",
    "dominating_set",
    "ordering_stats",
    "subdivide",
    "weak_reach_sets",
]
