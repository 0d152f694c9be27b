from curvaplane.graph.balls import as_graph, ball, distance_to_set, graph_distance, set_ball
from curvaplane.graph.halfedge import HalfEdgeMap, build_map, canonical_faces, edge_key, validate
from curvaplane.graph.io import dumps_map, loads_map, read_map, to_dot, write_map
from curvaplane.graph.models import BallSubgraph, GraphDocument, ValidationReport, Violation

__all__ = [
    "BallSubgraph",
    "GraphDocument",
    "HalfEdgeMap",
    "ValidationReport",
    "Violation",
    "as_graph",
    "ball",
    "build_map",
    "canonical_faces",
    "distance_to_set",
    "dumps_map",
    "edge_key",
    "graph_distance",
    "loads_map",
    "read_map",
    "set_ball",
    "to_dot",
    "validate",
    "write_map",
]
