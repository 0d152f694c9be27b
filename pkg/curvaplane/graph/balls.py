"""Graph metric d^G, closed balls B_R(p) and set balls B_r(A)."""

from typing import Dict, Iterable, Optional, Union

import networkx as nx

from curvaplane.core.errors import InvalidParameter, UnknownVertex
from curvaplane.graph.halfedge import HalfEdgeMap
from curvaplane.graph.models import BallSubgraph

GraphLike = Union[HalfEdgeMap, nx.Graph]


def as_graph(obj: GraphLike) -> nx.Graph:
    """networkx view of a map or a plain locally finite graph.

    Plain graphs may flag truncated nodes with ``window_boundary=True``.
    """
    if isinstance(obj, HalfEdgeMap):
        return obj.graph
    if isinstance(obj, nx.Graph):
        return obj
    raise TypeError(f"expected a HalfEdgeMap or networkx.Graph, got {type(obj).__name__}")


def _check(g: nx.Graph, x: int) -> None:
    if x not in g:
        raise UnknownVertex(f"vertex {x} is not in the graph", location=x)


def graph_distance(obj: GraphLike, x: int, y: int) -> Optional[int]:
    """BFS hop count between two vertices, or None when unreachable."""
    g = as_graph(obj)
    _check(g, x)
    _check(g, y)
    try:
        return nx.shortest_path_length(g, x, y)
    except nx.NetworkXNoPath:
        return None


def distance_to_set(obj: GraphLike, sources: Iterable[int], cutoff: Optional[int] = None) -> Dict[int, int]:
    """Multi-source BFS distances d^G(x, A) for all x within ``cutoff``."""
    g = as_graph(obj)
    sources = sorted(set(sources))
    for s in sources:
        _check(g, s)
    lengths = nx.multi_source_dijkstra_path_length(g, sources, cutoff=cutoff)
    return {int(v): int(d) for v, d in lengths.items()}


def _ball_from_distances(g: nx.Graph, sources, radius: int, distances: Dict[int, int]) -> BallSubgraph:
    members = sorted(distances)
    edges = sorted(
        (u, v) if u < v else (v, u) for u, v in g.subgraph(members).edges()
    )
    complete = not any(g.nodes[v].get("window_boundary", False) for v in members)
    return BallSubgraph(
        center=min(sources),
        sources=list(sources),
        radius=radius,
        vertices=members,
        edges=edges,
        distances=distances,
        complete=complete,
    )


def ball(obj: GraphLike, p: int, radius: int) -> BallSubgraph:
    """Closed ball B_R(p) = {x : d^G(p, x) ≤ R} with its induced edges.

    Raises:
        UnknownVertex: If p is not a vertex
        InvalidParameter: If radius is negative
    """
    if radius < 0:
        raise InvalidParameter(f"radius must be nonnegative, got {radius}")
    g = as_graph(obj)
    _check(g, p)
    distances = {int(v): int(d) for v, d in nx.single_source_shortest_path_length(g, p, cutoff=radius).items()}
    return _ball_from_distances(g, [p], radius, distances)


def set_ball(obj: GraphLike, sources: Iterable[int], radius: int) -> BallSubgraph:
    """B_r(A) = {x : d^G(x, A) ≤ r}."""
    if radius < 0:
        raise InvalidParameter(f"radius must be nonnegative, got {radius}")
    g = as_graph(obj)
    sources = sorted(set(sources))
    distances = distance_to_set(g, sources, cutoff=radius)
    return _ball_from_distances(g, sources, radius, distances)
