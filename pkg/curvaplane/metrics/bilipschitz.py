"""Graph distance against a face-chord surrogate of the polygonal surface metric."""

from typing import Dict, Optional, Tuple

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import dijkstra, shortest_path

from curvaplane.core.config import settings
from curvaplane.core.errors import InvalidParameter, NoEmbedding, WindowTooSmall
from curvaplane.core.logging import get_logger
from curvaplane.graph.halfedge import HalfEdgeMap
from curvaplane.metrics.models import BilipschitzReport

logger = get_logger(__name__)


def refinement_graph(hmap: HalfEdgeMap) -> sparse.csr_matrix:
    """Weighted graph joining every pair of vertices of each face by its straight chord.

    Raises:
        NoEmbedding: If the map carries no coordinates
    """
    if hmap.coordinates is None:
        raise NoEmbedding("the map has no coordinate hints")
    xy = hmap.coordinates
    weights: Dict[Tuple[int, int], float] = {}
    for face in hmap.faces:
        ids = np.array(face)
        pts = xy[ids]
        lengths = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
        for a in range(len(face)):
            for b in range(a + 1, len(face)):
                key = (face[a], face[b]) if face[a] < face[b] else (face[b], face[a])
                weights[key] = min(weights.get(key, np.inf), float(lengths[a, b]))
    rows = [u for u, _ in weights]
    cols = [v for _, v in weights]
    data = list(weights.values())
    n = hmap.vertex_count
    upper = sparse.coo_matrix((data, (rows, cols)), shape=(n, n))
    return (upper + upper.T).tocsr()


def _adjacency(hmap: HalfEdgeMap) -> sparse.csr_matrix:
    rows = [u for u, _ in hmap.edges]
    cols = [v for _, v in hmap.edges]
    n = hmap.vertex_count
    upper = sparse.coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    return (upper + upper.T).tocsr()


def bilipschitz_estimate(hmap: HalfEdgeMap, sample_count: int, seed: Optional[int] = None) -> BilipschitzReport:
    """Min and max of surrogate / graph distance over random vertex pairs.

    Pairs are drawn among interior vertices with a generator seeded by
    ``seed``; both distances are computed exactly from every distinct
    first vertex.

    Raises:
        NoEmbedding: If the map carries no coordinates
        WindowTooSmall: If fewer than two interior vertices exist
        InvalidParameter: If sample_count is not positive
    """
    if sample_count < 1:
        raise InvalidParameter(f"need at least one pair, got {sample_count}")
    seed = settings.default_seed if seed is None else seed
    surrogate = refinement_graph(hmap)
    pool = np.array(hmap.interior_vertices)
    if pool.size < 2:
        raise WindowTooSmall("need at least two interior vertices to sample pairs")

    rng = np.random.default_rng(seed)
    first = rng.choice(pool, size=sample_count)
    offset = rng.integers(1, pool.size, size=sample_count)
    second = pool[(np.searchsorted(pool, first) + offset) % pool.size]

    sources, inverse = np.unique(first, return_inverse=True)
    surface = dijkstra(surrogate, directed=False, indices=sources)
    hops = shortest_path(_adjacency(hmap), directed=False, unweighted=True, indices=sources)
    d_surface = surface[inverse, second]
    d_graph = hops[inverse, second]
    ratio = d_surface / d_graph

    i = int(np.argmin(ratio))
    report = BilipschitzReport(
        sample_count=sample_count,
        seed=seed,
        min_ratio=float(ratio.min()),
        max_ratio=float(ratio.max()),
        mean_ratio=float(ratio.mean()),
        extremal_pair=[int(first[i]), int(second[i])],
    )
    logger.info(
        f"Bi-Lipschitz estimate over {sample_count} pairs: [{report.min_ratio:.4f}, {report.max_ratio:.4f}]"
    )
    return report
