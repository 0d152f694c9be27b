"""Pointwise Laplacian and gradient of a vertex function."""

from typing import Mapping, Tuple

import numpy as np

from curvaplane.core.errors import MissingNeighborValue
from curvaplane.graph.balls import GraphLike, as_graph


def _jumps(obj: GraphLike, f: Mapping[int, float], x: int) -> Tuple[np.ndarray, int]:
    g = as_graph(obj)
    if x not in g or x not in f:
        raise MissingNeighborValue(f"no value at vertex {x}", location=x)
    neighbors = list(g.neighbors(x))
    missing = [y for y in neighbors if y not in f]
    if missing:
        raise MissingNeighborValue(f"no value at neighbor {missing[0]} of vertex {x}", location=missing[0])
    jumps = np.array([f[y] for y in neighbors], dtype=float) - f[x]
    return jumps, len(neighbors)


def laplacian(obj: GraphLike, f: Mapping[int, float], x: int) -> float:
    """Lf(x) = (1/d_x) Σ_{y∼x} (f(y) − f(x)).

    Raises:
        MissingNeighborValue: If f is undefined at x or at a neighbor of x
    """
    jumps, degree = _jumps(obj, f, x)
    return float(jumps.sum() / degree)


def gradient_norm_sq(obj: GraphLike, f: Mapping[int, float], x: int) -> float:
    """|∇f|²(x) = Σ_{y∼x} (f(y) − f(x))²."""
    jumps, _ = _jumps(obj, f, x)
    return float(np.dot(jumps, jumps))
