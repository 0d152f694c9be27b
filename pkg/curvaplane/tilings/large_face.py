"""Windows with one big face σ of degree k ≥ 43 ringed by layers of squares or triangles.

Vertex m·k + i is the i-th vertex of ring m; ring 0 is the boundary of σ.
"""

from typing import List, Tuple

from curvaplane.core.errors import InvalidSpec
from curvaplane.core.logging import get_logger
from curvaplane.graph.halfedge import HalfEdgeMap, build_map
from curvaplane.tilings.models import BIG_FACE_MIN_DEGREE, LargeFaceSpec
from curvaplane.tilings.operations import op_P_inv

logger = get_logger(__name__)


def _big_face(k: int) -> Tuple[int, ...]:
    # reversed so that σ is coherently oriented with the layer faces
    return tuple(reversed(range(k)))


def square_rings(k: int, depth: int) -> List[Tuple[int, ...]]:
    def v(m, i):
        return m * k + i % k

    faces = [_big_face(k)]
    for m in range(depth):
        for i in range(k):
            faces.append((v(m, i), v(m, i + 1), v(m + 1, i + 1), v(m + 1, i)))
    return faces


def triangle_rings(k: int, depth: int) -> List[Tuple[int, ...]]:
    def v(m, i):
        return m * k + i % k

    faces = [_big_face(k)]
    for m in range(depth):
        for i in range(k):
            faces.append((v(m, i), v(m, i + 1), v(m + 1, i)))
            faces.append((v(m, i + 1), v(m + 1, i + 1), v(m + 1, i)))
    return faces


def large_face_window(spec: LargeFaceSpec) -> HalfEdgeMap:
    """Big face plus ``depth`` layers with ring pattern (4,4,k), (3,3,3,k) or (3,6,k).

    The (3,6,k) family is P⁻¹ of the (3,3,3,k) window, which merges the
    triangle stars around every other vertex of ring 1, 3, 5, …

    Raises:
        InvalidSpec: If k < 43, or for (3,6,k) when k is odd or depth < 2
    """
    k, depth = spec.k, spec.depth
    if k < BIG_FACE_MIN_DEGREE:
        raise InvalidSpec(f"k = {k} must be at least {BIG_FACE_MIN_DEGREE}")
    metadata = {"family": "large_face", "k": k, "ring": spec.ring, "depth": depth}
    if spec.ring == "44k":
        faces = square_rings(k, depth)
    else:
        faces = triangle_rings(k, depth)
    hmap = build_map(faces, vertex_count=(depth + 1) * k, metadata=metadata)

    if spec.ring == "36k":
        if k % 2:
            raise InvalidSpec(f"the (3,6,k) family needs an even k, got {k}")
        if depth < 2:
            raise InvalidSpec(f"the (3,6,k) family needs depth >= 2, got {depth}")
        hmap = op_P_inv(hmap)

    logger.info(f"Generated large face window k={k} ring={spec.ring} depth={depth}: {hmap!r}")
    return hmap
