"""The graph operations P (hexagon → six triangles) and P⁻¹ (triangle star → hexagon)."""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from curvaplane.core.errors import NotAHexagon
from curvaplane.core.logging import get_logger
from curvaplane.graph.halfedge import HalfEdgeMap, build_map

logger = get_logger(__name__)

BARYCENTERS_KEY = "barycenters"


def op_P(hmap: HalfEdgeMap, face_selection: Iterable[int]) -> HalfEdgeMap:
    """Replace every selected hexagon by six triangles around a new vertex.

    New vertices get ids ``vertex_count, vertex_count + 1, …`` in ascending
    face-id order of the selection and are recorded under
    ``metadata["barycenters"]``. Untouched faces keep their relative order,
    the new triangles follow them.

    Args:
        hmap: Input window
        face_selection: Face ids, each of degree 6

    Returns:
        The refined window; the input map itself when the selection is empty

    Raises:
        NotAHexagon: If a selected face does not exist or is not a hexagon
    """
    selection = sorted(set(int(f) for f in face_selection))
    if not selection:
        return hmap
    for f in selection:
        if not 0 <= f < len(hmap.faces):
            raise NotAHexagon(f"face {f} does not exist", location=f)
        if hmap.face_degree(f) != 6:
            raise NotAHexagon(f"face {f} has degree {hmap.face_degree(f)}, not 6", location=f)

    chosen = set(selection)
    faces: List[Tuple[int, ...]] = [face for i, face in enumerate(hmap.faces) if i not in chosen]
    coordinates: Optional[List] = None
    if hmap.coordinates is not None:
        coordinates = [tuple(row) for row in hmap.coordinates]

    centers = []
    next_id = hmap.vertex_count
    for f in selection:
        hexagon = hmap.faces[f]
        center = next_id
        next_id += 1
        centers.append(center)
        for i in range(6):
            faces.append((hexagon[i], hexagon[(i + 1) % 6], center))
        if coordinates is not None:
            coordinates.append(tuple(np.mean(hmap.coordinates[list(hexagon)], axis=0)))

    metadata = dict(hmap.metadata)
    metadata[BARYCENTERS_KEY] = list(metadata.get(BARYCENTERS_KEY, [])) + centers
    logger.info(f"P replaced {len(selection)} hexagons by triangle stars")
    return build_map(faces, vertex_count=next_id, coordinates=coordinates, metadata=metadata)


def _star_hexagon(hmap: HalfEdgeMap, x: int) -> Optional[Tuple[int, ...]]:
    """The link 6-cycle of a (3,3,3,3,3,3) vertex, oriented like its first triangle."""
    faces = hmap.incident_faces[x]
    if len(faces) != 6 or len(hmap.neighbors[x]) != 6:
        return None
    if any(hmap.face_degree(f) != 3 for f in faces):
        return None

    link: Dict[int, List[int]] = {}
    for f in faces:
        tri = hmap.faces[f]
        i = tri.index(x)
        after, before = tri[(i + 1) % 3], tri[i - 1]
        link.setdefault(after, []).append(before)
        link.setdefault(before, []).append(after)
    if len(link) != 6 or any(len(adj) != 2 for adj in link.values()):
        return None

    first = hmap.faces[min(faces)]
    i = first.index(x)
    cycle = [first[(i + 1) % 3], first[i - 1]]
    while len(cycle) < 6:
        prev, cur = cycle[-2], cycle[-1]
        step = [y for y in link[cur] if y != prev]
        if not step:
            return None
        cycle.append(step[0])
    if len(set(cycle)) != 6 or cycle[0] not in link[cycle[-1]]:
        return None
    return tuple(cycle)


def op_P_inv(hmap: HalfEdgeMap, centers: Optional[Sequence[int]] = None) -> HalfEdgeMap:
    """Merge non-overlapping (3,3,3,3,3,3) stars back into hexagons.

    Candidates are tried in the order of ``centers`` when given, otherwise
    the barycenters recorded by ``op_P`` first and then every interior
    vertex in ascending id order. A star is merged when none of its six
    triangles belongs to a star merged earlier.

    Returns:
        The coarsened window with centers removed and remaining ids
        compacted in their original order; the input map when nothing merges
    """
    if centers is None:
        recorded = [int(c) for c in hmap.metadata.get(BARYCENTERS_KEY, []) if 0 <= int(c) < hmap.vertex_count]
        seen = set(recorded)
        order = recorded + [x for x in hmap.interior_vertices if x not in seen]
    else:
        order = [hmap.check_vertex(c) for c in centers]

    used_faces = set()
    merged: List[int] = []
    hexagons: List[Tuple[int, ...]] = []
    for x in order:
        if not hmap.is_interior(x) or x in merged:
            continue
        star = hmap.incident_faces[x]
        if any(f in used_faces for f in star):
            continue
        hexagon = _star_hexagon(hmap, x)
        if hexagon is None:
            continue
        used_faces.update(star)
        merged.append(x)
        hexagons.append(hexagon)

    if not merged:
        return hmap

    removed = set(merged)
    relabel = {}
    for v in range(hmap.vertex_count):
        if v not in removed:
            relabel[v] = len(relabel)

    faces = [
        tuple(relabel[v] for v in face)
        for i, face in enumerate(hmap.faces)
        if i not in used_faces
    ]
    faces.extend(tuple(relabel[v] for v in hexagon) for hexagon in hexagons)

    coordinates = None
    if hmap.coordinates is not None:
        keep = [v for v in range(hmap.vertex_count) if v not in removed]
        coordinates = hmap.coordinates[keep]

    metadata = dict(hmap.metadata)
    if BARYCENTERS_KEY in metadata:
        remaining = [relabel[c] for c in metadata[BARYCENTERS_KEY] if c in relabel]
        if remaining:
            metadata[BARYCENTERS_KEY] = remaining
        else:
            del metadata[BARYCENTERS_KEY]

    logger.info(f"P⁻¹ merged {len(merged)} triangle stars into hexagons")
    return build_map(faces, vertex_count=len(relabel), coordinates=coordinates, metadata=metadata)
