"""Peeling a large-face window into σ, L_1, L_2, … ."""

from typing import List, Optional

from curvaplane.core.errors import MixedLayer, MultipleBigFaces
from curvaplane.core.logging import get_logger
from curvaplane.curvature.models import FaceLayer, LayerDecomposition
from curvaplane.curvature.report import vertex_pattern
from curvaplane.graph.halfedge import HalfEdgeMap
from curvaplane.tilings.operations import op_P

logger = get_logger(__name__)

BIG_FACE_DEGREE = 43
RING_FAMILIES = ((3, 6), (4, 4), (3, 3, 3))
LAYER_KINDS = {3: "triangle", 4: "square"}


def _ring_pattern(hmap: HalfEdgeMap, big_face: int) -> Optional[tuple]:
    for v in hmap.faces[big_face]:
        if hmap.is_interior(v):
            return vertex_pattern(hmap, v).degrees
    return None


def large_face_structure(hmap: HalfEdgeMap) -> Optional[LayerDecomposition]:
    """Locate the unique face of degree ≥ 43 and peel the layers around it.

    Each layer is the set of not yet covered faces incident to the vertices
    reached by the previous layer, sorted by (smallest vertex id, face id).
    When the vertices of σ have pattern (3,6,k), P is applied to every
    hexagon first and face ids refer to the refined map.

    Returns:
        None when D_G < 43, otherwise the decomposition

    Raises:
        MultipleBigFaces: If two faces have degree ≥ 43
        MixedLayer: If a layer is not purely triangles or purely squares
    """
    if hmap.max_face_degree < BIG_FACE_DEGREE:
        return None
    big = [f for f, face in enumerate(hmap.faces) if len(face) >= BIG_FACE_DEGREE]
    if len(big) > 1:
        raise MultipleBigFaces(f"faces {big} all have degree >= {BIG_FACE_DEGREE}", location=big)

    ring = _ring_pattern(hmap, big[0])
    preimage = False
    work = hmap
    if ring is not None and ring[:-1] == (3, 6):
        hexagons = [f for f, face in enumerate(hmap.faces) if len(face) == 6]
        work = op_P(hmap, hexagons)
        preimage = True
        logger.info(f"Ring pattern {ring}: applied P to {len(hexagons)} hexagons before peeling")
    elif ring is not None and ring[:-1] not in RING_FAMILIES:
        logger.warning(f"Ring pattern {ring} is not one of (3,6,k), (4,4,k), (3,3,3,k)")

    sigma = next(f for f, face in enumerate(work.faces) if len(face) >= BIG_FACE_DEGREE)
    covered_faces = {sigma}
    covered_vertices = set(work.faces[sigma])
    shell = set(covered_vertices)
    layers: List[FaceLayer] = []
    while shell:
        candidates = {f for v in shell for f in work.incident_faces[v] if f not in covered_faces}
        if not candidates:
            break
        ordered = sorted(candidates, key=lambda f: (min(work.faces[f]), f))
        degrees = {work.face_degree(f) for f in ordered}
        if len(degrees) != 1 or not degrees <= set(LAYER_KINDS):
            raise MixedLayer(
                f"layer {len(layers) + 1} mixes face degrees {sorted(degrees)}",
                location=len(layers) + 1,
            )
        layers.append(FaceLayer(index=len(layers) + 1, kind=LAYER_KINDS[degrees.pop()], faces=ordered))
        covered_faces.update(ordered)
        reached = {v for f in ordered for v in work.faces[f]}
        shell = reached - covered_vertices
        covered_vertices |= reached

    decomposition = LayerDecomposition(
        big_face=sigma,
        big_face_degree=work.face_degree(sigma),
        big_face_vertices=list(work.faces[sigma]),
        ring_pattern=ring,
        layers=layers,
        covered_vertices=sorted(covered_vertices),
        hexagon_preimage=preimage,
    )
    decomposition._source_map = work
    logger.info(
        f"Peeled {len(layers)} layers around face {sigma} (degree {decomposition.big_face_degree})"
    )
    return decomposition
