"""Cylinder (translation) and projective (glide reflection) quotients of planar tilings.

A quotient window is the set of faces whose centers fall in the strip
0 ≤ s < a, |y| ≤ length/2 of axis coordinates. Vertices are identified
through their canonical representative: a point at (s, y) with
k = ⌊s/a⌋ is mapped to (s − k·a, ±y), the sign flipping for every glide
step when the identification is a glide reflection.
"""

import math
from typing import Dict, List, Tuple

import numpy as np

from curvaplane.core.config import settings
from curvaplane.core.errors import (
    DegenerateFace,
    DuplicateEdge,
    EdgeOveruse,
    InvalidSpec,
    LoopEdge,
    QuotientTooNarrow,
)
from curvaplane.core.logging import get_logger
from curvaplane.graph.halfedge import HalfEdgeMap, build_map, edge_key
from curvaplane.tilings.archimedean import StampedTiling, circumradius, template_for
from curvaplane.tilings.models import MIN_QUOTIENT_SIZE, GlideSpec, TilingTemplate

logger = get_logger(__name__)

EPS = 1e-9


class StripChart:
    """Axis coordinates and canonical representatives for one identification."""

    def __init__(self, glide: GlideSpec):
        self.glide = glide
        self.origin = np.array(glide.origin, dtype=float)
        d = np.array(glide.direction, dtype=float)
        self.direction = d / np.linalg.norm(d)
        self.normal = np.array([-self.direction[1], self.direction[0]])
        self.a = glide.translation
        self.scale = settings.coordinate_scale

    def axis_coordinates(self, p: np.ndarray) -> Tuple[float, float]:
        q = np.asarray(p, dtype=float) - self.origin
        return float(q @ self.direction), float(q @ self.normal)

    def step(self, s: float) -> int:
        return math.floor(s / self.a + EPS)

    def canonical(self, p: np.ndarray) -> Tuple[int, int]:
        s, y = self.axis_coordinates(p)
        k = self.step(s)
        s -= k * self.a
        if self.glide.flip and k % 2:
            y = -y
        return (int(round(s * self.scale)), int(round(y * self.scale)))


def _glide_for(template: TilingTemplate, shift: int, flip: bool) -> GlideSpec:
    if flip:
        if template.mirror is None:
            raise InvalidSpec(f"{template.code} has no mirror line and admits no glide reflection quotient")
        origin, direction, period = template.mirror
        return GlideSpec(origin=origin, direction=direction, period=period, shift=shift, flip=True)
    a1 = np.array(template.lattice[0], dtype=float)
    period = float(np.linalg.norm(a1))
    return GlideSpec(
        origin=(0.0, 0.0),
        direction=(float(a1[0] / period), float(a1[1] / period)),
        period=period,
        shift=shift,
        flip=False,
    )


def quotient_window(base: str, shift: int, length: int, flip: bool) -> HalfEdgeMap:
    """Strip window of a base tiling with its two ends identified.

    Args:
        base: Archimedean code of the planar tiling
        shift: Number of periods in the identifying translation (≥ 3)
        length: Extent across the axis, in edge lengths
        flip: True for a glide reflection (projective), False for a translation (cylinder)

    Raises:
        InvalidSpec: Unknown base, or a glide on a tiling without mirror lines
        QuotientTooNarrow: If the identification creates loops or multi-edges
    """
    if shift < MIN_QUOTIENT_SIZE:
        raise QuotientTooNarrow(f"identification shift {shift} is below the minimum {MIN_QUOTIENT_SIZE}")
    template = template_for(base)
    glide = _glide_for(template, shift, flip)
    chart = StripChart(glide)

    max_r = max(circumradius(t.n) for t in template.tiles)
    margin = 2 * max_r + 2
    reach = float(np.linalg.norm(chart.origin)) + math.hypot(chart.a + margin, length / 2 + margin)
    stamped = StampedTiling(template, reach)

    selected = []
    for keys, center in zip(stamped.faces, stamped.centers):
        s, y = chart.axis_coordinates(center)
        if chart.step(s) == 0 and abs(y) <= length / 2 + EPS:
            selected.append((round(abs(y), 6), round(s, 6), keys))
    selected.sort(key=lambda item: (item[0], item[1]))

    ids: Dict[Tuple[int, int], int] = {}
    edge_sources: Dict[Tuple[int, int], set] = {}
    faces: List[Tuple[int, ...]] = []
    for _, _, keys in selected:
        points = [stamped.points[k] for k in keys]
        face = []
        for p in points:
            c = chart.canonical(p)
            if c not in ids:
                ids[c] = len(ids)
            face.append(ids[c])
        n = len(face)
        for i in range(n):
            u, v = face[i], face[(i + 1) % n]
            if u == v:
                raise QuotientTooNarrow(f"identification with shift {shift} creates a loop at vertex {u}")
            midpoint = chart.canonical((points[i] + points[(i + 1) % n]) / 2)
            edge_sources.setdefault(edge_key(u, v), set()).add(midpoint)
        faces.append(tuple(face))

    for key, sources in edge_sources.items():
        if len(sources) > 1:
            raise QuotientTooNarrow(f"identification with shift {shift} creates a multi-edge {key}", location=key)

    metadata = {
        "family": "projective" if flip else "cylinder",
        "code": template.code,
        "pattern": list(template.pattern),
        "length": length,
        "glide": glide.model_dump(),
    }
    try:
        hmap = build_map(faces, vertex_count=len(ids), metadata=metadata)
    except (EdgeOveruse, DuplicateEdge, LoopEdge, DegenerateFace) as e:
        raise QuotientTooNarrow(f"identification with shift {shift} is not simple: {e.message}") from e
    logger.info(
        f"Generated {metadata['family']} quotient of {template.code} (shift {shift}, length {length}): {hmap!r}"
    )
    return hmap


def cylinder_window(base: str, circumference: int, length: int) -> HalfEdgeMap:
    return quotient_window(base, circumference, length, flip=False)


def projective_window(base: str, width: int, length: int) -> HalfEdgeMap:
    return quotient_window(base, width, length, flip=True)

