"""The eleven Archimedean tilings as lattice templates, and planar windows cut from them.

Every tiling is stored as two lattice vectors plus the regular unit-side
polygons of one fundamental domain. Windows are produced by stamping
translated copies, snapping vertices to an integer grid so shared corners
merge, and keeping the faces that touch the graph ball of the requested
radius around the vertex closest to the origin.
"""

import math
from typing import Dict, List, Sequence, Tuple

import networkx as nx
import numpy as np

from curvaplane.core.config import settings
from curvaplane.core.errors import InvalidSpec
from curvaplane.core.logging import get_logger
from curvaplane.graph.halfedge import HalfEdgeMap, build_map
from curvaplane.tilings.models import ARCHIMEDEAN_CODES, Tile, TilingTemplate

logger = get_logger(__name__)

S3 = math.sqrt(3.0)
S2 = math.sqrt(2.0)

Key = Tuple[int, int]


def _dir(theta: float) -> Tuple[float, float]:
    t = math.radians(theta)
    return (math.cos(t), math.sin(t))


def _scaled(r: float, theta: float, offset=(0.0, 0.0)) -> Tuple[float, float]:
    dx, dy = _dir(theta)
    return (offset[0] + r * dx, offset[1] + r * dy)


def circumradius(n: int) -> float:
    return 1.0 / (2.0 * math.sin(math.pi / n))


def _triangular(length: float):
    return ((length, 0.0), (length / 2, length * S3 / 2))


def _square_ring(length: float, center=(0.0, 0.0)) -> List[Tile]:
    """Squares on the three lattice directions of a triangular lattice."""
    return [
        Tile(n=4, center=_scaled(length / 2, theta, center), phase=theta + 45)
        for theta in (0, 60, 120)
    ]


def _snub_square() -> TilingTemplate:
    a = (1 + S3) / S2
    squares = [((0.0, 0.0), 60.0, 15.0), ((a / 2, a / 2), 30.0, -15.0)]
    tiles = []
    for center, phase, normal in squares:
        tiles.append(Tile(n=4, center=center, phase=phase))
        for k in range(4):
            theta = normal + 90 * k
            tiles.append(Tile(n=3, center=_scaled(0.5 + S3 / 6, theta, center), phase=theta))
    return TilingTemplate(
        code="3^2.4.3.4",
        vertex_cycle=(3, 3, 4, 3, 4),
        lattice=((a, 0.0), (0.0, a)),
        tiles=tiles,
        mirror=((a / 2, 0.0), (1 / S2, 1 / S2), a * S2),
    )


def _snub_hexagonal() -> TilingTemplate:
    tiles = [Tile(n=6, center=(0.0, 0.0), phase=30)]
    for theta in range(0, 360, 60):
        tiles.append(Tile(n=3, center=_scaled(2 * S3 / 3, theta), phase=theta))
    tiles.append(Tile(n=3, center=(2 * S3 / 3, 1.0), phase=0))
    tiles.append(Tile(n=3, center=(4 * S3 / 3, 2.0), phase=60))
    return TilingTemplate(
        code="3^4.6",
        vertex_cycle=(3, 3, 3, 3, 6),
        lattice=((3 * S3 / 2, 0.5), (S3 / 2, 2.5)),
        tiles=tiles,
        mirror=None,
    )


def _build_templates() -> Dict[str, TilingTemplate]:
    x_axis = (1.0, 0.0)
    l_3_12 = 2 + S3
    l_4_6_12 = 3 + S3
    l_3_4_6_4 = 1 + S3
    l_4_8 = 1 + S2
    templates = [
        TilingTemplate(
            code="4^4",
            vertex_cycle=(4, 4, 4, 4),
            lattice=((1.0, 0.0), (0.0, 1.0)),
            tiles=[Tile(n=4, center=(0.5, 0.5), phase=45)],
            mirror=((0.0, 0.5), x_axis, 1.0),
        ),
        TilingTemplate(
            code="3^6",
            vertex_cycle=(3, 3, 3, 3, 3, 3),
            lattice=_triangular(1.0),
            tiles=[
                Tile(n=3, center=(0.5, S3 / 6), phase=-30),
                Tile(n=3, center=(1.0, S3 / 3), phase=150),
            ],
            mirror=((0.0, 0.0), x_axis, 1.0),
        ),
        TilingTemplate(
            code="6^3",
            vertex_cycle=(6, 6, 6),
            lattice=((S3, 0.0), (S3 / 2, 1.5)),
            tiles=[Tile(n=6, center=(0.0, 0.0), phase=30)],
            mirror=((0.0, 0.0), x_axis, S3),
        ),
        TilingTemplate(
            code="3.6.3.6",
            vertex_cycle=(3, 6, 3, 6),
            lattice=_triangular(2.0),
            tiles=[
                Tile(n=6, center=(0.0, 0.0), phase=0),
                Tile(n=3, center=(1.0, S3 / 3), phase=150),
                Tile(n=3, center=(2.0, 2 * S3 / 3), phase=-30),
            ],
            mirror=((0.0, 0.0), x_axis, 2.0),
        ),
        TilingTemplate(
            code="4.8^2",
            vertex_cycle=(4, 8, 8),
            lattice=((l_4_8, 0.0), (0.0, l_4_8)),
            tiles=[
                Tile(n=8, center=(0.0, 0.0), phase=22.5),
                Tile(n=4, center=(l_4_8 / 2, l_4_8 / 2), phase=90),
            ],
            mirror=((0.0, 0.0), x_axis, l_4_8),
        ),
        TilingTemplate(
            code="3.12^2",
            vertex_cycle=(3, 12, 12),
            lattice=_triangular(l_3_12),
            tiles=[
                Tile(n=12, center=(0.0, 0.0), phase=15),
                Tile(n=3, center=(l_3_12 / 2, l_3_12 * S3 / 6), phase=150),
                Tile(n=3, center=(l_3_12, l_3_12 * S3 / 3), phase=-30),
            ],
            mirror=((0.0, 0.0), x_axis, l_3_12),
        ),
        TilingTemplate(
            code="4.6.12",
            vertex_cycle=(4, 6, 12),
            lattice=_triangular(l_4_6_12),
            tiles=[
                Tile(n=12, center=(0.0, 0.0), phase=15),
                *_square_ring(l_4_6_12),
                Tile(n=6, center=(l_4_6_12 / 2, l_4_6_12 * S3 / 6), phase=0),
                Tile(n=6, center=(l_4_6_12, l_4_6_12 * S3 / 3), phase=0),
            ],
            mirror=((0.0, 0.0), x_axis, l_4_6_12),
        ),
        TilingTemplate(
            code="3.4.6.4",
            vertex_cycle=(3, 4, 6, 4),
            lattice=_triangular(l_3_4_6_4),
            tiles=[
                Tile(n=6, center=(0.0, 0.0), phase=30),
                *_square_ring(l_3_4_6_4),
                Tile(n=3, center=(l_3_4_6_4 / 2, l_3_4_6_4 * S3 / 6), phase=-30),
                Tile(n=3, center=(l_3_4_6_4, l_3_4_6_4 * S3 / 3), phase=150),
            ],
            mirror=((0.0, 0.0), x_axis, l_3_4_6_4),
        ),
        TilingTemplate(
            code="3^3.4^2",
            vertex_cycle=(3, 3, 3, 4, 4),
            lattice=((1.0, 0.0), (0.5, 1 + S3 / 2)),
            tiles=[
                Tile(n=4, center=(0.5, 0.5), phase=45),
                Tile(n=3, center=(0.5, 1 + S3 / 6), phase=-30),
                Tile(n=3, center=(1.0, 1 + S3 / 3), phase=150),
            ],
            mirror=((0.0, 0.5), x_axis, 1.0),
        ),
        _snub_square(),
        _snub_hexagonal(),
    ]
    return {t.code: t for t in templates}


TEMPLATES: Dict[str, TilingTemplate] = _build_templates()

MONOHEDRAL_CODES = {3: "3^6", 4: "4^4", 6: "6^3"}


def _cyclic_key(cycle: Sequence[int]) -> Tuple[int, ...]:
    cycle = tuple(cycle)
    variants = []
    for walk in (cycle, tuple(reversed(cycle))):
        for i in range(len(walk)):
            variants.append(walk[i:] + walk[:i])
    return min(variants)


_CODE_BY_CYCLE = {_cyclic_key(t.vertex_cycle): code for code, t in TEMPLATES.items()}


def parse_code(text: str) -> str:
    """Canonical code for dotted (3.4.6.4), exponent (3^4.6) or compact (666) notation.

    Raises:
        InvalidSpec: If the text names none of the eleven tilings
    """
    raw = text.strip().replace(" ", "")
    degrees: List[int] = []
    try:
        if raw.isdigit() and "." not in raw:
            degrees = [int(c) for c in raw]
        else:
            for part in raw.split("."):
                if "^" in part:
                    base, exponent = part.split("^")
                    degrees.extend([int(base)] * int(exponent))
                else:
                    degrees.append(int(part))
    except ValueError as e:
        raise InvalidSpec(f"cannot parse tiling code {text!r}") from e
    code = _CODE_BY_CYCLE.get(_cyclic_key(degrees)) if len(degrees) >= 3 else None
    if code is None:
        raise InvalidSpec(f"{text!r} is not one of the Archimedean codes {', '.join(ARCHIMEDEAN_CODES)}")
    return code


def template_for(code: str) -> TilingTemplate:
    return TEMPLATES[parse_code(code)]


def tile_vertices(tile: Tile, offset=(0.0, 0.0)) -> np.ndarray:
    """Counter-clockwise corner coordinates of a placed tile."""
    r = circumradius(tile.n)
    angles = np.radians(tile.phase + 360.0 * np.arange(tile.n) / tile.n)
    cx = tile.center[0] + offset[0]
    cy = tile.center[1] + offset[1]
    return np.column_stack([cx + r * np.cos(angles), cy + r * np.sin(angles)])


class StampedTiling:
    """Faces of a template whose centers lie within ``reach`` of the origin."""

    def __init__(self, template: TilingTemplate, reach: float):
        self.template = template
        self.scale = settings.coordinate_scale
        self.points: Dict[Key, np.ndarray] = {}
        self.faces: List[Tuple[Key, ...]] = []
        self.centers: List[np.ndarray] = []

        basis = np.array(template.lattice, dtype=float).T
        inverse = np.linalg.inv(basis)
        corners = np.array([[-reach, -reach], [-reach, reach], [reach, -reach], [reach, reach]]).T
        ij = inverse @ corners
        lo = np.floor(ij.min(axis=1)).astype(int) - 1
        hi = np.ceil(ij.max(axis=1)).astype(int) + 1

        seen = set()
        for i in range(lo[0], hi[0] + 1):
            for j in range(lo[1], hi[1] + 1):
                offset = basis @ np.array([i, j], dtype=float)
                for tile in template.tiles:
                    center = np.array(tile.center) + offset
                    if np.hypot(*center) > reach:
                        continue
                    corners_xy = tile_vertices(tile, offset)
                    keys = tuple(self.key(p) for p in corners_xy)
                    signature = frozenset(keys)
                    if signature in seen:
                        continue
                    seen.add(signature)
                    for k, p in zip(keys, corners_xy):
                        self.points.setdefault(k, p)
                    self.faces.append(keys)
                    self.centers.append(center)

    def key(self, p) -> Key:
        return (int(round(p[0] * self.scale)), int(round(p[1] * self.scale)))

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        for keys in self.faces:
            n = len(keys)
            g.add_edges_from((keys[i], keys[(i + 1) % n]) for i in range(n))
        return g

    def nearest_to_origin(self) -> Key:
        return min(self.points, key=lambda k: (k[0] * k[0] + k[1] * k[1], k[1], k[0]))


def planar_window(code: str, radius: int, family: str = "archimedean") -> HalfEdgeMap:
    """Window of an Archimedean tiling around the vertex nearest the origin.

    Every vertex within graph distance ``radius`` of the center (id 0) is
    interior. Ids follow (distance, y, x); faces are counter-clockwise and
    start at their smallest id; coordinates are kept as embedding hints.

    Args:
        code: Any accepted notation of one of the eleven codes
        radius: Window radius in graph distance

    Returns:
        The window
    """
    template = template_for(code)
    max_r = max(circumradius(t.n) for t in template.tiles)
    stamped = StampedTiling(template, radius + 2 * max_r + 2)

    center = stamped.nearest_to_origin()
    distances = nx.single_source_shortest_path_length(stamped.graph(), center)

    kept = [
        keys for keys in stamped.faces
        if any(distances.get(k, radius + 1) <= radius for k in keys)
    ]
    used = {k for keys in kept for k in keys}
    order = sorted(used, key=lambda k: (distances[k], k[1], k[0]))
    relabel = {k: i for i, k in enumerate(order)}

    faces = []
    for keys in kept:
        ids = [relabel[k] for k in keys]
        i = ids.index(min(ids))
        faces.append(tuple(ids[i:] + ids[:i]))
    faces.sort()

    coordinates = np.array([stamped.points[k] for k in order])
    metadata = {
        "family": family,
        "code": template.code,
        "pattern": list(template.pattern),
        "window_radius": radius,
    }
    hmap = build_map(faces, vertex_count=len(order), coordinates=coordinates, metadata=metadata)
    logger.info(f"Generated {template.code} window of radius {radius}: {hmap!r}")
    return hmap
