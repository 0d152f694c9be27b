"""Finite windows of semiplanar graphs as face-defined combinatorial maps.

The face list is the single source of truth: edges, half-edges, vertex
rotations and the window boundary are all derived from it. An undirected
edge traversed by exactly one face side is a window-boundary edge; a vertex
touching such an edge is a window-boundary vertex, every other vertex is
interior.
"""

from collections import deque
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from curvaplane.core.errors import (
    DegenerateFace,
    DuplicateEdge,
    EdgeOveruse,
    FormatError,
    LoopEdge,
    UnknownVertex,
)
from curvaplane.core.logging import get_logger
from curvaplane.graph.models import ValidationReport, Violation

logger = get_logger(__name__)

Edge = Tuple[int, int]


class HalfEdge(NamedTuple):
    origin: int
    target: int
    face: int
    index: int


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class HalfEdgeMap:
    """Immutable combinatorial map built from cyclic face boundary walks."""

    def __init__(
        self,
        faces: Sequence[Sequence[int]],
        vertex_count: Optional[int] = None,
        coordinates: Optional[Any] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ):
        """Build the map and all derived structures.

        Args:
            faces: Cyclic vertex-id lists, one per face
            vertex_count: Number of vertices; defaults to max id + 1
            coordinates: Optional (vertex_count, 2) embedding hints
            metadata: Free-form generator information

        Raises:
            LoopEdge, DuplicateEdge, DegenerateFace, EdgeOveruse, FormatError
        """
        self.faces: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(v) for v in face) for face in faces)
        max_id = max((max(face) for face in self.faces if face), default=-1)
        if vertex_count is None:
            vertex_count = max_id + 1
        if vertex_count < max_id + 1:
            raise FormatError(f"vertex_count {vertex_count} is smaller than the largest id {max_id} + 1")
        self.vertex_count = int(vertex_count)
        self.metadata: Dict[str, Any] = dict(metadata or {})

        if coordinates is not None:
            coordinates = np.asarray(coordinates, dtype=float)
            if coordinates.shape != (self.vertex_count, 2):
                raise FormatError(
                    f"coordinates must have shape ({self.vertex_count}, 2), got {coordinates.shape}"
                )
            coordinates.setflags(write=False)
        self.coordinates: Optional[np.ndarray] = coordinates

        half_edges: List[HalfEdge] = []
        uses: Dict[Edge, List[HalfEdge]] = {}
        for face_id, face in enumerate(self.faces):
            self._check_face(face_id, face)
            n = len(face)
            for index in range(n):
                he = HalfEdge(face[index], face[(index + 1) % n], face_id, index)
                half_edges.append(he)
                key = edge_key(he.origin, he.target)
                bucket = uses.setdefault(key, [])
                bucket.append(he)
                if len(bucket) > 2:
                    raise EdgeOveruse(
                        f"edge {key} is traversed {len(bucket)} times (faces "
                        f"{sorted(h.face for h in bucket)})",
                        location=key,
                    )

        self.half_edges: Tuple[HalfEdge, ...] = tuple(half_edges)
        self.edge_uses: Dict[Edge, Tuple[HalfEdge, ...]] = {k: tuple(v) for k, v in uses.items()}
        self.edges: Tuple[Edge, ...] = tuple(sorted(uses))
        self.boundary_edges: FrozenSet[Edge] = frozenset(k for k, v in uses.items() if len(v) == 1)

        adjacency: List[set] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self.neighbors: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adjacency)

        incident: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for face_id, face in enumerate(self.faces):
            for v in face:
                incident[v].append(face_id)
        self.incident_faces: Tuple[Tuple[int, ...], ...] = tuple(tuple(fs) for fs in incident)

        boundary = set()
        for u, v in self.boundary_edges:
            boundary.add(u)
            boundary.add(v)
        self.window_boundary: FrozenSet[int] = frozenset(boundary)
        self.interior_vertices: Tuple[int, ...] = tuple(
            v for v in range(self.vertex_count) if v not in self.window_boundary
        )

        logger.debug(
            f"Built map with {self.vertex_count} vertices, {len(self.edges)} edges, "
            f"{len(self.faces)} faces"
        )

    @staticmethod
    def _check_face(face_id: int, face: Tuple[int, ...]) -> None:
        n = len(face)
        if n < 3:
            raise DegenerateFace(f"face {face_id} has {n} < 3 vertices", location=face_id)
        for index in range(n):
            if face[index] == face[(index + 1) % n]:
                raise LoopEdge(f"face {face_id} joins vertex {face[index]} to itself", location=face_id)
        seen = set()
        for index in range(n):
            key = edge_key(face[index], face[(index + 1) % n])
            if key in seen:
                raise DuplicateEdge(f"face {face_id} traverses edge {key} twice", location=face_id)
            seen.add(key)
        if len(set(face)) != n:
            raise DegenerateFace(f"face {face_id} repeats a vertex", location=face_id)

    def __repr__(self) -> str:
        return (
            f"<HalfEdgeMap(vertices={self.vertex_count}, edges={len(self.edges)}, "
            f"faces={len(self.faces)}, interior={len(self.interior_vertices)})>"
        )

    def check_vertex(self, x: int) -> int:
        if not isinstance(x, (int, np.integer)) or not 0 <= x < self.vertex_count:
            raise UnknownVertex(f"vertex {x} is not in the map (0..{self.vertex_count - 1})", location=x)
        return int(x)

    def degree(self, x: int) -> int:
        """d_x, the number of neighbors of ``x``."""
        return len(self.neighbors[self.check_vertex(x)])

    def face_degree(self, face_id: int) -> int:
        """deg(σ), the number of edges of a face."""
        return len(self.faces[face_id])

    def is_interior(self, x: int) -> bool:
        return self.check_vertex(x) not in self.window_boundary

    @property
    def max_face_degree(self) -> int:
        """D_G of the window."""
        return max((len(face) for face in self.faces), default=0)

    def _link(self, x: int) -> Dict[int, List[Tuple[int, int]]]:
        """Faces around ``x`` as edges of its link: neighbor -> [(face, other neighbor)]."""
        link: Dict[int, List[Tuple[int, int]]] = {}
        for face_id in self.incident_faces[x]:
            face = self.faces[face_id]
            i = face.index(x)
            before, after = face[i - 1], face[(i + 1) % len(face)]
            link.setdefault(before, []).append((face_id, after))
            link.setdefault(after, []).append((face_id, before))
        return link

    def has_local_disk(self, x: int) -> bool:
        """True if the faces at ``x`` form one cycle (interior) or one fan (boundary)."""
        x = self.check_vertex(x)
        faces = self.incident_faces[x]
        if not faces:
            return False
        link = self._link(x)
        degrees = [len(entries) for entries in link.values()]
        if x in self.window_boundary:
            if sorted(degrees).count(1) != 2 or any(d > 2 for d in degrees):
                return False
        elif any(d != 2 for d in degrees):
            return False
        start = next(iter(link))
        seen = {start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for _, other in link[node]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
        return len(seen) == len(link)

    def rotation(self, x: int) -> Tuple[int, ...]:
        """Incident faces of ``x`` in cyclic (or fan) order.

        Falls back to face-id order when the local disk condition fails.
        """
        x = self.check_vertex(x)
        faces = self.incident_faces[x]
        if len(faces) <= 1 or not self.has_local_disk(x):
            return tuple(faces)
        link = self._link(x)
        if x in self.window_boundary:
            node = min(n for n, entries in link.items() if len(entries) == 1)
        else:
            first = min(faces)
            face = self.faces[first]
            node = face[face.index(x) - 1]
        order: List[int] = []
        used = set()
        while True:
            step = [(f, other) for f, other in link[node] if f not in used]
            if not step:
                break
            face_id, node = min(step)
            used.add(face_id)
            order.append(face_id)
        return tuple(order)

    def face_orientation_parity(self) -> Tuple[bool, Dict[int, int]]:
        """Try to orient all faces coherently.

        Returns:
            (orientable, parity) where parity[f] = 1 means face f must be reversed
        """
        parity: Dict[int, int] = {}
        orientable = True
        face_edges: List[List[Edge]] = [[] for _ in self.faces]
        for he in self.half_edges:
            face_edges[he.face].append(edge_key(he.origin, he.target))
        for seed in range(len(self.faces)):
            if seed in parity:
                continue
            parity[seed] = 0
            queue = deque([seed])
            while queue:
                f = queue.popleft()
                for key in face_edges[f]:
                    sides = self.edge_uses[key]
                    if len(sides) != 2:
                        continue
                    mine = sides[0] if sides[0].face == f else sides[1]
                    other = sides[1] if mine is sides[0] else sides[0]
                    same_direction = (mine.origin, mine.target) == (other.origin, other.target)
                    wanted = parity[f] ^ int(same_direction)
                    if other.face not in parity:
                        parity[other.face] = wanted
                        queue.append(other.face)
                    elif parity[other.face] != wanted:
                        orientable = False
        return orientable, parity

    @cached_property
    def graph(self) -> nx.Graph:
        """networkx view; nodes carry ``window_boundary`` and optional ``pos``."""
        g = nx.Graph()
        for v in range(self.vertex_count):
            attrs = {"window_boundary": v in self.window_boundary}
            if self.coordinates is not None:
                attrs["pos"] = (float(self.coordinates[v, 0]), float(self.coordinates[v, 1]))
            g.add_node(v, **attrs)
        g.add_edges_from(self.edges)
        return g

    def euler_characteristic(self) -> int:
        """V − E + F of the window (vertices without faces are not counted)."""
        used = sum(1 for fs in self.incident_faces if fs)
        return used - len(self.edges) + len(self.faces)


def build_map(
    faces: Iterable[Sequence[int]],
    vertex_count: Optional[int] = None,
    coordinates: Optional[Any] = None,
    metadata: Optional[Dict[str, Any]] = None,
) -> HalfEdgeMap:
    """Build a HalfEdgeMap from cyclic face lists.

    Args:
        faces: Face boundary walks
        vertex_count: Optional explicit vertex count
        coordinates: Optional embedding hints
        metadata: Optional generator metadata

    Returns:
        The immutable map
    """
    return HalfEdgeMap(list(faces), vertex_count=vertex_count, coordinates=coordinates, metadata=metadata)


def validate(hmap: HalfEdgeMap) -> ValidationReport:
    """Check the standing assumptions of a semiplanar window; never mutates.

    Rules: ``face-degree`` (3 ≤ deg σ), ``simple-graph`` (no repeated vertex in
    a face walk), ``interior-degree`` (3 ≤ d_x at interior vertices),
    ``local-disk`` (incident faces of an interior vertex form one cycle).
    """
    violations: List[Violation] = []

    for face_id, face in enumerate(hmap.faces):
        if len(face) < 3:
            violations.append(Violation(
                rule="face-degree",
                location=f"face:{face_id}",
                message=f"deg = {len(face)} < 3",
            ))
        if len(set(face)) != len(face):
            violations.append(Violation(
                rule="simple-graph",
                location=f"face:{face_id}",
                message="face walk repeats a vertex",
            ))

    for x in hmap.interior_vertices:
        d = len(hmap.neighbors[x])
        if d < 3:
            violations.append(Violation(
                rule="interior-degree",
                location=f"vertex:{x}",
                message=f"d_x = {d} < 3",
            ))
        if hmap.incident_faces[x] and not hmap.has_local_disk(x):
            violations.append(Violation(
                rule="local-disk",
                location=f"vertex:{x}",
                message="incident faces do not form a single cyclic order",
            ))

    orientable, _ = hmap.face_orientation_parity()
    return ValidationReport(
        ok=not violations,
        violations=violations,
        orientable=orientable,
        interior_vertex_count=len(hmap.interior_vertices),
        boundary_vertex_count=len(hmap.window_boundary),
    )


def canonical_faces(hmap: HalfEdgeMap) -> List[Tuple[int, ...]]:
    """Faces as sorted canonical cycles, insensitive to rotation and direction."""
    canon = []
    for face in hmap.faces:
        candidates = []
        for walk in (face, tuple(reversed(face))):
            i = walk.index(min(walk))
            candidates.append(walk[i:] + walk[:i])
        canon.append(min(candidates))
    return sorted(canon)
