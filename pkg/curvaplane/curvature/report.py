"""Per-vertex curvature of a window and its Gauss–Bonnet partial sums."""

import csv
import io
from fractions import Fraction
from typing import Iterable, List

from curvaplane.core.errors import BoundaryVertex, NoInteriorVertices
from curvaplane.core.logging import get_logger
from curvaplane.core.rational import format_rational
from curvaplane.curvature.models import (
    BallCurvatureSum,
    CurvatureReport,
    Pattern,
    VertexCurvature,
)
from curvaplane.curvature.patterns import classify_pattern, pattern_curvature
from curvaplane.graph.balls import ball
from curvaplane.graph.halfedge import HalfEdgeMap

logger = get_logger(__name__)

MAX_NONNEGATIVE_DEGREE = 6


def vertex_pattern(hmap: HalfEdgeMap, x: int) -> Pattern:
    """Sorted degrees of the faces incident to an interior vertex.

    Raises:
        UnknownVertex: If x is not a vertex
        BoundaryVertex: If x lies on the window boundary
    """
    if not hmap.is_interior(x):
        raise BoundaryVertex(f"vertex {x} lies on the window boundary", location=x)
    return Pattern.of(hmap.face_degree(f) for f in hmap.incident_faces[x])


def curvature(hmap: HalfEdgeMap, x: int) -> Fraction:
    """Exact Φ(x) = 1 − d_x/2 + Σ 1/deg(σ)."""
    vertex_pattern(hmap, x)
    phi = Fraction(1) - Fraction(hmap.degree(x), 2)
    for f in hmap.incident_faces[x]:
        phi += Fraction(1, hmap.face_degree(f))
    return phi


def curvature_report(hmap: HalfEdgeMap) -> CurvatureReport:
    """Exact curvature, classification and Gauss–Bonnet data of a window.

    Raises:
        NoInteriorVertices: If the window has no interior vertex
    """
    if not hmap.interior_vertices:
        raise NoInteriorVertices("the window has no interior vertex")

    entries: List[VertexCurvature] = []
    total = Fraction(0)
    for x in hmap.interior_vertices:
        pattern = vertex_pattern(hmap, x)
        phi = curvature(hmap, x)
        if phi != pattern_curvature(pattern.degrees):
            logger.warning(f"Vertex {x}: d_x differs from the number of incident faces")
        cls = classify_pattern(pattern)
        entries.append(VertexCurvature(
            vertex=x,
            degree=hmap.degree(x),
            pattern=pattern.degrees,
            phi=phi,
            sign="positive" if phi > 0 else "negative" if phi < 0 else "zero",
            table_row=cls.table_row.label if cls.table_row is not None else None,
        ))
        total += phi

    nonnegative = all(e.phi >= 0 for e in entries)
    violations = []
    if nonnegative:
        violations = [e.vertex for e in entries if e.degree > MAX_NONNEGATIVE_DEGREE]

    closed = not hmap.window_boundary
    chi = hmap.euler_characteristic()
    report = CurvatureReport(
        vertices=entries,
        max_face_degree=hmap.max_face_degree,
        total=total,
        nonnegative_everywhere=nonnegative,
        gauss_bonnet_ok=total <= 1,
        degree_bound_violations=violations,
        euler_characteristic=chi,
        closed=closed,
        gauss_bonnet_exact=(total == chi) if closed else None,
    )
    logger.info(
        f"Curvature report: {len(entries)} interior vertices, total {format_rational(total)}, "
        f"D_G = {report.max_face_degree}"
    )
    return report


def gauss_bonnet_profile(hmap: HalfEdgeMap, p: int, radii: Iterable[int]) -> List[BallCurvatureSum]:
    """Exact Σ Φ over B_R(p) for every requested R whose ball is complete."""
    profile = []
    for radius in sorted(set(radii)):
        b = ball(hmap, p, radius)
        if not b.complete:
            logger.info(f"B_{radius}({p}) touches the window boundary; stopping")
            break
        total = sum((curvature(hmap, x) for x in b.vertices), Fraction(0))
        profile.append(BallCurvatureSum(radius=radius, total=total, vertex_count=len(b.vertices)))
    return profile


def report_to_json(report: CurvatureReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def report_to_csv(report: CurvatureReport) -> str:
    """Rows of (vertex, d_x, pattern, Φ, class)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["vertex", "degree", "pattern", "phi", "class"])
    for e in report.vertices:
        writer.writerow([
            e.vertex,
            e.degree,
            "(" + ",".join(str(d) for d in e.pattern) + ")",
            format_rational(e.phi),
            e.sign,
        ])
    return buffer.getvalue()
