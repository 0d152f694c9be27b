"""Ball volumes |B_R(p)| and the empirical constants of the volume axioms."""

import csv
import io
import math

import networkx as nx
import numpy as np

from curvaplane.core.errors import InvalidParameter, UnknownVertex, WindowTooSmall
from curvaplane.core.logging import get_logger
from curvaplane.graph.balls import GraphLike, as_graph, ball
from curvaplane.metrics.models import BallProfile, VertexCountBounds, VolumeAxiomReport

logger = get_logger(__name__)

MIN_COMPLETE_RADIUS = 4


def ball_volume_profile(obj: GraphLike, p: int, r_max: int) -> BallProfile:
    """Exact |B_R(p)| for R = 0..r_max by one BFS.

    Raises:
        UnknownVertex: If p is not a vertex
        InvalidParameter: If r_max is negative
    """
    if r_max < 0:
        raise InvalidParameter(f"r_max must be nonnegative, got {r_max}")
    g = as_graph(obj)
    if p not in g:
        raise UnknownVertex(f"vertex {p} is not in the graph", location=p)
    distances = nx.single_source_shortest_path_length(g, p, cutoff=r_max + 1)

    volumes = np.zeros(r_max + 1, dtype=np.int64)
    counts = np.zeros(r_max + 1, dtype=np.int64)
    first_boundary = r_max + 1
    for v, dist in distances.items():
        if g.nodes[v].get("window_boundary", False):
            first_boundary = min(first_boundary, dist)
        if dist <= r_max:
            volumes[dist] += g.degree(v)
            counts[dist] += 1
    volumes = np.cumsum(volumes)
    counts = np.cumsum(counts)

    profile = BallProfile(
        center=p,
        radii=list(range(r_max + 1)),
        volumes=[int(v) for v in volumes],
        vertex_counts=[int(c) for c in counts],
        complete_up_to=min(first_boundary - 1, r_max),
    )
    logger.info(f"Volume profile at {p}: R_max={r_max}, complete up to {profile.complete_up_to}")
    return profile


def volume_axioms(profile: BallProfile) -> VolumeAxiomReport:
    """Doubling, relative-comparison and growth statistics over complete balls.

    Raises:
        WindowTooSmall: If fewer than four radii are complete
    """
    cu = profile.complete_up_to
    if cu < MIN_COMPLETE_RADIUS:
        raise WindowTooSmall(f"balls are complete only up to R = {cu}, need at least {MIN_COMPLETE_RADIUS}")

    radii = np.arange(1, cu + 1)
    volumes = np.array(profile.volumes[1: cu + 1], dtype=float)

    half = radii[radii * 2 <= cu]
    doubling = float(np.max(volumes[2 * half - 1] / volumes[half - 1]))

    big_r = radii[:, None]
    small_r = radii[None, :]
    ratios = (volumes[:, None] / volumes[None, :]) * (small_r / big_r) ** 2
    relative = float(np.max(np.where(small_r < big_r, ratios, 0.0)))

    fit = radii[radii >= math.ceil(cu / 2)]
    slope = np.polyfit(np.log(fit), np.log(volumes[fit - 1]), 1)[0]

    report = VolumeAxiomReport(
        center=profile.center,
        complete_up_to=cu,
        doubling_constant=doubling,
        relative_constant=relative,
        growth_exponent=float(slope),
        fit_radii=[int(r) for r in fit],
        quadratic_coefficient=float(np.max(volumes / radii.astype(float) ** 2)),
    )
    logger.info(
        f"Volume axioms: doubling {report.doubling_constant:.4f}, exponent {report.growth_exponent:.4f}"
    )
    return report


def vertex_count_bounds(obj: GraphLike, p: int, radius: int) -> VertexCountBounds:
    """Check 3·♯B_R ≤ |B_R| ≤ 6·♯B_R on one ball."""
    g = as_graph(obj)
    members = ball(g, p, radius).vertices
    volume = sum(g.degree(v) for v in members)
    return VertexCountBounds(
        radius=radius,
        vertex_count=len(members),
        volume=volume,
        lower_ok=3 * len(members) <= volume,
        upper_ok=volume <= 6 * len(members),
    )


def profile_to_csv(profile: BallProfile) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["R", "volume"])
    for r, volume in zip(profile.radii, profile.volumes):
        writer.writerow([r, volume])
    return buffer.getvalue()
