"""Oscillation of harmonic functions on spheres around the big face.

For a large-face window with big face vertex set A, a function harmonic on
B_{r_max}(A) has M(r) = osc_{∂B_r(A)} u nondecreasing in r; its decay
M(r)/M(9r) → 0 is what forces positive harmonic functions to be constant.
"""

from typing import List, Mapping, Optional, Sequence

import numpy as np

from curvaplane.core.config import settings
from curvaplane.core.errors import EmptyBoundary, WindowTooShallow, WindowTooSmall
from curvaplane.core.logging import get_logger
from curvaplane.curvature.models import LayerDecomposition
from curvaplane.graph.balls import GraphLike, as_graph, set_ball
from curvaplane.harmonic.models import OscillationProfile, OscillationSweep
from curvaplane.harmonic.probes import check_samples, random_boundary
from curvaplane.harmonic.solver import DirichletProblem

logger = get_logger(__name__)

DECAY_FACTOR = 9


def _problem(obj: GraphLike, sources: List[int], outer_radius: int, radii: Sequence[int]) -> DirichletProblem:
    bad = [r for r in radii if not 0 <= r <= outer_radius]
    if bad:
        raise WindowTooShallow(f"radius {bad[0]} is outside [0, {outer_radius}]")
    domain = set_ball(obj, sources, outer_radius)
    try:
        return DirichletProblem(as_graph(obj), domain)
    except (EmptyBoundary, WindowTooSmall) as exc:
        raise WindowTooShallow(f"B_{outer_radius}(A) reaches the window boundary: {exc.message}") from exc


def _sphere_positions(problem: DirichletProblem, radius: int) -> np.ndarray:
    distances = problem.ball.distances
    return np.array([i for i, v in enumerate(problem.vertices) if distances[v] == radius], dtype=int)


def _decay(radii: Sequence[int], oscillations: Sequence[float]) -> dict:
    by_radius = dict(zip(radii, oscillations))
    ratios = {}
    for r in radii:
        if r == 0:
            continue
        far = by_radius.get(DECAY_FACTOR * r)
        if far:
            ratios[r] = by_radius[r] / far
    return ratios


def oscillation_profile(
    obj: GraphLike,
    layers: LayerDecomposition,
    boundary: Mapping[int, float],
    radii: Sequence[int],
    outer_radius: Optional[int] = None,
) -> OscillationProfile:
    """M(r) for each requested radius after solving on B_{r_max}(A).

    Args:
        obj: The large-face window
        layers: Its layer decomposition (supplies A, the big face vertices)
        boundary: Values on ∂B_{r_max}(A)
        radii: Radii r at which to measure M(r)
        outer_radius: r_max; defaults to the largest requested radius

    Raises:
        WindowTooShallow: If a radius exceeds r_max or B_{r_max}(A) leaves the window
    """
    radii = sorted(set(int(r) for r in radii))
    outer_radius = max(radii) if outer_radius is None else outer_radius
    sources = list(layers.big_face_vertices)
    problem = _problem(obj, sources, outer_radius, radii)
    values = problem.solve_array(problem.boundary_vector(boundary))

    oscillations = []
    for r in radii:
        ring = values[_sphere_positions(problem, r)]
        oscillations.append(float(ring.max() - ring.min()))
    profile = OscillationProfile(
        sources=sorted(sources),
        outer_radius=outer_radius,
        radii=radii,
        oscillations=oscillations,
        decay_ratios=_decay(radii, oscillations),
    )
    logger.info(f"Oscillation profile on B_{outer_radius}(A): {len(radii)} radii")
    return profile


def oscillation_sweep(
    obj: GraphLike,
    layers: LayerDecomposition,
    radii: Sequence[int],
    outer_radius: int,
    samples: int,
    seed: Optional[int] = None,
) -> OscillationSweep:
    """Median M(r) and median M(r)/M(9r) over seeded uniform (0, 1] boundary data on ∂B_{r_max}(A).

    Decay ratios are reported for every requested r with 9r ≤ r_max.
    """
    check_samples(samples)
    seed = settings.default_seed if seed is None else seed
    radii = sorted(set(int(r) for r in radii))
    measured = sorted(set(radii) | {DECAY_FACTOR * r for r in radii if 0 < DECAY_FACTOR * r <= outer_radius})
    sources = list(layers.big_face_vertices)
    problem = _problem(obj, sources, outer_radius, measured)

    data = np.column_stack([
        problem.boundary_vector(random_boundary(problem.boundary, seed, i, positive=True))
        for i in range(samples)
    ])
    values = problem.solve_array(data)
    spread = {}
    for r in measured:
        ring = values[_sphere_positions(problem, r)]
        spread[r] = ring.max(axis=0) - ring.min(axis=0)

    median_ratios = {}
    for r in radii:
        far = DECAY_FACTOR * r
        if r > 0 and far in spread:
            with np.errstate(divide="ignore", invalid="ignore"):
                ratios = np.where(spread[far] > 0, spread[r] / spread[far], 0.0)
            median_ratios[r] = float(np.median(ratios))
    sweep = OscillationSweep(
        sources=sorted(sources),
        outer_radius=outer_radius,
        samples=samples,
        seed=seed,
        radii=radii,
        median_oscillations=[float(np.median(spread[r])) for r in radii],
        median_decay_ratios=median_ratios,
    )
    logger.info(f"Oscillation sweep over {samples} samples: median decay {sweep.median_decay_ratios}")
    return sweep
