"""Empirical probes of the analytic inequalities on finite balls.

Every Monte-Carlo probe draws sample ``i`` from
``numpy.random.default_rng([seed, i])`` so results do not depend on the
order in which samples are evaluated.
"""

import math
from typing import Iterable, List, Mapping, Optional, Sequence, Union

import networkx as nx
import numpy as np
from scipy import linalg

from curvaplane.core.config import settings
from curvaplane.core.errors import (
    Disconnected,
    InvalidParameter,
    MissingNeighborValue,
    NonpositiveBoundary,
    TooSmall,
    WindowTooSmall,
    ZeroField,
)
from curvaplane.core.logging import get_logger
from curvaplane.graph.balls import GraphLike, as_graph, ball, set_ball
from curvaplane.graph.models import BallSubgraph
from curvaplane.harmonic.models import (
    EscapeProfile,
    GradientEstimate,
    HarmonicField,
    HarnackReport,
    Lambda1Report,
    PoincareReport,
)
from curvaplane.harmonic.operators import gradient_norm_sq
from curvaplane.harmonic.solver import DirichletProblem

logger = get_logger(__name__)


def sphere(obj: GraphLike, sources: Union[int, Iterable[int]], radius: int) -> List[int]:
    """Vertices at distance exactly ``radius`` from a vertex or a vertex set."""
    if isinstance(sources, int):
        return ball(obj, sources, radius).sphere
    return set_ball(obj, sources, radius).sphere


def random_boundary(vertices: Sequence[int], seed: int, index: int = 0, positive: bool = False) -> dict:
    """Seeded boundary data: uniform on (0, 1] when ``positive``, standard Gaussian otherwise."""
    rng = np.random.default_rng([seed, index])
    values = 1.0 - rng.random(len(vertices)) if positive else rng.standard_normal(len(vertices))
    return {v: float(x) for v, x in zip(vertices, values)}


def check_samples(samples: int) -> None:
    if samples < 1:
        raise InvalidParameter(f"need at least one sample, got {samples}")


def _outer_radius(radius: int, factor: float) -> int:
    return int(math.ceil(factor * radius))


def _complete_ball(g: nx.Graph, p: int, radius: int) -> BallSubgraph:
    domain = ball(g, p, radius)
    if not domain.complete:
        raise WindowTooSmall(f"ball B_{radius}({p}) reaches the window boundary", location=p)
    return domain


def harnack_ratio(
    obj: GraphLike,
    p: int,
    radius: int,
    boundary: Mapping[int, float],
    growth_factor: Optional[float] = None,
) -> float:
    """max/min over B_R(p) of the harmonic extension of positive data on ∂B_{C1·R}(p).

    Raises:
        NonpositiveBoundary: If a boundary value is not positive
    """
    growth_factor = settings.harnack_growth if growth_factor is None else growth_factor
    g = as_graph(obj)
    outer = ball(g, p, _outer_radius(radius, growth_factor))
    problem = DirichletProblem(g, outer)
    data = problem.boundary_vector(boundary)
    if np.any(data <= 0):
        bad = problem.boundary[int(np.argmax(data <= 0))]
        raise NonpositiveBoundary(f"boundary value {boundary[bad]} at vertex {bad} is not positive", location=bad)
    values = problem.solve_array(data)
    inner = np.array([i for i, v in enumerate(problem.vertices) if outer.distances[v] <= radius])
    return float(values[inner].max() / values[inner].min())


def harnack_sweep(
    obj: GraphLike,
    p: int,
    radius: int,
    samples: int,
    seed: Optional[int] = None,
    growth_factor: Optional[float] = None,
) -> HarnackReport:
    """Harnack ratios over seeded uniform (0, 1] boundary data."""
    seed = settings.default_seed if seed is None else seed
    growth_factor = settings.harnack_growth if growth_factor is None else growth_factor
    check_samples(samples)
    g = as_graph(obj)
    outer_radius = _outer_radius(radius, growth_factor)
    problem = DirichletProblem(g, ball(g, p, outer_radius))
    data = np.column_stack([
        problem.boundary_vector(random_boundary(problem.boundary, seed, i, positive=True))
        for i in range(samples)
    ])
    values = problem.solve_array(data)
    inner = [i for i, v in enumerate(problem.vertices) if problem.ball.distances[v] <= radius]
    ratios = values[inner].max(axis=0) / values[inner].min(axis=0)
    report = HarnackReport(
        center=p,
        radius=radius,
        growth_factor=growth_factor,
        outer_radius=outer_radius,
        samples=samples,
        seed=seed,
        max_ratio=float(ratios.max()),
        mean_ratio=float(ratios.mean()),
    )
    logger.info(f"Harnack sweep at {p}, R={radius}: max ratio {report.max_ratio:.4f}")
    return report


def mean_value_check(
    obj: GraphLike,
    p: int,
    radius: int,
    field: HarmonicField,
    growth_factor: Optional[float] = None,
) -> float:
    """u²(p)·|B_{C1R}(p)| / Σ_{x∈B_{C1R}(p)} u²(x) d_x.

    Raises:
        MissingNeighborValue: If the field does not cover B_{C1R}(p)
        ZeroField: If u vanishes on the whole ball
    """
    growth_factor = settings.harnack_growth if growth_factor is None else growth_factor
    g = as_graph(obj)
    members = ball(g, p, _outer_radius(radius, growth_factor)).vertices
    missing = [v for v in members if v not in field.values]
    if missing:
        raise MissingNeighborValue(f"field has no value at vertex {missing[0]}", location=missing[0])
    u = np.array([field.values[v] for v in members])
    d = np.array([g.degree(v) for v in members], dtype=float)
    energy = float(np.sum(u * u * d))
    if energy == 0.0:
        raise ZeroField(f"field vanishes on B_{radius}({p})", location=p)
    return float(field.values[p] ** 2 * d.sum() / energy)


class _PoincareDomain:
    """Index arrays for B_R(p) inside the enlarged ball B_{CR}(p)."""

    def __init__(self, obj: GraphLike, p: int, radius: int, enlargement: float):
        if radius < 1:
            raise InvalidParameter(f"radius must be at least 1, got {radius}")
        g = as_graph(obj)
        self.radius = radius
        self.outer = _complete_ball(g, p, _outer_radius(radius, enlargement))
        self.vertices = self.outer.vertices
        index = {v: i for i, v in enumerate(self.vertices)}
        self.inner = np.array([index[v] for v in self.outer.within(radius)], dtype=int)
        self.weights = np.array([g.degree(v) for v in self.outer.within(radius)], dtype=float)
        self.heads = np.array([index[u] for u, _ in self.outer.edges], dtype=int)
        self.tails = np.array([index[v] for _, v in self.outer.edges], dtype=int)

    def ratios(self, f: np.ndarray) -> np.ndarray:
        """LHS / (R²·RHS) per column of ``f`` with 0/0 → 0."""
        inner = f[self.inner]
        mean = (self.weights @ inner) / self.weights.sum()
        lhs = self.weights @ (inner - mean) ** 2
        # ordered pairs x∼y: each undirected edge counts twice
        rhs = 2.0 * np.sum((f[self.heads] - f[self.tails]) ** 2, axis=0)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = lhs / (self.radius ** 2 * rhs)
        return np.where(rhs > 0, out, 0.0)


def poincare_ratio(
    obj: GraphLike,
    p: int,
    radius: int,
    f: Mapping[int, float],
    enlargement: Optional[float] = None,
) -> float:
    """Poincaré quotient Σ_{B_R}(f − f_{B_R})² d_x / (R² Σ_{x∼y in B_CR}(f(x) − f(y))²) of one field.

    Raises:
        WindowTooSmall: If B_{CR}(p) is not complete
        MissingNeighborValue: If f does not cover B_{CR}(p)
    """
    enlargement = settings.poincare_enlargement if enlargement is None else enlargement
    domain = _PoincareDomain(obj, p, radius, enlargement)
    missing = [v for v in domain.vertices if v not in f]
    if missing:
        raise MissingNeighborValue(f"field has no value at vertex {missing[0]}", location=missing[0])
    values = np.array([f[v] for v in domain.vertices], dtype=float)
    return float(domain.ratios(values[:, None])[0])


def poincare_constant(
    obj: GraphLike,
    p: int,
    radius: int,
    samples: int,
    seed: Optional[int] = None,
    enlargement: Optional[float] = None,
) -> float:
    """Largest Poincaré quotient over seeded standard Gaussian fields on B_{CR}(p).

    Raises:
        WindowTooSmall: If B_{CR}(p) is not complete
    """
    seed = settings.default_seed if seed is None else seed
    enlargement = settings.poincare_enlargement if enlargement is None else enlargement
    check_samples(samples)
    domain = _PoincareDomain(obj, p, radius, enlargement)
    n = len(domain.vertices)
    fields = np.column_stack([np.random.default_rng([seed, i]).standard_normal(n) for i in range(samples)])
    return float(domain.ratios(fields).max())


def poincare_optimum(obj: GraphLike, p: int, radius: int, enlargement: Optional[float] = None) -> float:
    """Exact supremum of the Poincaré quotient over all fields on B_{CR}(p).

    The numerator is f^T Q f with Q = W − w w^T / |B_R| (W the diagonal of
    degrees on B_R); the denominator is 2 f^T L f for the Laplacian L of the
    induced subgraph on B_{CR}. Adding the all-ones projector to the
    denominator makes the pencil definite without changing the supremum.

    Raises:
        WindowTooSmall: If B_{CR}(p) is not complete
    """
    enlargement = settings.poincare_enlargement if enlargement is None else enlargement
    domain = _PoincareDomain(obj, p, radius, enlargement)
    n = len(domain.vertices)
    w = np.zeros(n)
    w[domain.inner] = domain.weights
    q = np.diag(w) - np.outer(w, w) / w.sum()

    lap = np.zeros((n, n))
    np.add.at(lap, (domain.heads, domain.tails), -1.0)
    np.add.at(lap, (domain.tails, domain.heads), -1.0)
    lap[np.diag_indices(n)] = -lap.sum(axis=1)
    denominator = 2.0 * lap + np.ones((n, n))

    top = linalg.eigh(q, denominator, eigvals_only=True, subset_by_index=[n - 1, n - 1])
    return float(top[0] / radius ** 2)


def poincare_report(
    obj: GraphLike,
    p: int,
    radius: int,
    samples: int,
    seed: Optional[int] = None,
    enlargement: Optional[float] = None,
) -> PoincareReport:
    seed = settings.default_seed if seed is None else seed
    enlargement = settings.poincare_enlargement if enlargement is None else enlargement
    report = PoincareReport(
        center=p,
        radius=radius,
        enlargement=enlargement,
        samples=samples,
        seed=seed,
        max_ratio=poincare_constant(obj, p, radius, samples, seed, enlargement),
        optimum=poincare_optimum(obj, p, radius, enlargement),
    )
    logger.info(f"Poincaré at {p}, R={radius}: sampled {report.max_ratio:.4f}, optimum {report.optimum:.4f}")
    return report


def lambda1_check(obj: GraphLike, domain: Union[BallSubgraph, Iterable[int]]) -> Lambda1Report:
    """First nonzero eigenvalue of the normalized Laplacian of an induced subgraph.

    Degrees are taken inside the subgraph.

    Raises:
        TooSmall: If the subgraph has fewer than two vertices
        Disconnected: If the subgraph is not connected
    """
    g = as_graph(obj)
    members = sorted(domain.vertices if isinstance(domain, BallSubgraph) else set(domain))
    sub = g.subgraph(members)
    if len(members) < 2:
        raise TooSmall(f"induced subgraph has {len(members)} vertex, need at least 2")
    if not nx.is_connected(sub):
        raise Disconnected("induced subgraph is not connected")

    matrix = nx.normalized_laplacian_matrix(sub, nodelist=members).toarray()
    eigenvalues = linalg.eigh(matrix, eigvals_only=True)
    diameter = nx.diameter(sub)
    volume = 2 * sub.number_of_edges()
    lambda1 = float(eigenvalues[1])
    bound = 1.0 / (diameter * volume)
    return Lambda1Report(
        vertex_count=len(members),
        diameter=diameter,
        volume=volume,
        lambda1=lambda1,
        bound=bound,
        ok=lambda1 >= bound,
    )


def escape_probability(obj: GraphLike, p: int, radius: int) -> float:
    """Probability that the simple random walk from p reaches ∂B_R(p) before returning to p.

    Solves h = 0 at p, h = 1 on ∂B_R(p), h harmonic in between, and
    averages h over the neighbors of p.
    """
    if radius < 1:
        raise InvalidParameter(f"radius must be at least 1, got {radius}")
    g = as_graph(obj)
    domain = ball(g, p, radius)
    problem = DirichletProblem(g, domain, pinned=[p])
    data = np.array([0.0 if v == p else 1.0 for v in problem.boundary])
    values = problem.solve_array(data)
    position = {v: i for i, v in enumerate(problem.vertices)}
    neighbors = list(g.neighbors(p))
    return float(np.mean([values[position[y]] for y in neighbors]))


def escape_profile(obj: GraphLike, p: int, radii: Sequence[int]) -> EscapeProfile:
    escape = [escape_probability(obj, p, r) for r in radii]
    logger.info(f"Escape probabilities at {p}: " + ", ".join(f"R={r}: {e:.4f}" for r, e in zip(radii, escape)))
    return EscapeProfile(center=p, radii=list(radii), escape=escape)


def gradient_estimate_check(obj: GraphLike, field: HarmonicField, x: int, radius: int) -> GradientEstimate:
    """|∇u|(x) against osc_{B_6r(x)} u / √r.

    Raises:
        WindowTooSmall: If the field does not cover B_6r(x)
    """
    if radius < 1:
        raise InvalidParameter(f"radius must be at least 1, got {radius}")
    g = as_graph(obj)
    members = ball(g, x, 6 * radius).vertices
    missing = [v for v in members if v not in field.values]
    if missing:
        raise WindowTooSmall(f"field does not cover B_{6 * radius}({x}): no value at {missing[0]}", location=x)
    return GradientEstimate(
        vertex=x,
        radius=radius,
        lhs=math.sqrt(gradient_norm_sq(g, field.values, x)),
        rhs_scale=field.oscillation(members) / math.sqrt(radius),
    )
