"""Dirichlet problems for the graph Laplacian on balls.

Unknowns are the ball members at distance < R from the sources (plus any
pinned vertices removed); the sphere ∂B_R and the pinned vertices carry
prescribed values. The interior equations d_x u(x) − Σ_{y∼x} u(y) = 0 form
a symmetric positive definite system that is factorized once with a sparse
LU and reused for every right-hand side.
"""

from typing import Iterable, List, Mapping, Optional

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse.linalg import cg, splu

from curvaplane.core.config import settings
from curvaplane.core.errors import (
    DisconnectedInterior,
    EmptyBoundary,
    MissingNeighborValue,
    WindowTooSmall,
)
from curvaplane.core.logging import get_logger
from curvaplane.graph.balls import GraphLike, as_graph
from curvaplane.graph.models import BallSubgraph
from curvaplane.harmonic.models import HarmonicField

logger = get_logger(__name__)


class DirichletProblem:
    """Factorized interior system of one ball.

    Args:
        obj: Map or plain graph containing the ball
        ball: Domain of the problem
        pinned: Extra vertices with prescribed values (e.g. the start of a random walk)

    Raises:
        WindowTooSmall: If an unknown lies on the window boundary
        EmptyBoundary: If the ball has no sphere vertices
        DisconnectedInterior: If the vertices at distance < R are not connected
    """

    def __init__(self, obj: GraphLike, ball: BallSubgraph, pinned: Iterable[int] = ()):
        g = as_graph(obj)
        self.ball = ball
        inner = ball.inner
        sphere = ball.sphere
        if not sphere:
            raise EmptyBoundary(f"ball of radius {ball.radius} around {ball.center} has an empty sphere")
        flagged = [v for v in inner if g.nodes[v].get("window_boundary", False)]
        if flagged:
            raise WindowTooSmall(
                f"vertex {flagged[0]} at distance < {ball.radius} lies on the window boundary",
                location=flagged[0],
            )
        if inner and not nx.is_connected(g.subgraph(inner)):
            raise DisconnectedInterior(f"the interior of the ball around {ball.center} is not connected")

        pinned = sorted(set(int(v) for v in pinned) & set(inner))
        pinned_set = set(pinned)
        self.unknowns: List[int] = [v for v in inner if v not in pinned_set]
        self.boundary: List[int] = sorted(sphere + pinned)
        self.vertices: List[int] = list(ball.vertices)

        unknown_index = {v: i for i, v in enumerate(self.unknowns)}
        boundary_index = {v: i for i, v in enumerate(self.boundary)}
        rows, cols, data = [], [], []
        c_rows, c_cols = [], []
        degrees = np.zeros(len(self.unknowns))
        for i, x in enumerate(self.unknowns):
            degrees[i] = g.degree(x)
            rows.append(i)
            cols.append(i)
            data.append(float(g.degree(x)))
            for y in g.neighbors(x):
                if y in unknown_index:
                    rows.append(i)
                    cols.append(unknown_index[y])
                    data.append(-1.0)
                else:
                    c_rows.append(i)
                    c_cols.append(boundary_index[y])
        n, m = len(self.unknowns), len(self.boundary)
        self.matrix = sparse.csc_matrix((data, (rows, cols)), shape=(n, n))
        self.coupling = sparse.csr_matrix((np.ones(len(c_rows)), (c_rows, c_cols)), shape=(n, m))
        self.degrees = degrees

        self._position = {v: i for i, v in enumerate(self.vertices)}
        self._unknown_pos = np.array([self._position[v] for v in self.unknowns], dtype=int)
        self._boundary_pos = np.array([self._position[v] for v in self.boundary], dtype=int)

        self._lu = None
        if 0 < n <= settings.direct_solver_limit:
            self._lu = splu(self.matrix)
        logger.info(
            f"Dirichlet problem around {ball.center}: {n} unknowns, {m} boundary values, "
            f"{'direct' if self._lu is not None else 'iterative'} solver"
        )

    def boundary_vector(self, boundary: Mapping[int, float]) -> np.ndarray:
        """Prescribed values in ``self.boundary`` order.

        Raises:
            MissingNeighborValue: If a boundary vertex has no value
        """
        missing = [v for v in self.boundary if v not in boundary]
        if missing:
            raise MissingNeighborValue(f"no boundary value for vertex {missing[0]}", location=missing[0])
        return np.array([boundary[v] for v in self.boundary], dtype=float)

    def _solve_interior(self, rhs: np.ndarray) -> np.ndarray:
        if self._lu is not None:
            return self._lu.solve(rhs)
        columns = rhs if rhs.ndim == 2 else rhs[:, None]
        out = np.empty_like(columns)
        for j in range(columns.shape[1]):
            x, info = cg(self.matrix, columns[:, j], rtol=settings.solver_tolerance, atol=settings.solver_tolerance)
            if info != 0:
                logger.warning(f"Conjugate gradient stopped without converging (info={info})")
            out[:, j] = x
        return out if rhs.ndim == 2 else out[:, 0]

    def solve_array(self, data: np.ndarray) -> np.ndarray:
        """Solve for boundary data of shape (m,) or (m, k) in ``self.boundary`` order.

        Returns:
            Values in ``self.vertices`` order, shape (n,) or (n, k)
        """
        data = np.asarray(data, dtype=float)
        out = np.empty((len(self.vertices),) + data.shape[1:])
        out[self._boundary_pos] = data
        if self.unknowns:
            out[self._unknown_pos] = self._solve_interior(self.coupling @ data)
        return out

    def residual(self, values: np.ndarray) -> float:
        """max over the unknowns of |Lu(x)| for a full value vector."""
        if not self.unknowns:
            return 0.0
        interior = values[self._unknown_pos]
        fixed = values[self._boundary_pos]
        defect = self.matrix @ interior - self.coupling @ fixed
        return float(np.max(np.abs(defect / self.degrees)))

    def solve(self, boundary: Mapping[int, float]) -> HarmonicField:
        values = self.solve_array(self.boundary_vector(boundary))
        field = HarmonicField(
            ball=self.ball,
            boundary=self.boundary,
            values={v: float(values[i]) for i, v in enumerate(self.vertices)},
            residual=self.residual(values),
        )
        if field.residual > settings.solver_tolerance:
            logger.warning(f"Dirichlet residual {field.residual:.3e} exceeds {settings.solver_tolerance:.0e}")
        return field


def solve_dirichlet(
    obj: GraphLike,
    ball: BallSubgraph,
    boundary: Mapping[int, float],
    pinned: Optional[Iterable[int]] = None,
) -> HarmonicField:
    """Harmonic extension of ``boundary`` from ∂B_R into the ball.

    Args:
        obj: Map or plain graph
        ball: Domain, usually from ``ball`` or ``set_ball``
        boundary: Values on the sphere (and on ``pinned``), keyed by vertex id
        pinned: Additional interior vertices with prescribed values

    Returns:
        HarmonicField with Lu = 0 at every unknown

    Raises:
        EmptyBoundary: If the sphere is empty
        DisconnectedInterior: If the interior is not connected
        MissingNeighborValue: If a boundary vertex has no value
    """
    return DirichletProblem(obj, ball, pinned or ()).solve(boundary)
