from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from curvaplane.graph.models import BallSubgraph

ScalarField = Dict[int, float]


class HarmonicField(BaseModel):
    """Solution of a Dirichlet problem on a ball."""

    ball: BallSubgraph = Field(..., description="Domain B_R(p) or B_r(A)")
    boundary: List[int] = Field(..., description="Vertices whose values were prescribed")
    values: Dict[int, float] = Field(..., description="Value at every member of the ball")
    residual: float = Field(..., description="max |Lu(x)| over the unknowns")

    class Config:
        frozen = True

    def value(self, x: int) -> float:
        return self.values[x]

    def oscillation(self, vertices: List[int]) -> float:
        """max − min of the field over ``vertices`` (0 for an empty set)."""
        if not vertices:
            return 0.0
        samples = [self.values[v] for v in vertices]
        return max(samples) - min(samples)


class HarnackReport(BaseModel):
    center: int
    radius: int
    growth_factor: float
    outer_radius: int
    samples: int
    seed: int
    max_ratio: float = Field(..., description="Largest max/min of u over B_R seen over all samples")
    mean_ratio: float


class PoincareReport(BaseModel):
    center: int
    radius: int
    enlargement: float
    samples: int
    seed: int
    max_ratio: float = Field(..., description="Largest sampled LHS / (R²·RHS)")
    optimum: Optional[float] = Field(None, description="Exact supremum of LHS / (R²·RHS)")


class Lambda1Report(BaseModel):
    """First nonzero normalized-Laplacian eigenvalue against 1/(diam·vol)."""

    vertex_count: int
    diameter: int
    volume: int = Field(..., description="Σ d_x over the induced subgraph")
    lambda1: float
    bound: float
    ok: bool


class EscapeProfile(BaseModel):
    center: int
    radii: List[int]
    escape: List[float] = Field(..., description="P(walk from p hits ∂B_R before returning)")


class GradientEstimate(BaseModel):
    vertex: int
    radius: int
    lhs: float = Field(..., description="|∇u|(x)")
    rhs_scale: float = Field(..., description="osc over B_6r(x) of u divided by √r")


class OscillationProfile(BaseModel):
    """M(r) = osc of u over the sphere ∂B_r(A) around the big face."""

    sources: List[int]
    outer_radius: int
    radii: List[int]
    oscillations: List[float]
    decay_ratios: Dict[int, float] = Field(
        default_factory=dict, description="M(r) / M(9r) for every r with 9r among the radii"
    )


class OscillationSweep(BaseModel):
    sources: List[int]
    outer_radius: int
    samples: int
    seed: int
    radii: List[int]
    median_oscillations: List[float]
    median_decay_ratios: Dict[int, float] = Field(
        ..., description="Median of M(r) / M(9r) for every r with 9r ≤ the outer radius"
    )
