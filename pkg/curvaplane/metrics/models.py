from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class BallProfile(BaseModel):
    """|B_R(p)| = Σ_{x∈B_R(p)} d_x for R = 0..R_max."""

    center: int
    radii: List[int]
    volumes: List[int]
    vertex_counts: List[int] = Field(..., description="♯B_R(p), the number of vertices")
    complete_up_to: int = Field(..., description="Largest R whose ball is complete; -1 if none")

    def volume(self, radius: int) -> int:
        return self.volumes[radius]


class VolumeAxiomReport(BaseModel):
    center: int
    complete_up_to: int
    doubling_constant: float = Field(..., description="max |B_2R| / |B_R|")
    relative_constant: float = Field(..., description="max (|B_R| / |B_r|)·(r/R)²")
    growth_exponent: float = Field(..., description="Slope of log|B_R| against log R")
    fit_radii: List[int]
    quadratic_coefficient: float = Field(..., description="max |B_R| / R²")


class VertexCountBounds(BaseModel):
    """3·♯B_R ≤ |B_R| ≤ 6·♯B_R."""

    radius: int
    vertex_count: int
    volume: int
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


class ChordReport(BaseModel):
    """Chord between two boundary points of the unit-side regular n-gon."""

    n: int
    s: float
    t: float
    d: float = Field(..., description="Euclidean chord length")
    l1: float = Field(..., description="Boundary length from s forward to t")
    l2: float = Field(..., description="Boundary length from t forward to s")
    ratio: float = Field(..., description="d / min(l1, l2)")


class ChordSweep(BaseModel):
    n: int
    kind: Literal["adjacent", "all"]
    resolution: int
    sample_count: int
    min_ratio: float
    argmin: List[float] = Field(..., description="(s, t) attaining the minimum")


class BilipschitzReport(BaseModel):
    sample_count: int
    seed: int
    min_ratio: float
    max_ratio: float
    mean_ratio: float
    extremal_pair: Optional[List[int]] = None
