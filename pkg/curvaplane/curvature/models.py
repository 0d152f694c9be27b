from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, PrivateAttr, field_validator

from curvaplane.core.rational import Rational

Sign = Literal["positive", "zero", "negative"]


class Pattern(BaseModel):
    """Sorted face-degree vector at a vertex."""

    degrees: Tuple[int, ...]

    class Config:
        frozen = True

    @field_validator("degrees")
    @classmethod
    def check_degrees(cls, degrees: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(degrees) < 3:
            raise ValueError(f"a pattern needs at least 3 faces, got {len(degrees)}")
        if any(d < 3 for d in degrees):
            raise ValueError(f"face degrees must be >= 3: {degrees}")
        if list(degrees) != sorted(degrees):
            raise ValueError(f"pattern must be nondecreasing: {degrees}")
        return degrees

    @classmethod
    def of(cls, degrees: Sequence[int]) -> "Pattern":
        return cls(degrees=tuple(sorted(int(d) for d in degrees)))

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.degrees) + ")"


class PositiveRow(BaseModel):
    """One row of the positive-curvature pattern table: prefix + (k,)."""

    prefix: Tuple[int, ...]
    k_min: int
    k_max: Optional[int] = None
    constant: Optional[Rational] = Field(None, description="Closed form Φ = constant + 1/k")
    bound: Optional[Rational] = Field(None, description="Printed lower bound over the k-range")

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def family(self) -> str:
        return "(" + ",".join(str(d) for d in self.prefix) + ",k)"

    @property
    def label(self) -> str:
        upper = f"<={self.k_max}" if self.k_max is not None else ""
        return f"{self.family}, {self.k_min}<=k{upper}"

    def contains(self, degrees: Sequence[int]) -> bool:
        if tuple(degrees[:-1]) != self.prefix:
            return False
        k = degrees[-1]
        return k >= self.k_min and (self.k_max is None or k <= self.k_max)

    def closed_form(self, k: int) -> Optional[Fraction]:
        if self.constant is None:
            return None
        return self.constant + Fraction(1, k)


class PatternClass(BaseModel):
    """Sign of Φ for a pattern and its place in the classification tables."""

    sign: Sign
    phi: Rational
    table_row: Optional[PositiveRow] = None
    certified_bound: Optional[Rational] = None
    vanishing_listed: bool = False

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class VertexCurvature(BaseModel):
    vertex: int
    degree: int
    pattern: Tuple[int, ...]
    phi: Rational
    sign: Sign
    table_row: Optional[str] = None

    class Config:
        arbitrary_types_allowed = True


class CurvatureReport(BaseModel):
    """Exact curvature of every interior vertex of a window."""

    vertices: List[VertexCurvature]
    max_face_degree: int = Field(..., description="D_G over the window's faces")
    total: Rational = Field(..., description="Exact sum of Φ over interior vertices")
    nonnegative_everywhere: bool
    gauss_bonnet_ok: bool = Field(..., description="total <= 1")
    degree_bound_violations: List[int] = Field(
        default_factory=list,
        description="Interior vertices with d_x > 6 although every Φ >= 0",
    )
    euler_characteristic: int
    closed: bool = Field(..., description="True when the window has no boundary")
    gauss_bonnet_exact: Optional[bool] = Field(
        None, description="For closed maps: total equals the Euler characteristic"
    )

    class Config:
        arbitrary_types_allowed = True

    def phi(self, vertex: int) -> Fraction:
        for entry in self.vertices:
            if entry.vertex == vertex:
                return entry.phi
        raise KeyError(vertex)


class BallCurvatureSum(BaseModel):
    radius: int
    total: Rational
    vertex_count: int

    class Config:
        arbitrary_types_allowed = True


class FaceLayer(BaseModel):
    index: int = Field(..., ge=1)
    kind: Literal["triangle", "square"]
    faces: List[int]


class LayerDecomposition(BaseModel):
    """The big face σ and the layers L_1, L_2, … peeled around it.

    Face ids refer to ``source_map`` which is the P-image of the input when
    ``hexagon_preimage`` is set and the input itself otherwise.
    """

    big_face: int
    big_face_degree: int
    big_face_vertices: List[int]
    ring_pattern: Optional[Tuple[int, ...]] = None
    layers: List[FaceLayer]
    covered_vertices: List[int]
    hexagon_preimage: bool = False

    _source_map: object = PrivateAttr(default=None)

    @property
    def source_map(self):
        return self._source_map

    @property
    def depth(self) -> int:
        return len(self.layers)
