from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator


class Violation(BaseModel):
    """One structural problem found by ``validate``."""

    rule: str = Field(..., description="Rule id, e.g. interior-degree")
    location: str = Field(..., description="Offending element, e.g. vertex:5 or face:2")
    message: str = Field(..., description="Human readable explanation")


class ValidationReport(BaseModel):
    """Result of checking a map against the standing assumptions."""

    ok: bool
    violations: List[Violation] = Field(default_factory=list)
    orientable: bool
    interior_vertex_count: int
    boundary_vertex_count: int

    class Config:
        frozen = True
        json_schema_extra = {
            "example": {
                "ok": False,
                "violations": [
                    {"rule": "interior-degree", "location": "vertex:4", "message": "d_x = 2 < 3"}
                ],
                "orientable": True,
                "interior_vertex_count": 1,
                "boundary_vertex_count": 6,
            }
        }


class BallSubgraph(BaseModel):
    """Closed ball B_R around a vertex (or around a vertex set)."""

    center: int = Field(..., description="Center vertex; the smallest source for set balls")
    sources: List[int] = Field(..., description="Vertices at distance zero")
    radius: int = Field(..., ge=0)
    vertices: List[int] = Field(..., description="Sorted member ids")
    edges: List[Tuple[int, int]] = Field(..., description="Induced edges (u < v), sorted")
    distances: Dict[int, int] = Field(..., description="Distance of every member to the sources")
    complete: bool = Field(..., description="True iff no member lies on the window boundary")

    class Config:
        frozen = True

    @property
    def sphere(self) -> List[int]:
        """Members at distance exactly ``radius`` (the boundary of the ball)."""
        return [v for v in self.vertices if self.distances[v] == self.radius]

    @property
    def inner(self) -> List[int]:
        """Members at distance strictly less than ``radius``."""
        return [v for v in self.vertices if self.distances[v] < self.radius]

    def within(self, radius: int) -> List[int]:
        """Members at distance at most ``radius``."""
        return [v for v in self.vertices if self.distances[v] <= radius]


class GraphDocument(BaseModel):
    """The ``semiplanar-v1`` JSON document."""

    format: Literal["semiplanar-v1"] = "semiplanar-v1"
    vertex_count: int = Field(..., ge=0)
    faces: List[List[int]]
    coordinates: Optional[List[Tuple[float, float]]] = None
    metadata: Optional[Dict[str, Any]] = None

    @field_validator("faces")
    @classmethod
    def faces_are_nonnegative(cls, faces: List[List[int]]) -> List[List[int]]:
        for index, face in enumerate(faces):
            if any(v < 0 for v in face):
                raise ValueError(f"face {index} contains a negative vertex id")
        return faces
