from typing import Annotated, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator

ARCHIMEDEAN_CODES: Tuple[str, ...] = (
    "3^6",
    "3^4.6",
    "3^3.4^2",
    "3^2.4.3.4",
    "3.4.6.4",
    "3.6.3.6",
    "3.12^2",
    "4^4",
    "4.6.12",
    "4.8^2",
    "6^3",
)

RING_PATTERNS = {"44k": (4, 4), "333k": (3, 3, 3), "36k": (3, 6)}

BIG_FACE_MIN_DEGREE = 43
MIN_QUOTIENT_SIZE = 3


class ArchimedeanSpec(BaseModel):
    family: Literal["archimedean"] = "archimedean"
    code: str = Field(..., description="Canonical code, e.g. 3.4.6.4 or 4.8^2")
    window_radius: int = Field(10, ge=1)

    @field_validator("code")
    @classmethod
    def code_is_known(cls, code: str) -> str:
        if code not in ARCHIMEDEAN_CODES:
            raise ValueError(f"unknown Archimedean code {code!r}")
        return code


class MonohedralSpec(BaseModel):
    family: Literal["monohedral"] = "monohedral"
    n: Literal[3, 4, 6]
    window_radius: int = Field(10, ge=1)


class LargeFaceSpec(BaseModel):
    family: Literal["large_face"] = "large_face"
    k: int = Field(..., ge=BIG_FACE_MIN_DEGREE, description="Degree of the big face σ")
    ring: Literal["44k", "333k", "36k"] = Field("44k", description="Pattern of the vertices of σ")
    depth: int = Field(..., ge=1, description="Number of layers around σ")

    @property
    def ring_pattern(self) -> Tuple[int, ...]:
        return RING_PATTERNS[self.ring] + (self.k,)


class CylinderSpec(BaseModel):
    family: Literal["cylinder"] = "cylinder"
    base: str
    circumference: int = Field(..., description="Lattice periods around the tube")
    length: int = Field(..., ge=1, description="Extent across the tube axis, in edge lengths")


class ProjectiveSpec(BaseModel):
    family: Literal["projective"] = "projective"
    base: str
    width: int = Field(..., description="Mirror periods covered by the glide translation")
    length: int = Field(..., ge=1, description="Extent across the glide axis, in edge lengths")


TilingSpec = Annotated[
    Union[ArchimedeanSpec, MonohedralSpec, LargeFaceSpec, CylinderSpec, ProjectiveSpec],
    Field(discriminator="family"),
]


class GlideSpec(BaseModel):
    """Identification used for a cylinder or projective quotient.

    Points are written in axis coordinates (s along ``direction`` from
    ``origin``, y across it). The identification is (s, y) ↦ (s + a, ±y)
    with a = ``shift`` · ``period``; ``flip`` selects the sign.
    """

    origin: Tuple[float, float]
    direction: Tuple[float, float]
    period: float = Field(..., gt=0)
    shift: int = Field(..., ge=1, description="Integer rail offset in periods")
    flip: bool

    @property
    def translation(self) -> float:
        return self.shift * self.period


class Tile(BaseModel):
    """A regular unit-side polygon placed in a fundamental domain."""

    n: int = Field(..., ge=3)
    center: Tuple[float, float]
    phase: float = Field(..., description="Angle of the first vertex, degrees")


class TilingTemplate(BaseModel):
    """Lattice and fundamental-domain tiles of a periodic tiling."""

    code: str
    vertex_cycle: Tuple[int, ...]
    lattice: Tuple[Tuple[float, float], Tuple[float, float]]
    tiles: List[Tile]
    mirror: Optional[Tuple[Tuple[float, float], Tuple[float, float], float]] = Field(
        None, description="(origin, direction, period) of a mirror line, None for chiral tilings"
    )

    class Config:
        frozen = True

    @property
    def pattern(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertex_cycle))
