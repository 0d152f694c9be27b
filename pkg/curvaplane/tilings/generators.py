from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from pydantic import TypeAdapter, ValidationError

from curvaplane.core.errors import InvalidSpec
from curvaplane.core.logging import get_logger
from curvaplane.graph.halfedge import HalfEdgeMap
from curvaplane.tilings.archimedean import MONOHEDRAL_CODES, parse_code, planar_window
from curvaplane.tilings.large_face import large_face_window
from curvaplane.tilings.models import (
    ArchimedeanSpec,
    CylinderSpec,
    LargeFaceSpec,
    MonohedralSpec,
    ProjectiveSpec,
    TilingSpec,
)
from curvaplane.tilings.quotients import cylinder_window, projective_window

logger = get_logger(__name__)

_SPEC_ADAPTER = TypeAdapter(TilingSpec)

_RING_ALIASES = {
    "44k": "44k", "4.4.k": "44k",
    "333k": "333k", "3.3.3.k": "333k",
    "36k": "36k", "3.6.k": "36k",
}


class TilingGenerator(ABC):
    """Abstract base class for tiling window generators."""

    @property
    @abstractmethod
    def family(self) -> str:
        """Family name used in spec strings."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    def generate(self, spec) -> HalfEdgeMap:
        """Build the window described by ``spec``.

        Args:
            spec: The family's spec model

        Returns:
            Generated window
        """
        pass


class ArchimedeanGenerator(TilingGenerator):

    @property
    def family(self) -> str:
        return "archimedean"

    @property
    def description(self) -> str:
        return "Window of one of the eleven vertex-transitive tilings by regular polygons."

    def generate(self, spec: ArchimedeanSpec) -> HalfEdgeMap:
        return planar_window(spec.code, spec.window_radius)


class MonohedralGenerator(TilingGenerator):

    @property
    def family(self) -> str:
        return "monohedral"

    @property
    def description(self) -> str:
        return "Window of the tiling by triangles, squares or hexagons."

    def generate(self, spec: MonohedralSpec) -> HalfEdgeMap:
        return planar_window(MONOHEDRAL_CODES[spec.n], spec.window_radius, family="monohedral")


class LargeFaceGenerator(TilingGenerator):

    @property
    def family(self) -> str:
        return "large_face"

    @property
    def description(self) -> str:
        return "A face of degree k >= 43 ringed by depth layers of squares or triangles."

    def generate(self, spec: LargeFaceSpec) -> HalfEdgeMap:
        return large_face_window(spec)


class CylinderGenerator(TilingGenerator):

    @property
    def family(self) -> str:
        return "cylinder"

    @property
    def description(self) -> str:
        return "Tube window: a planar tiling modulo a lattice translation."

    def generate(self, spec: CylinderSpec) -> HalfEdgeMap:
        return cylinder_window(spec.base, spec.circumference, spec.length)


class ProjectiveGenerator(TilingGenerator):

    @property
    def family(self) -> str:
        return "projective"

    @property
    def description(self) -> str:
        return "Möbius window: a planar tiling modulo a glide reflection."

    def generate(self, spec: ProjectiveSpec) -> HalfEdgeMap:
        return projective_window(spec.base, spec.width, spec.length)


AVAILABLE_GENERATORS: List[TilingGenerator] = [
    ArchimedeanGenerator(),
    MonohedralGenerator(),
    LargeFaceGenerator(),
    CylinderGenerator(),
    ProjectiveGenerator(),
]

_BY_FAMILY: Dict[str, TilingGenerator] = {g.family: g for g in AVAILABLE_GENERATORS}


def generate(spec: TilingSpec) -> HalfEdgeMap:
    """Generate the window for a validated spec.

    Raises:
        InvalidSpec: If the spec's family has no generator
        QuotientTooNarrow: For quotients that would not be simple
    """
    generator = _BY_FAMILY.get(spec.family)
    if generator is None:
        raise InvalidSpec(f"no generator for family {spec.family!r}")
    logger.info(f"Generating {spec.family} window from {spec.model_dump()}")
    return generator.generate(spec)


def _options(body: str) -> Dict[str, str]:
    options = {}
    for item in filter(None, body.split(",")):
        if "=" not in item:
            raise InvalidSpec(f"expected key=value, got {item!r}")
        key, value = item.split("=", 1)
        options[key.strip().lower()] = value.strip()
    return options


def parse_tiling_spec(text: str, radius: Optional[int] = None) -> TilingSpec:
    """Parse a spec string such as ``archimedean:3.4.6.4`` or ``largeface:k=50,ring=44k,depth=6``.

    Args:
        text: Family name, a colon, and the family's parameters
        radius: Window radius for the planar families

    Returns:
        The validated spec model

    Raises:
        InvalidSpec: If the string or its parameters are invalid
    """
    family, _, body = text.strip().partition(":")
    family = family.strip().lower().replace("-", "").replace("_", "")
    body = body.strip()
    try:
        if family == "archimedean":
            raw = {"family": "archimedean", "code": parse_code(body)}
        elif family == "monohedral":
            raw = {"family": "monohedral", "n": int(body)}
        elif family == "largeface":
            options = _options(body)
            ring = options.get("ring", "44k").lower()
            if ring not in _RING_ALIASES:
                raise InvalidSpec(f"unknown ring pattern {ring!r}")
            raw = {
                "family": "large_face",
                "k": int(options["k"]),
                "ring": _RING_ALIASES[ring],
                "depth": int(options["depth"]),
            }
        elif family == "cylinder":
            options = _options(body)
            raw = {
                "family": "cylinder",
                "base": parse_code(options["base"]),
                "circumference": int(options["circumference"]),
                "length": int(options["length"]),
            }
        elif family == "projective":
            options = _options(body)
            raw = {
                "family": "projective",
                "base": parse_code(options["base"]),
                "width": int(options["width"]),
                "length": int(options["length"]),
            }
        else:
            raise InvalidSpec(f"unknown tiling family {family!r}")
    except KeyError as e:
        raise InvalidSpec(f"missing parameter {e.args[0]!r} in {text!r}") from e
    except ValueError as e:
        raise InvalidSpec(f"bad number in {text!r}: {e}") from e

    if radius is not None and raw["family"] in ("archimedean", "monohedral"):
        raw["window_radius"] = radius
    try:
        return _SPEC_ADAPTER.validate_python(raw)
    except ValidationError as e:
        raise InvalidSpec(f"invalid spec {text!r}: {e.errors()[0]['msg']}") from e
