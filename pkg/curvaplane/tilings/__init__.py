from curvaplane.tilings.archimedean import TEMPLATES, parse_code, planar_window
from curvaplane.tilings.generators import AVAILABLE_GENERATORS, TilingGenerator, generate, parse_tiling_spec
from curvaplane.tilings.large_face import large_face_window
from curvaplane.tilings.models import (
    ARCHIMEDEAN_CODES,
    ArchimedeanSpec,
    CylinderSpec,
    GlideSpec,
    LargeFaceSpec,
    MonohedralSpec,
    ProjectiveSpec,
    TilingSpec,
)
from curvaplane.tilings.operations import op_P, op_P_inv
from curvaplane.tilings.quotients import cylinder_window, projective_window
from curvaplane.tilings.trees import regular_tree

__all__ = [
    "ARCHIMEDEAN_CODES",
    "AVAILABLE_GENERATORS",
    "TEMPLATES",
    "ArchimedeanSpec",
    "CylinderSpec",
    "GlideSpec",
    "LargeFaceSpec",
    "MonohedralSpec",
    "ProjectiveSpec",
    "TilingGenerator",
    "TilingSpec",
    "cylinder_window",
    "generate",
    "large_face_window",
    "op_P",
    "op_P_inv",
    "parse_code",
    "parse_tiling_spec",
    "planar_window",
    "projective_window",
    "regular_tree",
]
