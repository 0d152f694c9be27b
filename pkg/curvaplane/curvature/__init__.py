from curvaplane.curvature.models import (
    BallCurvatureSum,
    CurvatureReport,
    FaceLayer,
    LayerDecomposition,
    Pattern,
    PatternClass,
    PositiveRow,
    VertexCurvature,
)
from curvaplane.curvature.patterns import (
    POSITIVE_TABLE,
    VANISHING_PATTERNS,
    classify_pattern,
    enumerate_patterns,
    pattern_curvature,
)
from curvaplane.curvature.report import (
    curvature,
    curvature_report,
    gauss_bonnet_profile,
    report_to_csv,
    report_to_json,
    vertex_pattern,
)
from curvaplane.curvature.layers import large_face_structure

__all__ = [
    "BallCurvatureSum",
    "CurvatureReport",
    "FaceLayer",
    "LayerDecomposition",
    "Pattern",
    "PatternClass",
    "PositiveRow",
    "VertexCurvature",
    "POSITIVE_TABLE",
    "VANISHING_PATTERNS",
    "classify_pattern",
    "enumerate_patterns",
    "pattern_curvature",
    "curvature",
    "curvature_report",
    "gauss_bonnet_profile",
    "report_to_csv",
    "report_to_json",
    "vertex_pattern",
    "large_face_structure",
]
