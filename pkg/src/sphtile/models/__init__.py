"""Tiling models package."""

from .angle import AngleValue, HALF_PI, PI, TWO_PI, angle_from_document, format_angle
from .tile_models import (
    ANGLE_LABELS,
    EDGE_LABELS,
    QuadClass,
    QuadSpec,
    SolveReport,
    VertexCombo,
    AVCSet,
    DegreeHistogram,
)
from .complex_models import (
    Corner,
    Tile,
    TilingComplex,
    GeometricRealization,
    FamilyId,
    CensusEntry,
)
from .report_models import CheckResult, VerificationReport, TilingDocument, SCHEMA_VERSION

__all__ = [
    "AngleValue",
    "HALF_PI",
    "PI",
    "TWO_PI",
    "angle_from_document",
    "format_angle",
    "ANGLE_LABELS",
    "EDGE_LABELS",
    "QuadClass",
    "QuadSpec",
    "SolveReport",
    "VertexCombo",
    "AVCSet",
    "DegreeHistogram",
    "Corner",
    "Tile",
    "TilingComplex",
    "GeometricRealization",
    "FamilyId",
    "CensusEntry",
    "CheckResult",
    "VerificationReport",
    "TilingDocument",
    "SCHEMA_VERSION",
]
