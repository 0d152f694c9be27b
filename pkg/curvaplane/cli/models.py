from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from curvaplane.metrics.models import BallProfile, ChordSweep, VolumeAxiomReport


class RunConfig(BaseModel):
    """Resolved options of one CLI invocation."""

    command: str = Field(..., description="Subcommand, e.g. 'curvature' or 'harmonic escape'")
    input: Optional[str] = Field(None, description="semiplanar-v1 input file")
    output: Optional[str] = Field(None, description="Report path; standard output when omitted or '-'")
    spec: Optional[str] = Field(None, description="Tiling spec string for generate")
    format: Literal["json", "csv", "dot"] = "json"

    center: int = 0
    radius: Optional[int] = Field(None, ge=0)
    radii: Optional[List[int]] = None
    rmax: Optional[int] = Field(None, ge=0)
    seed: int = 0
    samples: Optional[int] = Field(None, ge=1)
    tolerance: float = Field(..., gt=0)
    growth_factor: Optional[float] = Field(None, gt=1)
    enlargement: Optional[float] = Field(None, ge=1)

    n: Optional[int] = Field(None, ge=3, description="Polygon degree for chord")
    s: Optional[float] = None
    t: Optional[float] = None
    resolution: Optional[int] = Field(None, ge=2)

    boundary: Optional[str] = Field(None, description="JSON file {vertex-id: value}")
    faces: Optional[str] = Field(None, description="Face ids for op-p, or 'all'")
    centers: Optional[List[int]] = None
    log_level: str = "INFO"

    @field_validator("radii")
    @classmethod
    def radii_are_nonnegative(cls, radii: Optional[List[int]]) -> Optional[List[int]]:
        if radii is not None and any(r < 0 for r in radii):
            raise ValueError("radii must be nonnegative")
        return radii


class ReportEnvelope(BaseModel):
    """What every JSON report file contains."""

    tool: str
    version: str
    command: str
    config: Dict[str, Any]
    input_sha256: Optional[str] = None
    report: Any

    class Config:
        json_schema_extra = {
            "example": {
                "tool": "curvaplane",
                "version": "1.0.0",
                "command": "curvature",
                "config": {"command": "curvature", "input": "g.json", "format": "json"},
                "input_sha256": "9f2c…",
                "report": {"total": "0/1"},
            }
        }


class VolumeCommandReport(BaseModel):
    profile: BallProfile
    axioms: Optional[VolumeAxiomReport] = Field(None, description="Null when fewer than four balls are complete")


class ChordSweepReport(BaseModel):
    adjacent: ChordSweep
    all_pairs: ChordSweep


class ErrorReport(BaseModel):
    """Body written to the report path when a command fails."""

    error: str = Field(..., description="Exception class name")
    detail: str = Field(..., description="Human readable message")
    location: Optional[str] = None
