from curvaplane.metrics.bilipschitz import bilipschitz_estimate, refinement_graph
from curvaplane.metrics.chords import adjacent_side_sweep, chord_ratio, chord_ratios, chord_sweep
from curvaplane.metrics.models import (
    BallProfile,
    BilipschitzReport,
    ChordReport,
    ChordSweep,
    VertexCountBounds,
    VolumeAxiomReport,
)
from curvaplane.metrics.volume import ball_volume_profile, profile_to_csv, vertex_count_bounds, volume_axioms

__all__ = [
    "BallProfile",
    "BilipschitzReport",
    "ChordReport",
    "ChordSweep",
    "VertexCountBounds",
    "VolumeAxiomReport",
    "adjacent_side_sweep",
    "ball_volume_profile",
    "bilipschitz_estimate",
    "chord_ratio",
    "chord_ratios",
    "chord_sweep",
    "profile_to_csv",
    "refinement_graph",
    "vertex_count_bounds",
    "volume_axioms",
]
