from curvaplane.harmonic.models import (
    EscapeProfile,
    GradientEstimate,
    HarmonicField,
    HarnackReport,
    Lambda1Report,
    OscillationProfile,
    OscillationSweep,
    PoincareReport,
    ScalarField,
)
from curvaplane.harmonic.operators import gradient_norm_sq, laplacian
from curvaplane.harmonic.solver import DirichletProblem, solve_dirichlet
from curvaplane.harmonic.probes import (
    escape_probability,
    escape_profile,
    gradient_estimate_check,
    harnack_ratio,
    harnack_sweep,
    lambda1_check,
    mean_value_check,
    poincare_constant,
    poincare_optimum,
    poincare_ratio,
    poincare_report,
    random_boundary,
    sphere,
)
from curvaplane.harmonic.oscillation import oscillation_profile, oscillation_sweep

__all__ = [
    "DirichletProblem",
    "EscapeProfile",
    "GradientEstimate",
    "HarmonicField",
    "HarnackReport",
    "Lambda1Report",
    "OscillationProfile",
    "OscillationSweep",
    "PoincareReport",
    "ScalarField",
    "escape_probability",
    "escape_profile",
    "gradient_estimate_check",
    "gradient_norm_sq",
    "harnack_ratio",
    "harnack_sweep",
    "lambda1_check",
    "laplacian",
    "mean_value_check",
    "oscillation_profile",
    "oscillation_sweep",
    "poincare_constant",
    "poincare_optimum",
    "poincare_ratio",
    "poincare_report",
    "random_boundary",
    "sphere",
    "solve_dirichlet",
]
