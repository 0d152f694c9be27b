"""Subcommand handlers.

Each handler takes the resolved RunConfig and returns the text to write to
the output path together with the exit code. Domain errors propagate to
``curvaplane.main.run`` which maps them to exit codes.
"""

import json
from pathlib import Path
from typing import Callable, Dict, Optional

from pydantic import BaseModel

from curvaplane.cli.models import ChordSweepReport, ReportEnvelope, RunConfig, VolumeCommandReport
from curvaplane.core.config import settings
from curvaplane.core.errors import FormatError, UsageError
from curvaplane.core.files import sha256_of_file
from curvaplane.core.logging import get_logger
from curvaplane.curvature import curvature_report, large_face_structure, report_to_csv
from curvaplane.graph import HalfEdgeMap, ball, dumps_map, read_map, to_dot, validate
from curvaplane.harmonic import (
    escape_profile,
    harnack_sweep,
    lambda1_check,
    oscillation_profile,
    oscillation_sweep,
    poincare_report,
    random_boundary,
    solve_dirichlet,
)
from curvaplane.metrics import (
    adjacent_side_sweep,
    ball_volume_profile,
    bilipschitz_estimate,
    chord_ratio,
    chord_sweep,
    profile_to_csv,
    volume_axioms,
)
from curvaplane.metrics.volume import MIN_COMPLETE_RADIUS
from curvaplane.tilings import generate, op_P, op_P_inv, parse_tiling_spec

logger = get_logger(__name__)

DEFAULT_RADIUS = 10
DEFAULT_SAMPLES = 100


class CommandResult(BaseModel):
    body: str
    exit_code: int = 0


Handler = Callable[[RunConfig], CommandResult]


def envelope(config: RunConfig, report) -> str:
    """Wrap a report with the tool version, the resolved config and the input hash."""
    payload = report.model_dump(mode="json") if isinstance(report, BaseModel) else report
    document = ReportEnvelope(
        tool=settings.app_name,
        version=settings.app_version,
        command=config.command,
        config=config.model_dump(mode="json", exclude_none=True),
        input_sha256=sha256_of_file(config.input) if config.input else None,
        report=payload,
    )
    return document.model_dump_json(indent=2) + "\n"


def _require(config: RunConfig, name: str):
    value = getattr(config, name)
    if value is None:
        raise UsageError(f"{config.command} needs --{name.replace('_', '-')}")
    return value


def _load(config: RunConfig) -> HalfEdgeMap:
    return read_map(_require(config, "input"))


def _load_boundary(path: str) -> Dict[int, float]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        return {int(k): float(v) for k, v in raw.items()}
    except (OSError, ValueError, AttributeError) as e:
        raise FormatError(f"cannot read boundary data from {path}: {e}") from e


def _map_output(config: RunConfig, hmap: HalfEdgeMap) -> CommandResult:
    if config.format == "dot":
        return CommandResult(body=to_dot(hmap))
    if config.format == "csv":
        raise UsageError("maps are written as json or dot")
    return CommandResult(body=dumps_map(hmap))


def handle_generate(config: RunConfig) -> CommandResult:
    """Generate a tiling window from a spec string.

    Writes the semiplanar-v1 document itself (or DOT with ``--format dot``).
    """
    spec = parse_tiling_spec(_require(config, "spec"), radius=config.radius or DEFAULT_RADIUS)
    hmap = generate(spec)
    logger.info(f"Generated {hmap!r}")
    return _map_output(config, hmap)


def handle_validate(config: RunConfig) -> CommandResult:
    report = validate(_load(config))
    if not report.ok:
        logger.warning(f"Validation found {len(report.violations)} violations")
    return CommandResult(body=envelope(config, report), exit_code=0 if report.ok else 1)


def handle_curvature(config: RunConfig) -> CommandResult:
    """Exact curvature of every interior vertex.

    A window that fails validation yields the validation report and exit 1;
    so does a nonnegatively curved window with a vertex of degree above 6.
    """
    hmap = _load(config)
    validation = validate(hmap)
    if not validation.ok:
        logger.warning(f"Refusing curvature on an invalid window: {len(validation.violations)} violations")
        return CommandResult(body=envelope(config, {"validation": validation.model_dump(mode="json")}), exit_code=1)

    report = curvature_report(hmap)
    exit_code = 1 if report.degree_bound_violations else 0
    if config.format == "csv":
        return CommandResult(body=report_to_csv(report), exit_code=exit_code)
    return CommandResult(body=envelope(config, report), exit_code=exit_code)


def handle_layers(config: RunConfig) -> CommandResult:
    decomposition = large_face_structure(_load(config))
    if decomposition is None:
        logger.info("No face of degree at least 43")
        return CommandResult(body=envelope(config, {"large_face": None}))
    return CommandResult(body=envelope(config, {"large_face": decomposition.model_dump(mode="json")}))


def handle_volume(config: RunConfig) -> CommandResult:
    hmap = _load(config)
    profile = ball_volume_profile(hmap, config.center, config.rmax if config.rmax is not None else DEFAULT_RADIUS)
    if config.format == "csv":
        return CommandResult(body=profile_to_csv(profile))
    axioms = volume_axioms(profile) if profile.complete_up_to >= MIN_COMPLETE_RADIUS else None
    return CommandResult(body=envelope(config, VolumeCommandReport(profile=profile, axioms=axioms)))


def handle_chord(config: RunConfig) -> CommandResult:
    """One chord with ``--s`` and ``--t``; minimum-ratio sweeps otherwise."""
    n = _require(config, "n")
    if config.s is not None or config.t is not None:
        return CommandResult(body=envelope(config, chord_ratio(n, _require(config, "s"), _require(config, "t"))))
    report = ChordSweepReport(
        adjacent=adjacent_side_sweep(n, config.resolution or 32),
        all_pairs=chord_sweep(n, config.resolution or 4),
    )
    return CommandResult(body=envelope(config, report))


def handle_bilipschitz(config: RunConfig) -> CommandResult:
    report = bilipschitz_estimate(_load(config), config.samples or DEFAULT_SAMPLES, seed=config.seed)
    return CommandResult(body=envelope(config, report))


def handle_harmonic_solve(config: RunConfig) -> CommandResult:
    """Harmonic extension into B_R(center) of file data, or of seeded Gaussian data."""
    hmap = _load(config)
    domain = ball(hmap, config.center, _require(config, "radius"))
    if config.boundary:
        data = _load_boundary(config.boundary)
    else:
        data = random_boundary(domain.sphere, config.seed)
    field = solve_dirichlet(hmap, domain, data)
    return CommandResult(body=envelope(config, field))


def handle_harmonic_harnack(config: RunConfig) -> CommandResult:
    report = harnack_sweep(
        _load(config),
        config.center,
        _require(config, "radius"),
        config.samples or DEFAULT_SAMPLES,
        seed=config.seed,
        growth_factor=config.growth_factor,
    )
    return CommandResult(body=envelope(config, report))


def handle_harmonic_poincare(config: RunConfig) -> CommandResult:
    report = poincare_report(
        _load(config),
        config.center,
        _require(config, "radius"),
        config.samples or DEFAULT_SAMPLES,
        seed=config.seed,
        enlargement=config.enlargement,
    )
    return CommandResult(body=envelope(config, report))


def handle_harmonic_lambda1(config: RunConfig) -> CommandResult:
    hmap = _load(config)
    report = lambda1_check(hmap, ball(hmap, config.center, _require(config, "radius")))
    return CommandResult(body=envelope(config, report), exit_code=0 if report.ok else 1)


def handle_harmonic_escape(config: RunConfig) -> CommandResult:
    radii = config.radii or [_require(config, "radius")]
    return CommandResult(body=envelope(config, escape_profile(_load(config), config.center, radii)))


def handle_harmonic_oscillation(config: RunConfig) -> CommandResult:
    """M(r) around the big face: one profile for ``--boundary`` data, seeded medians otherwise."""
    hmap = _load(config)
    layers = large_face_structure(hmap)
    if layers is None:
        raise UsageError("oscillation needs a window with a face of degree at least 43")
    radii = _require(config, "radii")
    outer: Optional[int] = config.rmax
    if config.boundary:
        report = oscillation_profile(hmap, layers, _load_boundary(config.boundary), radii, outer)
    else:
        report = oscillation_sweep(
            hmap, layers, radii, outer if outer is not None else max(radii), config.samples or 50, seed=config.seed
        )
    return CommandResult(body=envelope(config, report))


def handle_op_p(config: RunConfig) -> CommandResult:
    hmap = _load(config)
    selection = _require(config, "faces")
    if selection.strip().lower() == "all":
        faces = [f for f in range(len(hmap.faces)) if hmap.face_degree(f) == 6]
    else:
        try:
            faces = [int(item) for item in selection.split(",") if item.strip()]
        except ValueError as e:
            raise UsageError(f"--faces expects 'all' or comma separated face ids: {e}") from e
    return _map_output(config, op_P(hmap, faces))


def handle_op_pinv(config: RunConfig) -> CommandResult:
    return _map_output(config, op_P_inv(_load(config), config.centers))


COMMANDS: Dict[str, Handler] = {
    "generate": handle_generate,
    "validate": handle_validate,
    "curvature": handle_curvature,
    "layers": handle_layers,
    "volume": handle_volume,
    "chord": handle_chord,
    "bilipschitz": handle_bilipschitz,
    "harmonic solve": handle_harmonic_solve,
    "harmonic harnack": handle_harmonic_harnack,
    "harmonic poincare": handle_harmonic_poincare,
    "harmonic lambda1": handle_harmonic_lambda1,
    "harmonic escape": handle_harmonic_escape,
    "harmonic oscillation": handle_harmonic_oscillation,
    "op-p": handle_op_p,
    "op-pinv": handle_op_pinv,
}
