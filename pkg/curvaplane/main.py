import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from curvaplane.cli.commands import COMMANDS
from curvaplane.cli.models import ErrorReport, RunConfig
from curvaplane.core.config import settings
from curvaplane.core.errors import CurvaplaneError, UsageError
from curvaplane.core.files import write_text_atomic
from curvaplane.core.logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _common(parser: argparse.ArgumentParser, needs_input: bool = True) -> None:
    if needs_input:
        parser.add_argument("-i", "--input", help="semiplanar-v1 input file")
    parser.add_argument("-o", "--out", "--output", dest="output", help="report path (default: standard output)")
    parser.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    parser.add_argument("--log-level", default=settings.log_level)


def _ball_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--center", type=int, default=0)
    parser.add_argument("--radius", type=int)
    parser.add_argument("--seed", type=int, default=settings.default_seed)
    parser.add_argument("--samples", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Semiplanar graphs: exact curvature, tilings and harmonic probes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a tiling window")
    p.add_argument("spec", help="e.g. archimedean:4.8.8, largeface:k=50,ring=44k,depth=6")
    p.add_argument("--radius", type=int)
    _common(p, needs_input=False)

    for name, text in (("validate", "check the standing assumptions"), ("layers", "peel layers around a big face")):
        _common(sub.add_parser(name, help=text))

    p = sub.add_parser("curvature", help="exact curvature report")
    _common(p)

    p = sub.add_parser("volume", help="ball volume profile and volume axioms")
    _common(p)
    p.add_argument("--center", type=int, default=0)
    p.add_argument("--rmax", type=int)

    p = sub.add_parser("chord", help="chord ratios of the regular n-gon")
    _common(p, needs_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=float)
    p.add_argument("--t", type=float)
    p.add_argument("--resolution", type=int)

    p = sub.add_parser("bilipschitz", help="graph against surface distance on random pairs")
    _common(p)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=settings.default_seed)

    harmonic = sub.add_parser("harmonic", help="Dirichlet solver and analytic probes")
    hsub = harmonic.add_subparsers(dest="probe", required=True)
    for name in ("solve", "harnack", "poincare", "lambda1", "escape", "oscillation"):
        p = hsub.add_parser(name)
        _common(p)
        _ball_options(p)
        p.add_argument("--tolerance", type=float, default=settings.solver_tolerance)
        if name in ("solve", "oscillation"):
            p.add_argument("--boundary", help="JSON file {vertex-id: value}")
        if name in ("escape", "oscillation"):
            p.add_argument("--radii", type=_int_list)
        if name == "oscillation":
            p.add_argument("--rmax", type=int)
        if name == "harnack":
            p.add_argument("--growth-factor", type=float, default=settings.harnack_growth)
        if name == "poincare":
            p.add_argument("--enlargement", type=float, default=settings.poincare_enlargement)

    p = sub.add_parser("op-p", help="replace hexagons by triangle stars")
    _common(p)
    p.add_argument("--faces", required=True, help="'all' or comma separated face ids")

    p = sub.add_parser("op-pinv", help="merge triangle stars back into hexagons")
    _common(p)
    p.add_argument("--centers", type=_int_list)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None and k not in ("probe",)}
    command = args.command if args.command != "harmonic" else f"harmonic {args.probe}"
    values["command"] = command
    values.setdefault("tolerance", settings.solver_tolerance)
    return RunConfig(**values)


def _emit(config: RunConfig, body: str) -> None:
    if config.output and config.output != "-":
        write_text_atomic(config.output, body)
    else:
        sys.stdout.write(body)


def _fail(config: Optional[RunConfig], error: CurvaplaneError) -> None:
    print(f"error: {error.message}", file=sys.stderr)
    if config is not None and config.output and config.output != "-":
        report = ErrorReport(
            error=type(error).__name__,
            detail=error.message,
            location=None if error.location is None else str(error.location),
        )
        write_text_atomic(config.output, report.model_dump_json(indent=2) + "\n")


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit code.

    0 on success, 1 on validation findings or domain errors, 2 on usage errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level)
    try:
        config = _config(args)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

    previous_tolerance = settings.solver_tolerance
    settings.solver_tolerance = config.tolerance
    logger.info(f"Running {config.command}")
    try:
        result = COMMANDS[config.command](config)
    except UsageError as e:
        _fail(config, e)
        return EXIT_USAGE
    except CurvaplaneError as e:
        _fail(config, e)
        return EXIT_FINDINGS
    finally:
        settings.solver_tolerance = previous_tolerance

    _emit(config, result.body)
    logger.info(f"{config.command} finished with exit code {result.exit_code}")
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
