from curvaplane.cli.commands import COMMANDS, CommandResult, envelope
from curvaplane.cli.models import ReportEnvelope, RunConfig

__all__ = ["COMMANDS", "CommandResult", "ReportEnvelope", "RunConfig", "envelope"]
