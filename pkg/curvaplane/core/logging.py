import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

from curvaplane.core.config import settings


def setup_logging(level: Optional[str] = None) -> None:
    """Configure package logging with JSON format on standard error.

    Standard output is left free for reports written with ``-o -``.

    Args:
        level: Log level name; defaults to ``settings.log_level``
    """
    level_value = getattr(logging, (level or settings.log_level).upper(), logging.INFO)

    logger = logging.getLogger()
    logger.setLevel(level_value)

    for handler in list(logger.handlers):
        if getattr(handler, "_curvaplane", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level_value)
    handler._curvaplane = True

    formatter = jsonlogger.JsonFormatter(
        "%(asctime)s %(name)s %(levelname)s %(message)s",
        timestamp=True
    )
    handler.setFormatter(formatter)

    logger.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance for a specific module.

    Args:
        name: Module name for the logger

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
