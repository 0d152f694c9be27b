"""Semiplanar graphs: exact combinatorial curvature, tilings and harmonic probes."""

from curvaplane.core.config import settings

__version__ = settings.app_version
