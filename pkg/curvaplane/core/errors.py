"""Exception hierarchy shared by every curvaplane module."""

from typing import Any, Optional


class CurvaplaneError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message: str, location: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.location = location


class UsageError(CurvaplaneError):
    """Errors caused by caller input rather than by the data itself."""


class InvalidParameter(UsageError):
    """A radius, count or other numeric argument outside its range."""


# graph_core

class EdgeOveruse(CurvaplaneError):
    """An undirected edge is traversed by more than two face sides."""


class LoopEdge(CurvaplaneError):
    """A face walk joins a vertex to itself."""


class DuplicateEdge(CurvaplaneError):
    """A face walk traverses the same undirected edge twice."""


class DegenerateFace(CurvaplaneError):
    """A face has fewer than three vertices or repeats a vertex."""


class UnknownVertex(UsageError):
    """A vertex id outside the map."""


class FormatError(UsageError):
    """A graph document that is not valid semiplanar-v1."""


# curvature

class BoundaryVertex(CurvaplaneError):
    """Curvature requested at a window-boundary vertex."""


class NoInteriorVertices(CurvaplaneError):
    """A window without any interior vertex."""


class MultipleBigFaces(CurvaplaneError):
    """More than one face of degree at least 43."""


class MixedLayer(CurvaplaneError):
    """A peeled layer mixes face types."""


# tilings

class InvalidSpec(UsageError):
    """A tiling spec that violates its invariants."""


class QuotientTooNarrow(CurvaplaneError):
    """A quotient whose identification creates loops or multi-edges."""


class NotAHexagon(CurvaplaneError):
    """A face selected for the P operation is not a hexagon."""


# metrics

class WindowTooSmall(CurvaplaneError):
    """Too few complete balls for the requested statistic."""


class InvalidPosition(UsageError):
    """Boundary positions outside [0, n) or coincident."""


class NoEmbedding(CurvaplaneError):
    """A map without coordinate hints."""


# harmonic

class MissingNeighborValue(CurvaplaneError):
    """A field lacks a value at a vertex or one of its neighbors."""


class DisconnectedInterior(CurvaplaneError):
    """The interior of a Dirichlet domain is not connected."""


class EmptyBoundary(CurvaplaneError):
    """A Dirichlet domain without boundary vertices."""


class NonpositiveBoundary(CurvaplaneError):
    """Harnack boundary data with a value that is not positive."""


class ZeroField(CurvaplaneError):
    """A field that vanishes identically on the ball."""


class Disconnected(CurvaplaneError):
    """An induced subgraph that is not connected."""


class TooSmall(CurvaplaneError):
    """An induced subgraph with fewer than two vertices."""


class WindowTooShallow(CurvaplaneError):
    """A large-face window not deep enough for the requested radii."""
