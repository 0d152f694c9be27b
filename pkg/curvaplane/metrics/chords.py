"""Chords of the unit-side regular n-gon against its boundary paths.

A boundary position s ∈ [0, n) is arc length along the boundary starting at
vertex 0; integer positions are vertices.
"""

from typing import Tuple

import numpy as np

from curvaplane.core.config import settings
from curvaplane.core.errors import InvalidPosition
from curvaplane.metrics.models import ChordReport, ChordSweep


def polygon_vertices(n: int) -> np.ndarray:
    radius = 1.0 / (2.0 * np.sin(np.pi / n))
    angles = 2.0 * np.pi * np.arange(n) / n
    return np.column_stack([radius * np.cos(angles), radius * np.sin(angles)])


def boundary_points(n: int, s) -> np.ndarray:
    """Coordinates of boundary positions ``s`` (array-like, taken modulo n)."""
    vertices = polygon_vertices(n)
    s = np.mod(np.asarray(s, dtype=float), n)
    j = np.floor(s).astype(int) % n
    frac = (s - np.floor(s))[..., None]
    return vertices[j] + frac * (vertices[(j + 1) % n] - vertices[j])


def chord_ratios(n: int, s, t) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (d, l1, l2, ratio) for boundary positions s and t."""
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    d = np.linalg.norm(boundary_points(n, s) - boundary_points(n, t), axis=-1)
    l1 = np.mod(t - s, n)
    l2 = n - l1
    shortest = np.minimum(l1, l2)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(shortest > 0, d / shortest, np.nan)
    return d, l1, l2, ratio


def chord_ratio(n: int, s: float, t: float) -> ChordReport:
    """Chord length d against min(l1, l2) for two boundary points.

    Raises:
        InvalidPosition: If n < 3, a position is outside [0, n), or s and t coincide
    """
    if n < 3:
        raise InvalidPosition(f"polygon degree must be at least 3, got {n}")
    for name, value in (("s", s), ("t", t)):
        if not 0 <= value < n:
            raise InvalidPosition(f"{name} = {value} is outside [0, {n})", location=name)
    if abs(s - t) <= settings.chord_tolerance:
        raise InvalidPosition(f"positions coincide: s = {s}, t = {t}")
    d, l1, l2, ratio = chord_ratios(n, s, t)
    # same-side points are collinear with the boundary: d equals the path length
    d_value = min(float(d), float(min(l1, l2)))
    return ChordReport(
        n=n,
        s=s,
        t=t,
        d=d_value,
        l1=float(l1),
        l2=float(l2),
        ratio=round(d_value / float(min(l1, l2)), 9),
    )


def _sweep(n: int, s: np.ndarray, t: np.ndarray, kind: str, resolution: int) -> ChordSweep:
    s, t = np.meshgrid(s, t, indexing="ij")
    s, t = s.ravel(), t.ravel()
    keep = np.abs(np.mod(t - s, n)) > settings.chord_tolerance
    keep &= np.abs(np.mod(s - t, n)) > settings.chord_tolerance
    s, t = s[keep], t[keep]
    _, _, _, ratio = chord_ratios(n, s, t)
    i = int(np.nanargmin(ratio))
    return ChordSweep(
        n=n,
        kind=kind,
        resolution=resolution,
        sample_count=int(s.size),
        min_ratio=float(ratio[i]),
        argmin=[float(s[i]), float(t[i])],
    )


def adjacent_side_sweep(n: int, resolution: int = 32) -> ChordSweep:
    """Minimum ratio with s on side [0, 1] and t on the adjacent side [1, 2]."""
    grid = np.linspace(0.0, 1.0, resolution)
    return _sweep(n, grid, 1.0 + grid, "adjacent", resolution)


def chord_sweep(n: int, resolution: int = 4) -> ChordSweep:
    """Minimum ratio over all pairs of positions k/resolution, k = 0..n·resolution − 1."""
    grid = np.arange(n * resolution) / resolution
    return _sweep(n, grid, grid, "all", resolution)
