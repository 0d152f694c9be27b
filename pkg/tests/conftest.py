import os

import pytest

os.environ["CURVAPLANE_LOG_LEVEL"] = "WARNING"

from curvaplane.curvature import large_face_structure
from curvaplane.graph import build_map
from curvaplane.tilings import large_face_window, planar_window
from curvaplane.tilings.models import LargeFaceSpec


def _fan(spokes, face_degree):
    """Faces of ``spokes`` polygons of ``face_degree`` sides around hub vertex 0."""
    faces = []
    next_id = 1 + spokes
    for i in range(spokes):
        a, b = 1 + i, 1 + (i + 1) % spokes
        extra = list(range(next_id, next_id + face_degree - 3))
        next_id += face_degree - 3
        faces.append([0, a] + extra + [b])
    return faces


@pytest.fixture
def triangle_fan():
    """Six triangles around vertex 0: pattern (3,3,3,3,3,3)."""
    return build_map(_fan(6, 3))


@pytest.fixture
def hexagon_fan():
    """Three hexagons around vertex 0: pattern (6,6,6)."""
    return build_map(_fan(3, 6))


@pytest.fixture
def fan_faces():
    return _fan


@pytest.fixture(scope="session")
def grid():
    """Square grid window of radius 26 around vertex 0 at the origin."""
    return planar_window("4^4", 26)


@pytest.fixture(scope="session")
def small_grid():
    return planar_window("4^4", 8)


@pytest.fixture(scope="session")
def triangular():
    return planar_window("3^6", 10)


@pytest.fixture(scope="session")
def hexagonal():
    return planar_window("6^3", 6)


@pytest.fixture(scope="session")
def square_large_face():
    """(4,4,50) big face with 80 square layers."""
    return large_face_window(LargeFaceSpec(k=50, ring="44k", depth=80))


@pytest.fixture(scope="session")
def square_large_face_layers(square_large_face):
    return large_face_structure(square_large_face)


@pytest.fixture
def x_field(grid):
    """f = x-coordinate on every grid vertex, snapped to integers."""
    return {v: float(round(grid.coordinates[v, 0])) for v in range(grid.vertex_count)}


@pytest.fixture
def diagonal_field(grid):
    """f = x + y on every grid vertex, snapped to integers."""
    return {
        v: float(round(grid.coordinates[v, 0]) + round(grid.coordinates[v, 1]))
        for v in range(grid.vertex_count)
    }
