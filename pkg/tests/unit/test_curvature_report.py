import json
from fractions import Fraction

import pytest

from curvaplane.core.errors import BoundaryVertex, NoInteriorVertices
from curvaplane.curvature import (
    curvature,
    curvature_report,
    gauss_bonnet_profile,
    report_to_csv,
    report_to_json,
    vertex_pattern,
)
from curvaplane.graph import build_map
from curvaplane.tilings import large_face_window, planar_window
from curvaplane.tilings.models import ARCHIMEDEAN_CODES, LargeFaceSpec

TETRAHEDRON = [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]


@pytest.fixture(scope="module")
def ringed_50_gon():
    return large_face_window(LargeFaceSpec(k=50, ring="44k", depth=6))


class TestVertexPattern:

    def test_triangle_fan_hub(self, triangle_fan):
        assert vertex_pattern(triangle_fan, 0).degrees == (3, 3, 3, 3, 3, 3)

    def test_grid_vertex(self, small_grid):
        assert vertex_pattern(small_grid, 0).degrees == (4, 4, 4, 4)

    def test_big_face_vertex(self, ringed_50_gon):
        assert vertex_pattern(ringed_50_gon, 7).degrees == (4, 4, 50)

    def test_boundary_vertex(self, triangle_fan):
        with pytest.raises(BoundaryVertex):
            vertex_pattern(triangle_fan, 1)


class TestCurvature:

    def test_tetrahedron_vertex(self):
        assert curvature(build_map(TETRAHEDRON), 0) == Fraction(1, 2)

    def test_big_face_vertex(self, ringed_50_gon):
        assert curvature(ringed_50_gon, 0) == Fraction(1, 50)

    def test_hexagon_fan_hub(self, hexagon_fan):
        assert curvature(hexagon_fan, 0) == 0

    def test_boundary_vertex(self, hexagon_fan):
        with pytest.raises(BoundaryVertex):
            curvature(hexagon_fan, 1)


class TestCurvatureReport:

    def test_truncated_square_tiling_is_flat(self):
        report = curvature_report(planar_window("4.8.8", 6))

        assert all(entry.phi == 0 for entry in report.vertices)
        assert report.total == 0
        assert report.nonnegative_everywhere
        assert report.degree_bound_violations == []

    @pytest.mark.parametrize("code", ARCHIMEDEAN_CODES)
    def test_every_interior_vertex_has_the_tiling_pattern(self, code):
        hmap = planar_window(code, 10)
        report = curvature_report(hmap)
        expected = tuple(hmap.metadata["pattern"])

        assert report.vertices
        assert all(entry.pattern == expected for entry in report.vertices)
        assert all(entry.phi == 0 for entry in report.vertices)

    def test_ringed_50_gon_has_total_one(self, ringed_50_gon):
        report = curvature_report(ringed_50_gon)
        ring = set(range(50))

        assert report.total == 1
        assert report.gauss_bonnet_ok
        assert all(entry.phi == Fraction(1, 50) for entry in report.vertices if entry.vertex in ring)
        assert all(entry.phi == 0 for entry in report.vertices if entry.vertex not in ring)
        assert report.max_face_degree == 50

    def test_hexagonal_window(self, hexagonal):
        report = curvature_report(hexagonal)

        assert report.total == 0
        assert report.nonnegative_everywhere
        assert report.max_face_degree == 6

    def test_closed_maps_satisfy_gauss_bonnet_exactly(self):
        tetrahedron = curvature_report(build_map(TETRAHEDRON))

        assert tetrahedron.closed
        assert tetrahedron.total == 2
        assert tetrahedron.euler_characteristic == 2
        assert tetrahedron.gauss_bonnet_exact
        assert not tetrahedron.gauss_bonnet_ok

    def test_window_gauss_bonnet_exact_is_none(self, hexagonal):
        assert curvature_report(hexagonal).gauss_bonnet_exact is None

    def test_no_interior_vertices(self):
        with pytest.raises(NoInteriorVertices):
            curvature_report(build_map([[0, 1, 2]]))

    def test_negative_vertex(self):
        seven_triangles = [[0, 1 + i, 1 + (i + 1) % 7] for i in range(7)]
        report = curvature_report(build_map(seven_triangles))

        assert report.vertices[0].sign == "negative"
        assert report.total == Fraction(1) - Fraction(7, 2) + Fraction(7, 3)
        assert not report.nonnegative_everywhere


class TestGaussBonnetProfile:

    def test_partial_sums_around_the_big_face(self, ringed_50_gon):
        profile = gauss_bonnet_profile(ringed_50_gon, 0, range(10))

        assert [entry.radius for entry in profile] == [0, 1, 2, 3, 4, 5]
        assert [entry.total for entry in profile] == [Fraction(2 * r + 1, 50) for r in range(6)]

    def test_partial_sums_nondecreasing_and_bounded(self, hexagonal):
        totals = [entry.total for entry in gauss_bonnet_profile(hexagonal, 0, range(7))]

        assert totals == sorted(totals)
        assert all(total <= 1 for total in totals)


class TestSerialization:

    def test_json_uses_exact_rational_strings(self, ringed_50_gon):
        payload = json.loads(report_to_json(curvature_report(ringed_50_gon)))

        assert payload["total"] == "1/1"
        assert payload["vertices"][0]["phi"] == "1/50"
        assert payload["vertices"][0]["pattern"] == [4, 4, 50]

    def test_csv_rows(self, triangle_fan):
        lines = report_to_csv(curvature_report(triangle_fan)).splitlines()

        assert lines[0] == "vertex,degree,pattern,phi,class"
        assert lines[1] == '0,6,"(3,3,3,3,3,3)",0/1,zero'
