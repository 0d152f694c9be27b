import math

import numpy as np
import pytest

from curvaplane.core.errors import InvalidParameter, InvalidPosition, NoEmbedding, UnknownVertex, WindowTooSmall
from curvaplane.graph import build_map
from curvaplane.metrics import (
    adjacent_side_sweep,
    ball_volume_profile,
    bilipschitz_estimate,
    chord_ratio,
    chord_sweep,
    profile_to_csv,
    refinement_graph,
    vertex_count_bounds,
    volume_axioms,
)
from curvaplane.tilings import large_face_window, planar_window, regular_tree
from curvaplane.tilings.models import LargeFaceSpec


@pytest.fixture(scope="module")
def deep_large_face():
    return large_face_window(LargeFaceSpec(k=50, ring="44k", depth=300))


class TestBallVolumeProfile:

    def test_grid_volumes(self, grid):
        profile = ball_volume_profile(grid, 0, 30)

        assert profile.complete_up_to == 26
        for r in range(27):
            assert profile.volume(r) == 4 * (2 * r * r + 2 * r + 1)
            assert profile.vertex_counts[r] == 2 * r * r + 2 * r + 1

    def test_tree_volumes(self):
        profile = ball_volume_profile(regular_tree(3, 6), 0, 5)

        assert profile.volumes[:2] == [3, 12]
        assert profile.complete_up_to == 5

    def test_unknown_center(self, small_grid):
        with pytest.raises(UnknownVertex):
            ball_volume_profile(small_grid, -1, 3)

    def test_csv(self, small_grid):
        lines = profile_to_csv(ball_volume_profile(small_grid, 0, 2)).splitlines()

        assert lines == ["R,volume", "0,4", "1,20", "2,52"]


class TestVolumeAxioms:

    def test_grid_is_quadratic(self, grid):
        report = volume_axioms(ball_volume_profile(grid, 0, 26))

        assert 1.85 <= report.growth_exponent <= 2.15
        assert report.doubling_constant <= 4.5
        assert report.relative_constant <= 4.5
        assert report.fit_radii == list(range(13, 27))

    @pytest.mark.parametrize("code", ["3^6", "6^3"])
    def test_triangular_and_hexagonal_are_quadratic(self, code):
        report = volume_axioms(ball_volume_profile(planar_window(code, 30), 0, 30))

        assert report.complete_up_to == 30
        assert 1.8 <= report.growth_exponent <= 2.2

    def test_large_face_grows_linearly(self, deep_large_face):
        report = volume_axioms(ball_volume_profile(deep_large_face, 0, 299))

        assert report.complete_up_to == 299
        assert 0.8 <= report.growth_exponent <= 1.2

    def test_negative_radius(self, small_grid):
        with pytest.raises(InvalidParameter):
            ball_volume_profile(small_grid, 0, -1)

    def test_window_too_small(self, triangle_fan):
        with pytest.raises(WindowTooSmall):
            volume_axioms(ball_volume_profile(triangle_fan, 0, 5))

    def test_vertex_count_bounds(self, grid, triangular):
        assert vertex_count_bounds(grid, 0, 10).ok
        assert vertex_count_bounds(triangular, 0, 8).ok


class TestChords:

    def test_right_angle_corner(self):
        report = chord_ratio(4, 0.5, 1.5)

        assert report.l1 == 1.0
        assert report.l2 == 3.0
        assert report.ratio == pytest.approx(math.sqrt(0.5))

    def test_same_side(self):
        assert chord_ratio(6, 0.2, 0.7).ratio == 1.0

    @pytest.mark.parametrize("n, s, t", [(2, 0.0, 1.0), (5, 5.0, 1.0), (5, 1.0, -0.5), (5, 2.0, 2.0)])
    def test_invalid_positions(self, n, s, t):
        with pytest.raises(InvalidPosition):
            chord_ratio(n, s, t)

    def test_adjacent_sides_bounded_below(self):
        for n in range(3, 61):
            assert adjacent_side_sweep(n).min_ratio >= 0.25, n

    def test_triangle_corner_minimum(self):
        sweep = adjacent_side_sweep(3, resolution=33)

        assert sweep.min_ratio == pytest.approx(0.5)

    @pytest.mark.parametrize("n", [3, 4, 6, 12, 50])
    def test_all_pairs_bounded_below(self, n):
        sweep = chord_sweep(n)

        assert 0.25 <= sweep.min_ratio <= 1.0
        assert sweep.sample_count == (n * 4) * (n * 4 - 1)


class TestBilipschitz:

    def test_grid_ratios(self, small_grid):
        report = bilipschitz_estimate(small_grid, 100, seed=3)

        assert report.sample_count == 100
        assert 0.5 <= report.min_ratio <= report.mean_ratio <= report.max_ratio <= 1.0 + 1e-9

    @pytest.mark.parametrize("code", ["4^4", "3^6"])
    def test_ratios_stable_when_the_window_doubles(self, code):
        small = bilipschitz_estimate(planar_window(code, 10), 10_000, seed=5)
        large = bilipschitz_estimate(planar_window(code, 20), 10_000, seed=5)

        for report in (small, large):
            assert 0.5 <= report.min_ratio <= report.max_ratio <= 1.0 + 1e-5
        assert abs(small.min_ratio - large.min_ratio) <= 0.02
        assert abs(small.max_ratio - large.max_ratio) <= 0.02

    def test_deterministic(self, small_grid):
        assert bilipschitz_estimate(small_grid, 50, seed=1) == bilipschitz_estimate(small_grid, 50, seed=1)

    def test_refinement_graph_has_diagonals(self):
        square = build_map([[0, 1, 2, 3]], coordinates=[[0, 0], [1, 0], [1, 1], [0, 1]])
        weights = refinement_graph(square).toarray()

        assert weights[0, 1] == 1.0
        assert weights[0, 2] == pytest.approx(np.sqrt(2))

    def test_needs_a_pair(self, small_grid):
        with pytest.raises(InvalidParameter):
            bilipschitz_estimate(small_grid, 0)

    def test_no_coordinates(self, square_large_face):
        with pytest.raises(NoEmbedding):
            bilipschitz_estimate(square_large_face, 10)

    def test_too_few_interior_vertices(self):
        triangle = build_map([[0, 1, 2]], coordinates=[[0, 0], [1, 0], [0, 1]])

        with pytest.raises(WindowTooSmall):
            bilipschitz_estimate(triangle, 10)
