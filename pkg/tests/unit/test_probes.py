import math

import networkx as nx
import pytest

from curvaplane.core.errors import (
    Disconnected,
    InvalidParameter,
    MissingNeighborValue,
    NonpositiveBoundary,
    TooSmall,
    WindowTooSmall,
    ZeroField,
)
from curvaplane.graph import ball
from curvaplane.harmonic import (
    escape_probability,
    escape_profile,
    gradient_estimate_check,
    harnack_ratio,
    harnack_sweep,
    lambda1_check,
    mean_value_check,
    poincare_constant,
    poincare_optimum,
    poincare_ratio,
    poincare_report,
    random_boundary,
    solve_dirichlet,
    sphere,
)
from curvaplane.tilings import planar_window, regular_tree


@pytest.fixture(scope="module")
def wide_grid():
    return planar_window("4^4", 34)


@pytest.fixture(scope="module")
def deep_tree():
    return regular_tree(3, 13)


class TestSphereAndRandomBoundary:

    def test_grid_sphere(self, grid):
        assert len(sphere(grid, 0, 3)) == 12
        assert sphere(grid, [0], 3) == sphere(grid, 0, 3)

    def test_random_boundary_is_seeded(self):
        vertices = list(range(20))

        assert random_boundary(vertices, 7, 2) == random_boundary(vertices, 7, 2)
        assert random_boundary(vertices, 7, 2) != random_boundary(vertices, 7, 3)

    def test_positive_values(self):
        values = random_boundary(list(range(500)), 3, positive=True).values()

        assert all(0.0 < x <= 1.0 for x in values)


class TestHarnack:

    def test_linear_boundary(self, grid, x_field):
        outer = sphere(grid, 0, 12)
        ratio = harnack_ratio(grid, 0, 4, {v: 10.0 + x_field[v] for v in outer}, growth_factor=3)

        assert ratio == pytest.approx(7 / 3)

    def test_nonpositive_boundary(self, grid, x_field):
        outer = sphere(grid, 0, 12)

        with pytest.raises(NonpositiveBoundary):
            harnack_ratio(grid, 0, 4, {v: x_field[v] for v in outer}, growth_factor=3)

    def test_sweep(self, grid):
        report = harnack_sweep(grid, 0, 4, samples=20, seed=9)

        assert report.outer_radius == 12
        assert report.samples == 20
        assert 1.0 <= report.mean_ratio <= report.max_ratio
        assert report == harnack_sweep(grid, 0, 4, samples=20, seed=9)

    def test_sweep_ratio_does_not_grow_with_radius(self, grid):
        small = harnack_sweep(grid, 0, 4, samples=100, seed=0, growth_factor=3)
        large = harnack_sweep(grid, 0, 8, samples=100, seed=0, growth_factor=3)

        assert large.outer_radius == 24
        assert math.isfinite(small.max_ratio) and math.isfinite(large.max_ratio)
        assert large.max_ratio <= 2 * small.max_ratio

    def test_sweep_needs_samples(self, grid):
        with pytest.raises(InvalidParameter):
            harnack_sweep(grid, 0, 4, samples=0)

    def test_mean_value(self, grid, x_field):
        b = ball(grid, 0, 12)
        field = solve_dirichlet(grid, b, {v: 10.0 + x_field[v] for v in b.sphere})

        assert mean_value_check(grid, 0, 4, field, growth_factor=3) == pytest.approx(31300 / 39464)

    def test_mean_value_of_zero_field(self, grid):
        b = ball(grid, 0, 12)
        field = solve_dirichlet(grid, b, {v: 0.0 for v in b.sphere})

        with pytest.raises(ZeroField):
            mean_value_check(grid, 0, 4, field, growth_factor=3)

    def test_mean_value_needs_the_whole_ball(self, grid, x_field):
        b = ball(grid, 0, 12)
        field = solve_dirichlet(grid, b, {v: 10.0 + x_field[v] for v in b.sphere})

        with pytest.raises(MissingNeighborValue):
            mean_value_check(grid, 0, 5, field, growth_factor=3)


class TestPoincare:

    def test_indicator_of_center(self, grid):
        indicator = {v: 0.0 for v in ball(grid, 0, 2).vertices}
        indicator[0] = 1.0

        assert poincare_ratio(grid, 0, 1, indicator, enlargement=2) == pytest.approx(0.4)

    def test_constant_field(self, grid):
        constant = {v: 3.0 for v in ball(grid, 0, 4).vertices}

        assert poincare_ratio(grid, 0, 2, constant) == 0.0

    def test_optimum_bounds_samples(self, grid):
        sampled = poincare_constant(grid, 0, 3, samples=50, seed=2)
        optimum = poincare_optimum(grid, 0, 3)

        assert 0.0 < sampled <= optimum + 1e-9

    def test_optimum_bounds_indicator(self, grid):
        assert poincare_optimum(grid, 0, 1, enlargement=2) >= 0.4 - 1e-9

    def test_optimum_is_stable_across_radii(self, grid):
        small = poincare_optimum(grid, 0, 3)
        large = poincare_optimum(grid, 0, 6)

        assert max(small, large) <= 2 * min(small, large)

    def test_report(self, triangular):
        report = poincare_report(triangular, 0, 2, samples=10, seed=1)

        assert report.enlargement == 2.0
        assert report.max_ratio <= report.optimum + 1e-9

    def test_ball_leaving_the_window(self, small_grid):
        with pytest.raises(WindowTooSmall):
            poincare_constant(small_grid, 0, 5, samples=3)

    def test_radius_zero(self, grid):
        with pytest.raises(InvalidParameter):
            poincare_optimum(grid, 0, 0)


class TestLambda1:

    def test_edge(self):
        report = lambda1_check(nx.complete_graph(2), [0, 1])

        assert report.lambda1 == pytest.approx(2.0)
        assert report.bound == 0.5
        assert report.ok

    def test_triangle(self):
        report = lambda1_check(nx.complete_graph(3), [0, 1, 2])

        assert report.lambda1 == pytest.approx(1.5)
        assert report.bound == pytest.approx(1 / 6)
        assert report.volume == 6

    def test_grid_ball(self, grid):
        report = lambda1_check(grid, ball(grid, 0, 5))

        assert report.vertex_count == 61
        assert report.diameter == 10
        assert report.ok

    @pytest.mark.parametrize("radius", range(1, 9))
    def test_bound_holds_on_small_balls(self, grid, triangular, square_large_face, radius):
        for g, center in [(grid, 0), (triangular, 0), (square_large_face, 0), (square_large_face, 525)]:
            report = lambda1_check(g, ball(g, center, radius))
            assert report.ok, (center, radius, report.lambda1, report.bound)

    def test_too_small(self, grid):
        with pytest.raises(TooSmall):
            lambda1_check(grid, [0])

    def test_disconnected(self, small_grid):
        with pytest.raises(Disconnected):
            lambda1_check(small_grid, [0, 100])


class TestEscape:

    def test_grid_radius_two(self, grid):
        assert escape_probability(grid, 0, 2) == pytest.approx(0.75)

    @pytest.mark.parametrize("radius", [1, 2, 8, 12])
    def test_tree_matches_gamblers_ruin(self, deep_tree, radius):
        assert escape_probability(deep_tree, 0, radius) == pytest.approx(0.5 / (1 - 2.0 ** -radius))

    def test_grid_profile_decreases(self, wide_grid):
        profile = escape_profile(wide_grid, 0, [2, 4, 8, 16, 32])

        assert all(a > b for a, b in zip(profile.escape, profile.escape[1:]))
        assert profile.escape[-1] < profile.escape[0] / 2

    def test_recurrent_grid_against_transient_tree(self, wide_grid, deep_tree):
        assert escape_probability(wide_grid, 0, 12) < escape_probability(deep_tree, 0, 12)

    def test_radius_zero(self, grid):
        with pytest.raises(InvalidParameter):
            escape_probability(grid, 0, 0)


class TestGradientEstimate:

    def test_diagonal_field(self, grid, diagonal_field):
        b = ball(grid, 0, 25)
        field = solve_dirichlet(grid, b, {v: diagonal_field[v] for v in b.sphere})
        estimate = gradient_estimate_check(grid, field, 0, 4)

        assert estimate.lhs == pytest.approx(2.0)
        assert estimate.rhs_scale == pytest.approx(24.0)

    def test_field_too_small(self, grid, diagonal_field):
        b = ball(grid, 0, 25)
        field = solve_dirichlet(grid, b, {v: diagonal_field[v] for v in b.sphere})

        with pytest.raises(WindowTooSmall):
            gradient_estimate_check(grid, field, 0, 5)
