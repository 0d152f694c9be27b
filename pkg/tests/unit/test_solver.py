import numpy as np
import pytest

from curvaplane.core.config import settings
from curvaplane.core.errors import DisconnectedInterior, EmptyBoundary, MissingNeighborValue, WindowTooSmall
from curvaplane.graph import ball, build_map, set_ball
from curvaplane.harmonic import DirichletProblem, gradient_norm_sq, laplacian, random_boundary, solve_dirichlet


class TestOperators:

    def test_linear_field_is_harmonic(self, grid, x_field):
        assert laplacian(grid, x_field, 0) == 0.0
        assert gradient_norm_sq(grid, x_field, 0) == 2.0

    def test_quadratic_field(self, grid, x_field):
        squared = {v: x * x for v, x in x_field.items()}

        assert laplacian(grid, squared, 0) == 0.5

    def test_plain_graph(self, small_grid):
        f = {v: float(v) for v in range(small_grid.vertex_count)}

        assert laplacian(small_grid.graph, f, 0) == laplacian(small_grid, f, 0)

    def test_missing_neighbor(self, small_grid):
        with pytest.raises(MissingNeighborValue):
            laplacian(small_grid, {0: 1.0}, 0)
        with pytest.raises(MissingNeighborValue):
            gradient_norm_sq(small_grid, {}, 0)


class TestDirichletProblem:

    def test_reproduces_linear_functions(self, grid, x_field):
        b = ball(grid, 0, 10)
        field = solve_dirichlet(grid, b, {v: x_field[v] for v in b.sphere})

        assert field.residual < 1e-9
        for v in b.vertices:
            assert field.value(v) == pytest.approx(x_field[v], abs=1e-8)

    def test_solution_is_harmonic_inside(self, triangular):
        b = ball(triangular, 0, 6)
        field = solve_dirichlet(triangular, b, random_boundary(b.sphere, seed=4))

        for x in b.inner:
            assert abs(laplacian(triangular, field.values, x)) < 1e-9

    def test_maximum_principle(self, small_grid):
        b = ball(small_grid, 0, 7)
        data = random_boundary(b.sphere, seed=11)
        field = solve_dirichlet(small_grid, b, data)

        assert field.oscillation(b.vertices) == pytest.approx(field.oscillation(b.sphere))

    def test_maximum_principle_on_seeded_problems(self, grid):
        problem = DirichletProblem(grid, ball(grid, 0, 10))
        data = np.column_stack([
            problem.boundary_vector(random_boundary(problem.boundary, 21, i))
            for i in range(100)
        ])
        values = problem.solve_array(data)
        interior = np.array([problem.vertices.index(v) for v in problem.unknowns])

        assert np.all(values[interior] <= data.max(axis=0) + 1e-12)
        assert np.all(values[interior] >= data.min(axis=0) - 1e-12)

    def test_linearity(self, grid):
        problem = DirichletProblem(grid, ball(grid, 0, 10))
        m = len(problem.boundary)
        for i in range(100):
            rng = np.random.default_rng([33, i])
            f, g = rng.standard_normal(m), rng.standard_normal(m)
            a, c = rng.standard_normal(2)
            combined = problem.solve_array(a * f + c * g)
            separate = a * problem.solve_array(f) + c * problem.solve_array(g)

            assert np.max(np.abs(combined - separate)) < 1e-8

    def test_boundary_order_and_unknowns(self, small_grid):
        b = ball(small_grid, 0, 3)
        problem = DirichletProblem(small_grid, b)

        assert problem.boundary == b.sphere
        assert problem.unknowns == b.inner
        assert problem.matrix.shape == (len(b.inner), len(b.inner))

    def test_pinned_vertices_join_the_boundary(self, small_grid):
        b = ball(small_grid, 0, 3)
        problem = DirichletProblem(small_grid, b, pinned=[0])

        assert 0 in problem.boundary
        assert 0 not in problem.unknowns

    def test_several_right_hand_sides(self, small_grid):
        b = ball(small_grid, 0, 5)
        problem = DirichletProblem(small_grid, b)
        first = problem.boundary_vector(random_boundary(problem.boundary, seed=1))
        second = problem.boundary_vector(random_boundary(problem.boundary, seed=2))
        both = problem.solve_array(np.column_stack([first, second]))

        assert np.allclose(both[:, 0], problem.solve_array(first))
        assert np.allclose(both[:, 1], problem.solve_array(second))

    def test_iterative_path_matches_direct(self, small_grid, monkeypatch):
        b = ball(small_grid, 0, 6)
        data = random_boundary(b.sphere, seed=5)
        direct = solve_dirichlet(small_grid, b, data)
        monkeypatch.setattr(settings, "direct_solver_limit", 0)
        iterative = solve_dirichlet(small_grid, b, data)

        for v in b.vertices:
            assert iterative.value(v) == pytest.approx(direct.value(v), abs=1e-6)

    def test_empty_boundary(self):
        triangle = build_map([[0, 1, 2]])

        with pytest.raises(EmptyBoundary):
            DirichletProblem(triangle, ball(triangle, 0, 5))

    def test_ball_leaving_the_window(self, small_grid):
        with pytest.raises(WindowTooSmall):
            DirichletProblem(small_grid, ball(small_grid, 0, 12))

    def test_disconnected_interior(self, small_grid):
        with pytest.raises(DisconnectedInterior):
            DirichletProblem(small_grid, set_ball(small_grid, [0, 100], 1))

    def test_missing_boundary_value(self, small_grid):
        b = ball(small_grid, 0, 2)

        with pytest.raises(MissingNeighborValue):
            solve_dirichlet(small_grid, b, {v: 1.0 for v in b.sphere[1:]})
