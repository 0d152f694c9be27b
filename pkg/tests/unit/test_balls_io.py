import pytest

from curvaplane.core.errors import FormatError, InvalidParameter, UnknownVertex
from curvaplane.graph import ball, build_map, distance_to_set, dumps_map, loads_map, read_map, set_ball, to_dot, write_map
from curvaplane.tilings import planar_window


class TestBall:

    def test_radius_zero(self, small_grid):
        b = ball(small_grid, 0, 0)

        assert b.vertices == [0]
        assert b.edges == []
        assert b.sphere == [0]

    def test_grid_radius_one(self, small_grid):
        b = ball(small_grid, 0, 1)

        assert len(b.vertices) == 5
        assert len(b.edges) == 4
        assert b.complete

    def test_grid_ball_sizes_follow_l1_diamonds(self, grid):
        for radius in (2, 5, 10):
            b = ball(grid, 0, radius)
            assert len(b.vertices) == 2 * radius * radius + 2 * radius + 1
            assert len(b.sphere) == 4 * radius

    def test_ball_beyond_window_is_incomplete(self, small_grid):
        assert not ball(small_grid, 0, 12).complete

    def test_monotone_in_radius(self, small_grid):
        for radius in range(6):
            assert set(ball(small_grid, 0, radius).vertices) <= set(ball(small_grid, 0, radius + 1).vertices)

    def test_complete_ball_independent_of_window(self):
        small = planar_window("3.4.6.4", 6)
        large = planar_window("3.4.6.4", 9)
        a = ball(small, 0, 4)
        b = ball(large, 0, 4)

        assert a.complete and b.complete
        assert len(a.vertices) == len(b.vertices)
        assert sorted(a.distances.values()) == sorted(b.distances.values())

    def test_unknown_center(self, small_grid):
        with pytest.raises(UnknownVertex):
            ball(small_grid, 10 ** 6, 1)

    def test_negative_radius(self, small_grid):
        with pytest.raises(InvalidParameter):
            ball(small_grid, 0, -1)


class TestSetBall:

    def test_distance_to_pair(self, small_grid):
        neighbor = small_grid.neighbors[0][0]
        distances = distance_to_set(small_grid, [0, neighbor], cutoff=1)

        assert distances[0] == 0
        assert distances[neighbor] == 0
        assert set(distances.values()) == {0, 1}

    def test_set_ball_of_single_source_matches_ball(self, small_grid):
        assert set_ball(small_grid, [0], 3).vertices == ball(small_grid, 0, 3).vertices

    def test_big_face_spheres(self, square_large_face):
        sources = list(range(50))
        b = set_ball(square_large_face, sources, 5)

        assert b.center == 0
        assert len(b.vertices) == 6 * 50
        assert b.sphere == list(range(250, 300))
        assert b.complete


class TestSemiplanarFormat:

    def test_round_trip_preserves_faces_and_coordinates(self, tmp_path):
        hexagonal = planar_window("6^3", 3)
        path = tmp_path / "hex.json"
        write_map(hexagonal, path)
        loaded = read_map(path)

        assert loaded.faces == hexagonal.faces
        assert loaded.vertex_count == hexagonal.vertex_count
        assert loaded.coordinates.shape == hexagonal.coordinates.shape
        assert loaded.metadata["code"] == "6^3"

    def test_document_shape(self, triangle_fan):
        text = dumps_map(triangle_fan)

        assert text.endswith("\n")
        assert '"format":"semiplanar-v1"' in text
        assert '"vertex_count":7' in text
        assert "coordinates" not in text

    def test_dumps_is_deterministic(self, small_grid):
        assert dumps_map(small_grid) == dumps_map(loads_map(dumps_map(small_grid)))

    def test_rejects_other_formats(self):
        with pytest.raises(FormatError):
            loads_map('{"format": "obj", "vertex_count": 3, "faces": [[0, 1, 2]]}')

    def test_rejects_invalid_json(self):
        with pytest.raises(FormatError):
            loads_map("not json")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FormatError):
            read_map(tmp_path / "missing.json")

    def test_dot_has_positions_when_coordinates_exist(self, triangle_fan):
        hexagonal = planar_window("6^3", 2)

        assert 'pos="' in to_dot(hexagonal)
        assert "pos=" not in to_dot(triangle_fan)
        assert to_dot(build_map([[0, 1, 2]])).count(" -- ") == 3
