import pytest

from curvaplane.core.errors import MixedLayer, MultipleBigFaces
from curvaplane.curvature import large_face_structure
from curvaplane.graph import build_map
from curvaplane.tilings import large_face_window
from curvaplane.tilings.large_face import square_rings
from curvaplane.tilings.models import LargeFaceSpec


class TestLargeFaceStructure:

    def test_square_layers(self):
        hmap = large_face_window(LargeFaceSpec(k=50, ring="44k", depth=6))
        layers = large_face_structure(hmap)

        assert layers.big_face_degree == 50
        assert layers.ring_pattern == (4, 4, 50)
        assert layers.depth == 6
        assert all(layer.kind == "square" for layer in layers.layers)
        assert all(len(layer.faces) == 50 for layer in layers.layers)
        assert [layer.index for layer in layers.layers] == [1, 2, 3, 4, 5, 6]
        assert layers.covered_vertices == list(range(350))
        assert not layers.hexagon_preimage
        assert layers.source_map is hmap

    def test_triangle_layers(self):
        layers = large_face_structure(large_face_window(LargeFaceSpec(k=43, ring="333k", depth=4)))

        assert layers.ring_pattern == (3, 3, 3, 43)
        assert layers.depth == 4
        assert all(layer.kind == "triangle" for layer in layers.layers)
        assert all(len(layer.faces) == 86 for layer in layers.layers)

    def test_hexagon_ring_is_refined_first(self):
        hmap = large_face_window(LargeFaceSpec(k=50, ring="36k", depth=4))
        layers = large_face_structure(hmap)

        assert layers.ring_pattern == (3, 6, 50)
        assert layers.hexagon_preimage
        assert layers.source_map is not hmap
        assert layers.layers
        assert all(layer.kind == "triangle" for layer in layers.layers)

    def test_layers_are_disjoint(self, square_large_face_layers):
        seen = set()
        for layer in square_large_face_layers.layers:
            assert not seen & set(layer.faces)
            seen |= set(layer.faces)

        assert square_large_face_layers.big_face not in seen

    def test_layer_faces_sorted_by_smallest_vertex(self, square_large_face_layers):
        faces = square_large_face_layers.source_map.faces
        for layer in square_large_face_layers.layers:
            keys = [(min(faces[f]), f) for f in layer.faces]
            assert keys == sorted(keys)

    def test_no_big_face(self, small_grid, triangular):
        assert large_face_structure(small_grid) is None
        assert large_face_structure(triangular) is None

    def test_two_big_faces(self):
        hmap = build_map([list(range(43)), list(range(43, 86))])

        with pytest.raises(MultipleBigFaces):
            large_face_structure(hmap)

    def test_mixed_layer(self):
        faces = square_rings(43, 2)
        assert faces[1] == (0, 1, 44, 43)
        faces[1:2] = [(0, 1, 44), (0, 44, 43)]

        with pytest.raises(MixedLayer):
            large_face_structure(build_map(faces))
