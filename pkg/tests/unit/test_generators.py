import pytest

from curvaplane.core.errors import InvalidSpec
from curvaplane.tilings import (
    AVAILABLE_GENERATORS,
    ArchimedeanSpec,
    LargeFaceSpec,
    MonohedralSpec,
    generate,
    parse_tiling_spec,
    regular_tree,
)


class TestParseTilingSpec:

    def test_archimedean(self):
        spec = parse_tiling_spec("archimedean:4.6.4.3", radius=5)

        assert isinstance(spec, ArchimedeanSpec)
        assert spec.code == "3.4.6.4"
        assert spec.window_radius == 5

    def test_monohedral(self):
        spec = parse_tiling_spec("monohedral:4")

        assert isinstance(spec, MonohedralSpec)
        assert spec.n == 4

    def test_large_face_ring_aliases(self):
        spec = parse_tiling_spec("large-face:k=50,ring=3.6.k,depth=3")

        assert isinstance(spec, LargeFaceSpec)
        assert spec.ring == "36k"
        assert spec.ring_pattern == (3, 6, 50)

    def test_quotients(self):
        cylinder = parse_tiling_spec("cylinder:base=4.4.4.4,circumference=5,length=6")
        projective = parse_tiling_spec("projective:base=3.6.3.6,width=4,length=4")

        assert cylinder.base == "4^4"
        assert projective.family == "projective"

    @pytest.mark.parametrize("text", [
        "largeface:k=40,depth=3",
        "largeface:k=50",
        "largeface:k=50,ring=3.4.k,depth=2",
        "monohedral:5",
        "archimedean:5.5.5",
        "hyperbolic:7",
        "cylinder:base=4^4,circumference",
    ])
    def test_invalid(self, text):
        with pytest.raises(InvalidSpec):
            parse_tiling_spec(text)


class TestGenerate:

    def test_every_family_has_a_generator(self):
        families = {g.family for g in AVAILABLE_GENERATORS}

        assert families == {"archimedean", "monohedral", "large_face", "cylinder", "projective"}
        assert all(g.description for g in AVAILABLE_GENERATORS)

    def test_monohedral_window(self):
        hmap = generate(parse_tiling_spec("monohedral:6", radius=3))

        assert hmap.metadata["family"] == "monohedral"
        assert hmap.metadata["code"] == "6^3"

    def test_large_face_window(self):
        hmap = generate(parse_tiling_spec("largeface:k=43,ring=333k,depth=2"))

        assert hmap.max_face_degree == 43
        assert hmap.vertex_count == 3 * 43


class TestRegularTree:

    def test_sizes_and_leaves(self):
        tree = regular_tree(3, 4)
        leaves = [v for v, data in tree.nodes(data=True) if data["window_boundary"]]

        assert tree.number_of_nodes() == 1 + 3 + 6 + 12 + 24
        assert len(leaves) == 24
        assert tree.degree(0) == 3
        assert all(tree.degree(v) == 3 for v in tree if v not in leaves)

    def test_invalid(self):
        with pytest.raises(InvalidSpec):
            regular_tree(1, 3)
