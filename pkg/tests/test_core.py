import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_int, random_colouring_with
from monopath.core import (
    BLUE,
    RED,
    Colouring,
    CoverReport,
    FailureKind,
    Path,
    PathCover,
    edge_count,
    iter_edges,
    validate_cover,
)


def test_colour_complement():
    assert RED.complement is BLUE
    assert BLUE.complement is RED
    assert RED.value == "R" and BLUE.value == "B"


def test_iter_edges_order_and_count():
    assert list(iter_edges(4)) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert list(iter_edges(1)) == []
    for n in range(1, 12):
        assert len(list(iter_edges(n))) == edge_count(n) == n * (n - 1) // 2


class TestColouring:
    def test_round_trips_edge_bits(self):
        bits = [True, False, True, True, False, False]
        g = Colouring.from_edge_bits(4, bits)
        assert g.edge_bits() == bits
        assert g.colour(1, 2) is RED
        assert g.colour(2, 1) is RED
        assert g.colour(1, 3) is BLUE
        assert g.colour(2, 3) is RED

    def test_from_function_matches_from_edge_bits(self):
        g = Colouring.from_function(5, lambda u, v: RED if (u + v) % 2 else BLUE)
        for u, v in iter_edges(5):
            assert g.colour(u, v) is (RED if (u + v) % 2 else BLUE)

    def test_monochromatic(self):
        r = Colouring.monochromatic(4, RED)
        b = Colouring.monochromatic(4, BLUE)
        assert all(r.colour(u, v) is RED for u, v in iter_edges(4))
        assert all(b.colour(u, v) is BLUE for u, v in iter_edges(4))
        assert r.flipped() == b

    def test_rejects_bad_masks(self):
        with pytest.raises(ValueError):
            Colouring(3, [2, 1, 7])  # vertex 3 claims a loop
        with pytest.raises(ValueError):
            Colouring(3, [2, 0, 0])  # 1-2 red one way only
        with pytest.raises(ValueError):
            Colouring(2, [4, 0])  # neighbour out of range
        with pytest.raises(ValueError):
            Colouring.from_edge_bits(0, [])
        with pytest.raises(ValueError):
            Colouring.monochromatic(0, RED)

    def test_wrong_bit_count(self):
        with pytest.raises(ValueError):
            Colouring.from_edge_bits(4, [True] * 5)

    def test_colour_rejects_loops_and_range(self):
        g = Colouring.monochromatic(3, RED)
        with pytest.raises(Exception):
            g.colour(2, 2)
        with pytest.raises(Exception):
            g.colour(1, 4)

    def test_with_edge(self):
        g = Colouring.monochromatic(4, BLUE)
        h = g.with_edge(2, 4, RED)
        assert h.colour(2, 4) is RED
        assert h.colour(4, 2) is RED
        assert g.colour(2, 4) is BLUE  # original untouched
        assert h.with_edge(2, 4, BLUE) == g

    def test_flipped_involution(self, rng):
        g = random_colouring_with(rng, 9)
        assert g.flipped().flipped() == g
        assert all(
            g.colour(u, v) is not g.flipped().colour(u, v) for u, v in iter_edges(9)
        )

    def test_induced_relabels_and_preserves_colours(self, rng):
        g = random_colouring_with(rng, 8)
        keep = [7, 2, 5]
        sub, back = g.induced(keep)
        assert sub.n == 3
        assert sorted(back) == [1, 2, 3]
        assert sorted(back.values()) == [2, 5, 7]
        for u, v in iter_edges(3):
            assert sub.colour(u, v) is g.colour(back[u], back[v])

    def test_degree_and_mask(self):
        g = Colouring.from_edge_bits(3, [True, True, False])
        assert g.degree(1, RED) == 2
        assert g.degree(1, BLUE) == 0
        assert g.degree(2, RED) == 1
        assert g.mask(2, RED) == 1  # bit 0 is vertex 1

    def test_equality_and_hash(self):
        g = from_int(4, 0b101010)
        h = from_int(4, 0b101010)
        assert g == h and hash(g) == hash(h)
        assert g != from_int(4, 0b101011)
        assert g != "not a colouring"

    @given(st.integers(1, 8), st.data())
    @settings(max_examples=60, deadline=None)
    def test_trusted_paths_stay_symmetric(self, n, data):
        bits = data.draw(st.lists(st.booleans(), min_size=edge_count(n), max_size=edge_count(n)))
        g = Colouring.from_edge_bits(n, bits)
        for u, v in iter_edges(n):
            assert g.colour(u, v) is g.colour(v, u)


class TestPath:
    def test_length_and_reversed(self):
        p = Path((3, 1, 2), RED)
        assert p.length == 2
        assert len(p) == 3
        assert p.reversed() == Path((2, 1, 3), RED)
        assert Path((7,), BLUE).length == 0
        assert Path((), BLUE).length == 0


class TestValidateCover:
    def g(self):
        # edges at vertex 4 red, triangle 1-2-3 blue
        return Colouring.from_function(4, lambda u, v: RED if v == 4 else BLUE)

    def test_valid_blue_plus_red(self):
        g = self.g()
        cover = PathCover(BLUE, (Path((1, 2, 3), BLUE), Path((4,), BLUE)), 4)
        report = validate_cover(g, cover)
        assert report.valid and report.failure_kind is FailureKind.NONE

    def test_overlap_between_paths_is_legal(self):
        g = self.g()
        cover = PathCover(RED, (Path((1, 4, 2), RED), Path((3, 4), RED)), 4)
        assert validate_cover(g, cover).valid

    def test_missing_vertex_reports_lowest(self):
        g = self.g()
        cover = PathCover(BLUE, (Path((3,), BLUE),), 4)
        report = validate_cover(g, cover)
        assert not report.valid
        assert report.failure_kind is FailureKind.MISSING_VERTEX
        assert report.detail == 1

    def test_duplicate_inside_path(self):
        g = self.g()
        cover = PathCover(BLUE, (Path((1, 2, 1), BLUE), Path((3, 4), BLUE)), 4)
        report = validate_cover(g, cover)
        assert report.failure_kind is FailureKind.DUPLICATE_VERTEX_IN_PATH
        assert report.detail == 1

    def test_wrong_colour_edge(self):
        g = self.g()
        cover = PathCover(RED, (Path((1, 2, 3, 4), RED),), 4)
        report = validate_cover(g, cover)
        assert report.failure_kind is FailureKind.WRONG_COLOUR_EDGE
        assert report.detail == (1, 2)

    def test_colour_mismatch_across_paths(self):
        g = self.g()
        cover = PathCover(BLUE, (Path((1, 2, 3), BLUE), Path((4,), RED)), 4)
        report = validate_cover(g, cover)
        assert report.failure_kind is FailureKind.COLOUR_MISMATCH_ACROSS_PATHS
        assert report.detail == 1  # index of the offending path

    def test_out_of_range(self):
        g = self.g()
        cover = PathCover(BLUE, (Path((1, 2, 3), BLUE), Path((9,), BLUE)), 4)
        report = validate_cover(g, cover)
        assert report.failure_kind is FailureKind.OUT_OF_RANGE_VERTEX
        assert report.detail == 9

    def test_singletons_cover(self):
        g = self.g()
        cover = PathCover(RED, tuple(Path((v,), RED) for v in range(1, 5)), 4)
        assert validate_cover(g, cover).valid
