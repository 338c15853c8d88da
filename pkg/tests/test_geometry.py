"""Scene validation, point location, transitions, grid, monotonicity."""

import pytest
from hypothesis import given, settings, strategies as st

import _scenegen as sg
from conftest import oracle_classify, oracle_transitions
from ktrans import geometry as g
from ktrans.errors import (NonOrthogonalEdge, OddVertexCount,
                           OverlappingComponents, PinchVertex,
                           SceneValidationError, SelfIntersection)

RECT_RING = [(0, 0), (10, 0), (10, 6), (0, 6)]
U_RING = [(0, 0), (12, 0), (12, 8), (8, 8), (8, 3), (4, 3), (4, 8), (0, 8)]


def one(ring):
    return [{"outer": ring, "holes": []}]


class TestValidateScene:
    def test_rect(self):
        scene = g.validate_scene(one(RECT_RING))
        assert len(scene.components) == 1
        assert not scene.components[0].holes
        assert scene.components[0].outer[0] == (0, 0)  # doubled units

    def test_u(self):
        scene = g.validate_scene(one(U_RING))
        assert scene.vertex_count() == 8

    def test_diagonal_edge(self):
        with pytest.raises(NonOrthogonalEdge):
            g.validate_scene(one([(0, 0), (5, 5), (0, 5)]))

    def test_odd_vertex_count(self):
        with pytest.raises((OddVertexCount, NonOrthogonalEdge)):
            g.validate_scene(one([(0, 0), (4, 0), (4, 4), (2, 4), (0, 4)]))

    def test_collinear_consecutive_edges(self):
        with pytest.raises(NonOrthogonalEdge):
            g.validate_scene(one([(0, 0), (4, 0), (8, 0), (8, 4), (4, 4), (0, 4)]))

    def test_self_intersection(self):
        ring = [(0, 0), (6, 0), (6, 4), (2, 4), (2, 2), (8, 2), (8, 6), (0, 6)]
        with pytest.raises(SelfIntersection):
            g.validate_scene(one(ring))

    def test_pinch_vertex(self):
        ring = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (4, 4), (4, 2),
                (6, 2), (6, 6), (0, 6)]
        with pytest.raises((PinchVertex, SelfIntersection)):
            g.validate_scene(one(ring))

    def test_overlapping_components(self):
        with pytest.raises(OverlappingComponents):
            g.validate_scene([{"outer": RECT_RING, "holes": []},
                              {"outer": [(5, 1), (12, 1), (12, 4), (5, 4)],
                               "holes": []}])

    def test_hole_outside(self):
        with pytest.raises(OverlappingComponents):
            g.validate_scene([{"outer": [(0, 0), (4, 0), (4, 4), (0, 4)],
                               "holes": [[(6, 1), (7, 1), (7, 2), (6, 2)]]}])

    def test_hole_inside_ok(self):
        scene = g.validate_scene(
            [{"outer": [(0, 0), (10, 0), (10, 10), (0, 10)],
              "holes": [[(4, 4), (6, 4), (6, 6), (4, 6)]]}])
        assert len(scene.components[0].holes) == 1
        # hole normalized clockwise (negative doubled area)
        hole = list(scene.components[0].holes[0])
        assert g._shoelace2(hole) < 0

    def test_component_nested_in_hole(self):
        scene = g.validate_scene(
            [{"outer": [(0, 0), (10, 0), (10, 10), (0, 10)],
              "holes": [[(2, 2), (8, 2), (8, 8), (2, 8)]]},
             {"outer": [(4, 4), (6, 4), (6, 6), (4, 6)], "holes": []}])
        assert len(scene.components) == 2

    def test_non_integer_coordinate(self):
        with pytest.raises(SceneValidationError):
            g.validate_scene(one([(0, 0), (4.5, 0), (4.5, 4), (0, 4)]))

    def test_coordinate_out_of_range(self):
        big = 1 << 31
        with pytest.raises(SceneValidationError):
            g.validate_scene(one([(0, 0), (big, 0), (big, 4), (0, 4)]))


class TestPointLocation:
    def test_rect_examples(self, rect_scene):
        assert g.point_location(rect_scene, (10, 6)) == g.INTERIOR   # (5,3)
        assert g.point_location(rect_scene, (20, 6)) == g.BOUNDARY   # (10,3)

    def test_u_notch_exterior(self, u_scene):
        # derived via the independent ray oracle
        assert oracle_classify(u_scene, 12, 10) == "exterior"
        assert g.point_location(u_scene, (12, 10)) == g.EXTERIOR     # (6,5)

    def test_matches_oracle_on_grid(self, u_scene):
        for x in range(-2, 26):
            for y in range(-2, 18):
                assert g.point_location(u_scene, (x, y)) == \
                    oracle_classify(u_scene, x, y)


class TestTransitionCount:
    def test_inside_rect(self, rect_scene):
        seg = g.OrthoSegment("h", 6, 4, 16)  # y=3, x in [2,8]
        assert g.transition_count(rect_scene, seg) == 0

    def test_u_through_notch(self, u_scene):
        seg = g.OrthoSegment("h", 12, 4, 20)  # y=6, x in [2,10]
        assert oracle_transitions(u_scene, seg) == 2
        assert g.transition_count(u_scene, seg) == 2

    def test_u_ending_in_notch(self, u_scene):
        seg = g.OrthoSegment("h", 12, 4, 12)  # y=6, x in [2,6]
        assert oracle_transitions(u_scene, seg) == 1
        assert g.transition_count(u_scene, seg) == 1

    def test_along_edge_counts_zero(self, u_scene):
        seg = g.OrthoSegment("h", 0, 0, 24)  # along the bottom edge
        assert g.transition_count(u_scene, seg) == 0

    def test_matches_oracle_random(self):
        for seed in range(12):
            scene = sg.column_scene(seed, max_cols=6)
            x1, y1, x2, y2 = scene.bbox()
            import random
            rng = random.Random(seed)
            for _ in range(8):
                c = rng.randint(y1 - 1, y2 + 1)
                a = rng.randint(x1 - 2, x2 + 2)
                b = rng.randint(a, x2 + 2)
                seg = g.OrthoSegment("h", c, a, b)
                assert g.transition_count(scene, seg) == \
                    oracle_transitions(scene, seg), (seed, seg)


class TestUnitGrid:
    def test_rect(self, rect_scene):
        grid = g.unit_grid(rect_scene)
        assert len(grid.xs) == 2 and len(grid.ys) == 2
        assert grid.interior == ((True,),)

    def test_u(self, u_scene):
        grid = g.unit_grid(u_scene)
        assert grid.xs == (0, 8, 16, 24)
        assert grid.ys == (0, 6, 16)
        flat = {(ix, iy): grid.interior[ix][iy]
                for ix in range(3) for iy in range(2)}
        assert flat[(1, 1)] is False  # the notch cell
        assert sum(flat.values()) == 5

    def test_two_rects_gap(self, two_rects_scene):
        grid = g.unit_grid(two_rects_scene)
        cols = [any(col) for col in grid.interior]
        assert cols == [True, False, True]

    def test_area_matches_shoelace(self):
        for seed in range(20):
            scene = sg.column_scene(seed)
            grid = g.unit_grid(scene)
            area = 0
            for ix in range(len(grid.xs) - 1):
                for iy in range(len(grid.ys) - 1):
                    if grid.interior[ix][iy]:
                        x1, y1, x2, y2 = grid.cell(ix, iy)
                        area += (x2 - x1) * (y2 - y1)
            assert 2 * area == g.shoelace_area2(scene)


class TestIsYMonotone:
    def test_rect(self, rect_scene):
        assert g.is_y_monotone(rect_scene)

    def test_u_is_not(self, u_scene):
        # two intervals on any horizontal line through the towers
        assert not g.is_y_monotone(u_scene)

    def test_two_rects(self, two_rects_scene):
        assert not g.is_y_monotone(two_rects_scene)

    def test_staircase_is(self):
        ring = [(0, 0), (4, 0), (4, 2), (8, 2), (8, 6), (2, 6), (2, 4), (0, 4)]
        assert g.is_y_monotone(g.validate_scene(one(ring)))


class TestProperties:
    @given(st.integers(0, 500), st.data())
    @settings(max_examples=60, deadline=None)
    def test_transition_parity(self, seed, data):
        scene = sg.column_scene(seed, max_cols=6)
        x1, y1, x2, y2 = scene.bbox()
        c = data.draw(st.integers(y1, y2))
        a = data.draw(st.integers(x1 - 2, x2 + 2))
        b = data.draw(st.integers(a, x2 + 2))
        seg = g.OrthoSegment("h", c, a, b)
        ca = g.point_location(scene, (a, c))
        cb = g.point_location(scene, (b, c))
        if g.BOUNDARY in (ca, cb):
            return
        t = g.transition_count(scene, seg)
        assert t % 2 == (0 if ca == cb else 1)

    @given(st.integers(0, 500), st.data())
    @settings(max_examples=40, deadline=None)
    def test_reversal_symmetry(self, seed, data):
        scene = sg.column_scene(seed, max_cols=6)
        oracle = g.LineOracle(scene)
        x1, y1, x2, y2 = scene.bbox()
        c = data.draw(st.integers(y1, y2))
        a = data.draw(st.integers(x1 - 2, x2 + 2))
        b = data.draw(st.integers(x1 - 2, x2 + 2))
        model = oracle.model("h", c, 0)
        assert model.transitions(a, b) == model.transitions(b, a)

    @given(st.integers(0, 500), st.data())
    @settings(max_examples=60, deadline=None)
    def test_location_agrees_with_far_ray_parity(self, seed, data):
        scene = sg.column_scene(seed, max_cols=6)
        x1, _, x2, _ = scene.bbox()
        px = data.draw(st.integers(x1, x2))
        py = data.draw(st.integers(-1, 17))
        loc = g.point_location(scene, (px, py))
        if loc == g.BOUNDARY:
            return
        seg = g.OrthoSegment("h", py, x1 - 4, px)
        parity = g.transition_count(scene, seg) % 2
        assert (parity == 1) == (loc == g.INTERIOR)
