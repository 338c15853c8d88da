"""Graph operations, bar representations, gadget layouts, and the
connecting walk."""

import pytest

from conftest import load_fixture_graph
from ktrans import geometry as g
from ktrans import reduction as r
from ktrans.errors import BarRepInvalid, NoSuchEdge, TooLarge


def graph_of(edges, vertices=None):
    if vertices is None:
        vertices = sorted({v for e in edges for v in e})
    return r.validate_graph(vertices, edges, two_connected=False)


class TestGraphValidation:
    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            r.validate_graph(["a"], [("a", "a")])

    def test_multi_edge_rejected(self):
        with pytest.raises(ValueError):
            r.validate_graph(["a", "b"], [("a", "b"), ("b", "a")])

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            r.validate_graph(["a", "b", "c", "d"],
                             [("a", "b"), ("c", "d")])

    def test_articulation_rejected_when_declared(self):
        with pytest.raises(ValueError):
            r.validate_graph(["a", "b", "c", "d", "e"],
                             [("a", "b"), ("b", "c"), ("c", "a"),
                              ("c", "d"), ("d", "e"), ("e", "c")],
                             two_connected=True)

    def test_cycle_is_two_connected(self):
        r.validate_graph(["a", "b", "c"],
                         [("a", "b"), ("b", "c"), ("c", "a")],
                         two_connected=True)


class TestMinVertexCover:
    def test_triangle(self):
        assert r.min_vertex_cover(graph_of([("a", "b"), ("b", "c"),
                                            ("c", "a")]))[0] == 2

    def test_single_edge(self):
        size, witness = r.min_vertex_cover(graph_of([("a", "b")]))
        assert size == 1 and witness == ("a",)

    def test_subdivided_triangle(self):
        graph = graph_of([("a", "b"), ("b", "c"), ("c", "a")])
        sub = r.subdivide_edge_twice(graph, ("a", "b"))
        assert r.min_vertex_cover(sub)[0] == 3

    def test_too_large(self):
        vs = [f"v{i}" for i in range(21)]
        edges = [(vs[i], vs[i + 1]) for i in range(20)]
        with pytest.raises(TooLarge):
            r.min_vertex_cover(graph_of(edges, vs))

    def test_witness_lexicographic(self):
        size, witness = r.min_vertex_cover(
            graph_of([("a", "b"), ("c", "b"), ("d", "b")]))
        assert size == 1 and witness == ("b",)


class TestSubdivide:
    def test_single_edge(self):
        sub = r.subdivide_edge_twice(graph_of([("a", "b")]), ("a", "b"))
        assert len(sub.vertices) == 4 and len(sub.edges) == 3

    def test_triangle(self):
        sub = r.subdivide_edge_twice(
            graph_of([("a", "b"), ("b", "c"), ("c", "a")]), ("b", "c"))
        assert len(sub.vertices) == 5 and len(sub.edges) == 5

    def test_missing_edge(self):
        with pytest.raises(NoSuchEdge):
            r.subdivide_edge_twice(graph_of([("a", "b")]), ("a", "c"))

    def test_vc_increases_by_one(self):
        graph = graph_of([("a", "b"), ("b", "c"), ("c", "a")])
        base = r.min_vertex_cover(graph)[0]
        for e in graph.edges:
            assert r.min_vertex_cover(
                r.subdivide_edge_twice(graph, e))[0] == base + 1


class TestBarRepValidation:
    def test_fixtures_validate(self):
        for name in ("k2", "c3", "c4", "k4_minus_edge"):
            graph, barrep = load_fixture_graph(name)
            assert set(barrep.bars) == set(graph.vertices)

    def test_strip_outside_bar(self):
        graph = graph_of([("a", "b")])
        with pytest.raises(BarRepInvalid):
            r.validate_bar_representation(
                graph, {"a": (0, (0, 4)), "b": (10, (0, 4))},
                {("a", "b"): (5, 6)})

    def test_overlapping_strips(self):
        graph = graph_of([("a", "b"), ("b", "c"), ("a", "c")])
        bars = {"a": (0, (0, 10)), "b": (10, (0, 10)), "c": (20, (0, 10))}
        with pytest.raises(BarRepInvalid):
            r.validate_bar_representation(
                graph, bars, {("a", "b"): (1, 3), ("b", "c"): (2, 4),
                              ("a", "c"): (6, 7)})

    def test_strip_through_bar(self):
        graph = graph_of([("a", "b"), ("b", "c"), ("a", "c")])
        bars = {"a": (0, (0, 10)), "b": (10, (0, 10)), "c": (20, (0, 10))}
        with pytest.raises(BarRepInvalid):
            r.validate_bar_representation(
                graph, bars, {("a", "b"): (1, 2), ("b", "c"): (4, 5),
                              ("a", "c"): (7, 8)})

    def test_missing_neighbour_below(self):
        graph = graph_of([("a", "b"), ("b", "c"), ("a", "c")])
        # c placed between a and b has both neighbours above it -> b lacks none,
        # but a non-bottommost vertex without a neighbour below must fail
        bars = {"b": (0, (0, 10)), "c": (10, (0, 6)), "a": (20, (0, 10))}
        strips = {("a", "b"): (8, 9), ("b", "c"): (1, 2), ("a", "c"): (4, 5)}
        r.validate_bar_representation(graph, bars, strips)  # this order is fine
        bad = {"a": (0, (0, 10)), "b": (10, (0, 10)), "c": (20, (0, 6))}
        with pytest.raises(BarRepInvalid):
            # b and c both above a, but then b has no neighbour below? it has a.
            # break it harder: isolate strips so c's only neighbours sit below
            r.validate_bar_representation(
                graph_of([("a", "b"), ("a", "c"), ("b", "c")]),
                {"a": (0, (0, 10)), "c": (10, (0, 6)), "b": (5, (7, 10))},
                {("a", "b"): (8, 9), ("a", "c"): (1, 2), ("b", "c"): (4, 5)})


class TestBuildDisconnected:
    def test_k2_structure(self):
        graph, barrep = load_fixture_graph("k2")
        scene, plan = r.build_disconnected(graph, barrep, 2)
        assert len(scene.components) == 3
        vgs = [plan.placements[k] for k in plan.seq if k[0] == "v"]
        assert all(len(p.boxes) == 3 and len(p.channels) == 2 for p in vgs)
        egs = [plan.placements[k] for k in plan.seq if k[0] == "e"]
        assert len(egs) == 1 and len(egs[0].boxes) == 1

    def test_c3_structure(self):
        graph, barrep = load_fixture_graph("c3")
        scene, plan = r.build_disconnected(graph, barrep, 2)
        assert len(scene.components) == 6

    def test_c3_k4_box_counts(self):
        graph, barrep = load_fixture_graph("c3")
        scene, plan = r.build_disconnected(graph, barrep, 4)
        vgs = [plan.placements[k] for k in plan.seq if k[0] == "v"]
        assert all(len(p.boxes) == 5 and len(p.channels) == 4 for p in vgs)

    def test_odd_k_rejected(self):
        graph, barrep = load_fixture_graph("k2")
        with pytest.raises(ValueError):
            r.build_disconnected(graph, barrep, 3)

    def test_channels_inside_box_avoid_strips(self):
        for name in ("k2", "c3", "c4", "k4_minus_edge"):
            graph, barrep = load_fixture_graph(name)
            scene, plan = r.build_disconnected(graph, barrep, 2)
            strips = list(plan.strips_x.values())
            for key in plan.seq:
                p = plan.placements[key]
                if p.kind != "vertex":
                    continue
                for cx1, _, cx2, _ in p.channels:
                    assert p.x1 < cx1 and cx2 < p.x2
                    assert all(cx1 > s2 or cx2 < s1 for s1, s2 in strips)

    def test_gadget_bands_disjoint(self):
        graph, barrep = load_fixture_graph("c3")
        _, plan = r.build_disconnected(graph, barrep, 2)
        bands = sorted((plan.placements[k].base, plan.placements[k].top)
                       for k in plan.seq)
        for (_, t1), (b2, _) in zip(bands, bands[1:]):
            assert t1 < b2

    def test_scene_is_valid_and_even(self):
        graph, barrep = load_fixture_graph("c4")
        scene, _ = r.build_disconnected(graph, barrep, 2)
        for _, ring in scene.rings():
            assert all(x % 2 == 0 and y % 2 == 0 for x, y in ring)


class TestConnect:
    def test_k2(self):
        graph, barrep = load_fixture_graph("k2")
        scene, plan = r.connect(r.build_disconnected(graph, barrep, 2)[1])
        acc = plan.accounting()
        assert len(scene.components) == 1
        assert g.is_y_monotone(scene)
        assert acc["N_s"] == 0 and acc["N_c"] == 2

    def test_c3_accounting(self):
        graph, barrep = load_fixture_graph("c3")
        scene, plan = r.build_connected(graph, barrep, 2)
        acc = plan.accounting()
        assert len(scene.components) == 1 and g.is_y_monotone(scene)
        assert acc["N_c"] == acc["n"] + acc["m"] + 2 * acc["N_s"] - 1
        # independent recount from the subdivision log
        assert acc["N_s"] == 2 * len(plan.events)
        assert acc["n_prime"] == acc["n"] + acc["N_s"]
        assert acc["m_prime"] == acc["m"] + acc["N_s"]

    def test_vertex_count_polynomial(self):
        graph, barrep = load_fixture_graph("c3")
        scene, plan = r.build_connected(graph, barrep, 2)
        acc = plan.accounting()
        bound = 80 * (acc["n"] + acc["m"] + acc["N_s"])
        assert scene.vertex_count() <= bound

    def test_connected_fixtures_validate(self):
        for name in ("c4", "k4_minus_edge"):
            graph, barrep = load_fixture_graph(name)
            scene, plan = r.build_connected(graph, barrep, 2)
            assert len(scene.components) == 1
            assert g.is_y_monotone(scene)
            acc = plan.accounting()
            assert acc["N_c"] == acc["n_prime"] + acc["m_prime"] - 1


class TestExpectedGuardCount:
    def test_disconnected_c3(self):
        graph, barrep = load_fixture_graph("c3")
        _, plan = r.build_disconnected(graph, barrep, 2)
        assert r.expected_guard_count(plan, 2) == 5

    def test_disconnected_k2(self):
        graph, barrep = load_fixture_graph("k2")
        _, plan = r.build_disconnected(graph, barrep, 2)
        assert r.expected_guard_count(plan, 1) == 3

    def test_connected_k2(self):
        graph, barrep = load_fixture_graph("k2")
        _, plan = r.build_connected(graph, barrep, 2)
        assert r.expected_guard_count(plan, 1) == 5
