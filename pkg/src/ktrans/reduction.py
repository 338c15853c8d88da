"""Hardness-instance generation: vertex cover to sliding k-transmitter guarding.

From a planar 2-connected graph with a bar visibility representation, build
a y-monotone orthogonal scene of vertex-, edge-, and connector-gadgets whose
minimum horizontal guard count encodes the graph's minimum vertex cover.
The disconnected form places one gadget per vertex and edge on disjoint
y-bands; the connected form joins consecutive gadgets with connector
gadgets, subdividing edges whenever a connection would cross a vertical
line-of-sight between an edge gadget and one of its endpoint gadgets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import geometry as g
from . import hitting as h
from . import rectunion
from .decomposition import build_instance
from .errors import (BarRepInvalid, LemmaViolated, NoSuchEdge, RoutingFailed,
                     TooLarge)

Rect = tuple[int, int, int, int]  # scene input units here, not internal
EdgeKey = tuple[str, str]
GadgetKey = tuple[str, object]    # ("v", vid) or ("e", EdgeKey)

X_SCALE = 8      # bar-representation x unit -> scene input units
BOX_H = 4
CHAN_W = 2
CHAN_H = 2
EDGE_BOX = 2
EDGE_GAP = 2     # gap between the stacked boxes of one edge gadget
CHAN_INSET = 2
SUB_BAR_HALF = 8     # half-width of bars given to subdivision vertices
MAX_PASSES = 64


def edge_key(u: str, v: str) -> EdgeKey:
    return (u, v) if u <= v else (v, u)


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphInstance:
    vertices: tuple[str, ...]
    edges: tuple[EdgeKey, ...]
    planar_declared: bool = True
    two_connected_declared: bool = True

    def adjacency(self) -> dict[str, set[str]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def _connected(vertices, adj) -> bool:
    if not vertices:
        return True
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def validate_graph(vertices, edges, planar=True, two_connected=True
                   ) -> GraphInstance:
    """Simple connected graph; 2-connectivity brute-checked up to 8 vertices.

    Planarity is accepted as declared: a valid bar representation is itself
    a planarity certificate for the instances this module consumes.
    """
    vs = tuple(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertex ids")
    canon = []
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at {u}")
        k = edge_key(u, v)
        if k in canon:
            raise ValueError(f"multi-edge {k}")
        canon.append(k)
    graph = GraphInstance(vs, tuple(canon), planar, two_connected)
    adj = graph.adjacency()
    if not _connected(vs, adj):
        raise ValueError("graph not connected")
    if two_connected and 3 <= len(vs) <= 8:
        for v in vs:
            rest = [w for w in vs if w != v]
            radj = {w: adj[w] - {v} for w in rest}
            if not _connected(rest, radj):
                raise ValueError(f"not 2-connected: articulation at {v}")
    return graph


def min_vertex_cover(graph: GraphInstance) -> tuple[int, tuple[str, ...]]:
    """Exact minimum vertex cover; lexicographically least witness."""
    if len(graph.vertices) > 20:
        raise TooLarge(f"{len(graph.vertices)} vertices exceeds the bound of 20")
    vs = sorted(graph.vertices)
    if not graph.edges:
        return 0, ()
    for size in range(0, len(vs) + 1):
        for cand in itertools.combinations(vs, size):
            cset = set(cand)
            if all(u in cset or v in cset for u, v in graph.edges):
                return size, cand
    raise AssertionError("unreachable: full vertex set always covers")


def subdivide_edge_twice(graph: GraphInstance, edge) -> GraphInstance:
    """Replace edge (u, v) with the path u-a-b-v for fresh a, b."""
    k = edge_key(*edge)
    if k not in graph.edges:
        raise NoSuchEdge(f"{edge}")
    u, v = k
    base = f"{u}~{v}"
    n = 1
    while f"{base}~a{n}" in graph.vertices or f"{base}~b{n}" in graph.vertices:
        n += 1
    a, b = f"{base}~a{n}", f"{base}~b{n}"
    edges = [e for e in graph.edges if e != k]
    edges += [edge_key(u, a), edge_key(a, b), edge_key(b, v)]
    return GraphInstance(graph.vertices + (a, b), tuple(edges),
                         graph.planar_declared, graph.two_connected_declared)


# ---------------------------------------------------------------------------
# bar representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BarRepresentation:
    bars: dict        # vid -> (y, (x1, x2)) in representation units
    strips: dict      # EdgeKey -> (x1, x2)


def validate_bar_representation(graph: GraphInstance, bars, strips
                                ) -> BarRepresentation:
    strips = {edge_key(*e): tuple(s) for e, s in strips.items()}
    for v in graph.vertices:
        if v not in bars:
            raise BarRepInvalid(f"vertex {v} has no bar")
    ys = [bars[v][0] for v in graph.vertices]
    if len(set(ys)) != len(ys):
        raise BarRepInvalid("bar y-coordinates not pairwise distinct")
    for e in graph.edges:
        if e not in strips:
            raise BarRepInvalid(f"edge {e} has no strip")
    spans = sorted(strips.values())
    for (a1, a2), (b1, b2) in zip(spans, spans[1:]):
        if b1 <= a2:
            raise BarRepInvalid(f"strips overlap near x={b1}")
    for s1, s2 in spans:
        if s1 >= s2:
            raise BarRepInvalid("strip of non-positive width")
    for (u, v), (s1, s2) in strips.items():
        for w in (u, v):
            bx1, bx2 = bars[w][1]
            if not (bx1 <= s1 and s2 <= bx2):
                raise BarRepInvalid(f"strip of {(u, v)} outside bar of {w}")
        ylo, yhi = sorted((bars[u][0], bars[v][0]))
        for w in graph.vertices:
            wy = bars[w][0]
            if ylo < wy < yhi:
                wx1, wx2 = bars[w][1]
                if s1 < wx2 and wx1 < s2:
                    raise BarRepInvalid(
                        f"strip of {(u, v)} intersects bar of {w}")
    order = sorted(graph.vertices, key=lambda v: bars[v][0])
    adj = graph.adjacency()
    for i, v in enumerate(order):
        has_below = any(bars[w][0] < bars[v][0] for w in adj[v])
        has_above = any(bars[w][0] > bars[v][0] for w in adj[v])
        if i > 0 and not has_below:
            raise BarRepInvalid(
                f"non-bottommost vertex {v} has no neighbour below")
        if i < len(order) - 1 and not has_above:
            raise BarRepInvalid(f"non-topmost vertex {v} has no neighbour above")
    return BarRepresentation({v: (b[0], tuple(b[1])) for v, b in bars.items()},
                             strips)


# ---------------------------------------------------------------------------
# plan structures
# ---------------------------------------------------------------------------

@dataclass
class GadgetPlacement:
    kind: str                 # "vertex" | "edge" | "connector"
    key: object
    slot: int
    boxes: list               # Rects, bottom-to-top
    channels: list
    x1: int
    x2: int
    base: int
    top: int

    @property
    def middle_box(self) -> Rect:
        return self.boxes[len(self.boxes) // 2]

    def body_rects(self) -> list:
        return list(self.boxes) + list(self.channels)


@dataclass
class WalkStep:
    gap: int
    c: tuple[int, int]
    c_side: int
    c_prime: tuple[int, int]
    cp_side: int
    c_dblprime: tuple[int, int] | None
    exception: bool


@dataclass
class SubdivisionEvent:
    edge: EdgeKey
    new_vertices: tuple[str, str]
    new_edges: tuple[EdgeKey, EdgeKey, EdgeKey]
    relabelled: tuple[EdgeKey, EdgeKey]   # old EG edge -> new EG edge
    gap: int
    window: tuple[int, int]


@dataclass
class ReductionPlan:
    k: int
    graph0: GraphInstance
    barrep: BarRepresentation
    graph: GraphInstance
    bars_x: dict = field(default_factory=dict)    # vid -> (x1, x2) scene units
    strips_x: dict = field(default_factory=dict)  # EdgeKey -> (x1, x2)
    seq: list = field(default_factory=list)       # GadgetKey bottom-to-top
    set_tags: dict = field(default_factory=dict)  # GadgetKey -> (set_id, last)
    shapes: dict = field(default_factory=dict)    # GadgetKey -> "S" | "Z"
    placements: dict = field(default_factory=dict)
    connectors: list = field(default_factory=list)
    steps: list = field(default_factory=list)
    events: list = field(default_factory=list)
    connected: bool = False
    scene: object = None
    fresh_counter: int = 0

    @property
    def n_s(self) -> int:
        return 2 * len(self.events)

    @property
    def n_c(self) -> int:
        return len(self.seq) - 1 if self.connected else 0

    def accounting(self) -> dict:
        return {
            "n": len(self.graph0.vertices),
            "m": len(self.graph0.edges),
            "n_prime": len(self.graph.vertices),
            "m_prime": len(self.graph.edges),
            "N_s": self.n_s,
            "N_c": self.n_c,
            "kprime_offset": self.n_s // 2,
        }


# ---------------------------------------------------------------------------
# gadget geometry
# ---------------------------------------------------------------------------

def _slot_pitch(k: int) -> int:
    return 12 * k + 16


def _vertex_height(k: int) -> int:
    return (k + 1) * BOX_H + k * CHAN_H


def _channel_span(x1: int, x2: int, right: bool, strips) -> tuple[int, int]:
    """Channel x-range at the requested end, slid inward off any strip."""
    if right:
        a, step = x2 - CHAN_INSET - CHAN_W, -1
    else:
        a, step = x1 + CHAN_INSET, 1
    while any(a <= s2 and s1 <= a + CHAN_W for s1, s2 in strips):
        a += step
        if not (x1 < a and a + CHAN_W < x2):
            raise BarRepInvalid(
                f"no channel space inside box [{x1}, {x2}] clear of strips")
    return a, a + CHAN_W


def _vertex_gadget(key, slot, x1, x2, base, k, shape, strips) -> GadgetPlacement:
    relevant = [s for s in strips if s[0] <= x2 and x1 <= s[1]]
    boxes, channels = [], []
    for j in range(k + 1):
        y = base + j * (BOX_H + CHAN_H)
        boxes.append((x1, y, x2, y + BOX_H))
    for j in range(k):
        right = (j % 2 == 0) == (shape == "S")
        cy = base + j * (BOX_H + CHAN_H) + BOX_H
        a, b = _channel_span(x1, x2, right, relevant)
        channels.append((a, cy, b, cy + CHAN_H))
    return GadgetPlacement("vertex", key, slot, boxes, channels,
                           x1, x2, base, base + _vertex_height(k))


def _edge_gadget(key, slot, strip, base, k) -> GadgetPlacement:
    """Stack of k/2 small boxes joined by half-width channels at
    alternating ends.

    A vertical line through the stack off the channel halves crosses k+2
    boundaries, so the stack insulates the vertex gadgets facing it from
    each other, while a guard in an outer box of an endpoint gadget still
    sees the whole stack at k crossings exactly.  For k=2 this is the
    classic single 2x2 box.
    """
    s1, s2 = strip
    cx = (s1 + s2) // 2
    half = EDGE_BOX // 2
    boxes, channels = [], []
    for i in range(k // 2):
        y = base + i * (EDGE_BOX + EDGE_GAP)
        boxes.append((cx - half, y, cx + half, y + EDGE_BOX))
        if i < k // 2 - 1:
            cx1, cx2 = (cx - half, cx) if i % 2 == 0 else (cx, cx + half)
            channels.append((cx1, y + EDGE_BOX, cx2, y + EDGE_BOX + EDGE_GAP))
    return GadgetPlacement("edge", key, slot, boxes, channels,
                           cx - half, cx + half, base, boxes[-1][3])


def _connector_rects(c, hs_b, cp, hs_t, k):
    """Boxes, channels, and neck rects of one connector gadget.

    The connector spans the full vertical gap from corner c on the gadget
    below to corner cp on the gadget above.  Each neck is a two-step zig-zag
    opening into the attached gadget at its corner and stepping outward, so
    vertical sight lines through the attachment keep their crossing count.
    The bottom channel has flexible height to absorb the gap.
    """
    cx, cy = c
    tx, ty = cp
    gap = ty - cy
    flex = gap - (6 * k + 6)
    if flex < CHAN_H:
        raise RoutingFailed(f"gap {gap} too small for a connector (k={k})")

    neck_b = [(cx - 1, cy, cx, cy + 1) if hs_b > 0 else
              (cx, cy, cx + 1, cy + 1),
              (cx - 1, cy + 1, cx + 1, cy + 2)]
    neck_t = [(tx - 1, ty - 1, tx, ty) if hs_t > 0 else
              (tx, ty - 1, tx + 1, ty),
              (tx - 1, ty - 2, tx + 1, ty - 1)]

    hull_l = min(cx - (8 if hs_b < 0 else 0), tx - (8 if hs_t < 0 else 0))
    hull_r = max(cx + (8 if hs_b > 0 else 0), tx + (8 if hs_t > 0 else 0))

    heights = [flex if j == 0 else CHAN_H for j in range(k)]
    spans = []
    for j in range(k + 1):
        if j == 0:
            spans.append((cx, hull_r) if hs_b > 0 else (hull_l, cx))
        elif j == k:
            spans.append((tx, hull_r) if hs_t > 0 else (hull_l, tx))
        else:
            spans.append((hull_l, hull_r))

    boxes, channels = [], []
    y = cy + 2
    for j in range(k + 1):
        boxes.append((spans[j][0], y, spans[j][1], y + BOX_H))
        y += BOX_H
        if j < k:
            lo = max(spans[j][0], spans[j + 1][0])
            hi = min(spans[j][1], spans[j + 1][1])
            right = (j % 2 == 0) == (hs_b < 0)
            a, b = _channel_span(lo, hi, right, [])
            channels.append((a, y, b, y + heights[j]))
            y += heights[j]
    if y != ty - 2:
        raise RoutingFailed("connector stack height mismatch")
    return boxes, channels, neck_b + neck_t


# ---------------------------------------------------------------------------
# layout and corridors
# ---------------------------------------------------------------------------

def _initial_sequence(graph: GraphInstance, barrep: BarRepresentation) -> list:
    """Vertices in bar order; edge gadgets at the midpoint of their
    endpoints' positions, jittered into slots of their own."""
    order = sorted(graph.vertices, key=lambda v: barrep.bars[v][0])
    pos = {v: i for i, v in enumerate(order)}
    entries = [(2 * pos[v], 0, ("v", v)) for v in order]
    for e in graph.edges:
        entries.append((pos[e[0]] + pos[e[1]], 1, ("e", e)))
    entries.sort(key=lambda t: (t[0], t[1], str(t[2])))
    return [key for _, _, key in entries]


def _layout(plan: ReductionPlan):
    pitch = _slot_pitch(plan.k)
    strips = sorted(plan.strips_x.values())
    plan.placements = {}
    for slot, key in enumerate(plan.seq):
        base = slot * pitch
        if key[0] == "v":
            x1, x2 = plan.bars_x[key[1]]
            shape = plan.shapes.get(key, "S")
            plan.placements[key] = _vertex_gadget(key, slot, x1, x2, base,
                                                  plan.k, shape, strips)
        else:
            plan.placements[key] = _edge_gadget(key, slot,
                                                plan.strips_x[key[1]], base,
                                                plan.k)


@dataclass(frozen=True)
class Corridor:
    edge: EdgeKey
    lo_pos: int
    hi_pos: int
    window: tuple[int, int]   # open x interval


def _corridors(plan: ReductionPlan) -> list[Corridor]:
    index = {key: i for i, key in enumerate(plan.seq)}
    out = []
    for e in plan.graph.edges:
        pe = index[("e", e)]
        s1, s2 = plan.strips_x[e]
        cx = (s1 + s2) // 2
        window = (cx - EDGE_BOX // 2, cx + EDGE_BOX // 2)
        for v in e:
            pv = index[("v", v)]
            out.append(Corridor(e, min(pe, pv), max(pe, pv), window))
    return out


def _crossed(corridors, gap: int, x_from: int, x_to: int) -> list[Corridor]:
    lo, hi = min(x_from, x_to), max(x_from, x_to)
    found = []
    for c in corridors:
        if not (c.lo_pos <= gap and c.hi_pos >= gap + 1):
            continue
        w1, w2 = c.window
        if lo == hi:
            if w1 < lo < w2:
                found.append(c)
        elif max(w1, lo) < min(w2, hi):
            found.append(c)
    found.sort(key=lambda c: c.window[0] + c.window[1],
               reverse=x_to < x_from)
    return found  # ordered along the sweep direction from the start corner


# ---------------------------------------------------------------------------
# scene emission
# ---------------------------------------------------------------------------

def _emit_scene(rects) -> g.Scene:
    return g.validate_scene(rectunion.union_components(rects))


def _gadget_rects(plan: ReductionPlan):
    rects = []
    for key in plan.seq:
        rects.extend(plan.placements[key].body_rects())
    return rects


def _assert_corridors_clear(plan: ReductionPlan, extra_rects):
    """No gadget or connector box may block a line-of-sight corridor."""
    for c in _corridors(plan):
        lo_key, hi_key = plan.seq[c.lo_pos], plan.seq[c.hi_pos]
        y1 = plan.placements[lo_key].top
        y2 = plan.placements[hi_key].base
        w1, w2 = c.window
        for key in plan.seq:
            if key in (lo_key, hi_key):
                continue
            for rx1, ry1, rx2, ry2 in plan.placements[key].body_rects():
                if max(rx1, w1) < min(rx2, w2) and max(ry1, y1) < min(ry2, y2):
                    raise RoutingFailed(
                        f"gadget {key} blocks line of sight of {c.edge}")
        for rx1, ry1, rx2, ry2 in extra_rects:
            if max(rx1, w1) < min(rx2, w2) and max(ry1, y1) < min(ry2, y2):
                raise RoutingFailed(
                    f"connector blocks line of sight of {c.edge}")


def build_disconnected(graph: GraphInstance, barrep: BarRepresentation,
                       k: int) -> tuple[g.Scene, ReductionPlan]:
    """Scene with one gadget per vertex and edge on disjoint y-bands."""
    if k <= 0 or k % 2 != 0:
        raise ValueError(f"k must be even and positive, got {k}")
    barrep = validate_bar_representation(graph, barrep.bars, barrep.strips)
    plan = ReductionPlan(k, graph, barrep, graph)
    plan.bars_x = {v: (X_SCALE * b[1][0], X_SCALE * b[1][1])
                   for v, b in barrep.bars.items()}
    plan.strips_x = {e: (X_SCALE * s[0], X_SCALE * s[1])
                     for e, s in barrep.strips.items()}
    plan.seq = _initial_sequence(graph, barrep)
    plan.shapes = {key: "S" for key in plan.seq if key[0] == "v"}
    _layout(plan)
    _assert_corridors_clear(plan, [])
    scene = _emit_scene(_gadget_rects(plan))
    expected = len(graph.vertices) + len(graph.edges)
    if len(scene.components) != expected:
        raise RoutingFailed(
            f"expected {expected} components, built {len(scene.components)}")
    plan.scene = scene
    return scene, plan


# ---------------------------------------------------------------------------
# connecting walk
# ---------------------------------------------------------------------------

def _corner(p: GadgetPlacement, where: str, side: int) -> tuple[int, int]:
    x = p.x2 if side > 0 else p.x1
    return (x, p.top if where == "top" else p.base)


def _subdivide_in_plan(plan: ReductionPlan, corridor: Corridor, gap: int):
    """Replace the corridor's edge by a twice-subdivided path; insert the
    four new gadgets into the gap, inside the old corridor's x-window."""
    e = corridor.edge
    pe = plan.seq.index(("e", e))
    plan.fresh_counter += 1
    a = f"s{plan.fresh_counter}a"
    b = f"s{plan.fresh_counter}b"
    w1, w2 = corridor.window
    wcx = (w1 + w2) // 2

    if corridor.lo_pos == pe:
        # edge gadget below the crossed span, far vertex above it
        far = plan.seq[corridor.hi_pos][1]
        near = e[0] if e[1] == far else e[1]
        new_eg_edge = edge_key(near, a)
        chain = [("v", a), ("e", edge_key(a, b)), ("v", b),
                 ("e", edge_key(b, far))]
        fresh_strip_edges = (edge_key(a, b), edge_key(b, far))
    else:
        # far vertex below the crossed span, edge gadget above it
        far = plan.seq[corridor.lo_pos][1]
        near = e[0] if e[1] == far else e[1]
        new_eg_edge = edge_key(b, near)
        chain = [("e", edge_key(far, a)), ("v", a), ("e", edge_key(a, b)),
                 ("v", b)]
        fresh_strip_edges = (edge_key(far, a), edge_key(a, b))

    old_strip = plan.strips_x.pop(e)
    plan.strips_x[new_eg_edge] = old_strip
    for fe in fresh_strip_edges:
        plan.strips_x[fe] = (wcx - 2, wcx + 2)
    new_edges = tuple(sorted(set(fresh_strip_edges) | {new_eg_edge}))
    edges = tuple(x for x in plan.graph.edges if x != e) + new_edges
    plan.graph = GraphInstance(plan.graph.vertices + (a, b), edges,
                               plan.graph.planar_declared,
                               plan.graph.two_connected_declared)
    plan.bars_x[a] = (wcx - SUB_BAR_HALF, wcx + SUB_BAR_HALF)
    plan.bars_x[b] = (wcx - SUB_BAR_HALF, wcx + SUB_BAR_HALF)

    plan.seq[pe] = ("e", new_eg_edge)
    set_id = len(plan.events)
    for off, key in enumerate(chain):
        plan.seq.insert(gap + 1 + off, key)
        plan.set_tags[key] = (set_id, off == len(chain) - 1)

    plan.events.append(SubdivisionEvent(
        e, (a, b), new_edges, (e, new_eg_edge), gap, corridor.window))


def _walk_pass(plan: ReductionPlan) -> bool:
    """One bottom-to-top connection pass.

    Returns True when the pass completed with steps and shapes recorded;
    False when it subdivided edges and the caller must start over.
    """
    _layout(plan)
    corridors = _corridors(plan)
    plan.steps = []
    plan.shapes = {key: "S" for key in plan.seq if key[0] == "v"}

    corner = _corner(plan.placements[plan.seq[0]], "top", +1)
    corner_side = +1

    for i in range(len(plan.seq) - 1):
        nxt = plan.seq[i + 1]
        pn = plan.placements[nxt]
        options = []
        for side in (-1, +1):
            cp = _corner(pn, "bottom", side)
            crossed = _crossed(corridors, i, corner[0], cp[0])
            options.append((len(crossed), side, cp, crossed))
        options.sort(key=lambda t: (t[0], t[1]))
        n_cross, cp_side, cp, crossed = options[0]

        if n_cross > 0:
            # nearest-first sets end up lowest: insert in reverse sweep order
            for c in reversed(crossed):
                _subdivide_in_plan(plan, c, i)
            return False

        exception = False
        cpp = None
        cpp_side = -cp_side
        if i + 1 < len(plan.seq) - 1:
            tag = plan.set_tags.get(nxt)
            if tag is not None and tag[1]:
                target = plan.placements[plan.seq[i + 2]]
                toward = +1 if target.x1 + target.x2 > pn.x1 + pn.x2 else -1
                exception = toward != -cp_side
                cpp_side = toward
            cpp = _corner(pn, "top", cpp_side)

        if nxt[0] == "v":
            # channels flow away from the entry corner
            plan.shapes[nxt] = "S" if -cp_side > 0 else "Z"
        plan.steps.append(WalkStep(i, corner, corner_side, cp, cp_side,
                                   cpp, exception))
        if cpp is not None:
            corner, corner_side = cpp, cpp_side
    return True


def connect(plan: ReductionPlan) -> tuple[g.Scene, ReductionPlan]:
    """Join all gadgets of a disconnected plan into one y-monotone scene."""
    for _ in range(MAX_PASSES):
        if _walk_pass(plan):
            break
    else:
        raise RoutingFailed(f"no stable routing after {MAX_PASSES} passes")
    _layout(plan)  # channels follow the shapes fixed by the final pass

    connector_rects = []
    plan.connectors = []
    for step in plan.steps:
        boxes, channels, necks = _connector_rects(
            step.c, step.c_side, step.c_prime, step.cp_side, plan.k)
        plan.connectors.append(GadgetPlacement(
            "connector", ("c", step.gap), -1, boxes, channels,
            min(r[0] for r in boxes), max(r[2] for r in boxes),
            boxes[0][1], boxes[-1][3]))
        connector_rects.extend(boxes + channels + necks)

    _assert_corridors_clear(plan, [r for c in plan.connectors
                                   for r in c.body_rects()])
    scene = _emit_scene(_gadget_rects(plan) + connector_rects)
    if len(scene.components) != 1:
        raise RoutingFailed(
            f"connected build produced {len(scene.components)} components")
    if not g.is_y_monotone(scene):
        raise RoutingFailed("connected build is not y-monotone")
    plan.connected = True
    plan.scene = scene
    acc = plan.accounting()
    if acc["N_c"] != acc["n_prime"] + acc["m_prime"] - 1:
        raise RoutingFailed("connector accounting mismatch")
    return scene, plan


def build_connected(graph: GraphInstance, barrep: BarRepresentation,
                    k: int) -> tuple[g.Scene, ReductionPlan]:
    _, plan = build_disconnected(graph, barrep, k)
    return connect(plan)


# ---------------------------------------------------------------------------
# accounting and structural checks
# ---------------------------------------------------------------------------

def expected_guard_count(plan: ReductionPlan, vc_size: int) -> int:
    """Guard count encoding the given vertex cover size for this plan."""
    acc = plan.accounting()
    kprime = vc_size + acc["kprime_offset"]
    if not plan.connected:
        return acc["n_prime"] + kprime
    return kprime + acc["n_prime"] + acc["N_c"]


def _segment_meets_rect(seg, rect) -> bool:
    x1, y1, x2, y2 = (2 * v for v in rect)  # rect to internal units
    if seg.axis == "h":
        return y1 <= seg.fixed <= y2 and seg.lo <= x2 and x1 <= seg.hi
    return x1 <= seg.fixed <= x2 and seg.lo <= y2 and y1 <= seg.hi


def _segment_inside_rect(seg, rect) -> bool:
    x1, y1, x2, y2 = (2 * v for v in rect)
    if seg.axis == "h":
        return y1 <= seg.fixed <= y2 and x1 <= seg.lo and seg.hi <= x2
    return x1 <= seg.fixed <= x2 and y1 <= seg.lo and seg.hi <= y2


@dataclass(frozen=True)
class LemmaReport:
    optimum_both: int
    optimum_horizontal: int
    n_optimal_horizontal: int
    edge_free_solution: tuple[int, ...]
    checked_vertices: int


def check_structural_lemmas(scene: g.Scene, plan: ReductionPlan, k: int,
                            cap: int | None = None) -> LemmaReport:
    """Empirical checks of the gadget properties on one generated instance.

    (a) restricting to horizontal guards does not change the optimum;
    (b) some optimal horizontal solution avoids every edge-gadget box;
    (c) in every optimal horizontal solution, a vertex gadget met by exactly
        one guard has that guard inside its middle box.
    Raises LemmaViolated with a witness on any failure.
    """
    inst_both = build_instance(scene, k, "both")
    inst_h = build_instance(scene, k, "h")
    opt_both = h.solve_exact(inst_both, cap).size
    opt_h = h.solve_exact(inst_h, cap).size
    if opt_both != opt_h:
        raise LemmaViolated(
            "vertical-replaceable",
            f"optimum {opt_both} (both) != {opt_h} (horizontal)")

    solutions = h.enumerate_minimum(inst_h, cap)
    edge_rects = [r for key in plan.seq if key[0] == "e"
                  for r in plan.placements[key].body_rects()]

    edge_free_solutions = []
    for sol in solutions:
        segments = [inst_h.guards[gid].segment for gid in sol]
        if not any(_segment_meets_rect(s, r)
                   for s in segments for r in edge_rects):
            edge_free_solutions.append(sol)
    if not edge_free_solutions:
        raise LemmaViolated(
            "edge-gadget-avoidance",
            f"all {len(solutions)} optimal solutions use an edge gadget")

    # the middle-box property is stated for guard sets that avoid edge
    # gadgets, so only those solutions are quantified over
    vertex_placements = [plan.placements[key]
                         for key in plan.seq if key[0] == "v"]
    for sol in edge_free_solutions:
        segments = [inst_h.guards[gid].segment for gid in sol]
        for p in vertex_placements:
            body = p.body_rects()
            meeting = [s for s in segments
                       if any(_segment_meets_rect(s, r) for r in body)]
            if len(meeting) == 1:
                s = meeting[0]
                if not _segment_inside_rect(s, p.middle_box):
                    raise LemmaViolated(
                        "middle-box",
                        f"solution {sol}: lone guard {s} of {p.key} "
                        f"not confined to the middle box")
    return LemmaReport(opt_both, opt_h, len(solutions),
                       tuple(edge_free_solutions[0]), len(vertex_placements))
