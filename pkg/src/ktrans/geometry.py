"""Exact scene model for orthogonal polygons and axis-parallel crossing primitives.

Coordinates are *internal units*: validated input integers are doubled, so
every polygon feature sits on an even value and any odd value is guaranteed
to be off every edge line.  All arithmetic is exact (int, with Fractions
accepted in point queries); there is no floating point anywhere.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .errors import (NonOrthogonalEdge, OddVertexCount, OverlappingComponents,
                     PinchVertex, SceneValidationError, SelfIntersection)

COORD_LIMIT = 1 << 30  # magnitude bound, internal units

HORIZONTAL = "h"
VERTICAL = "v"

INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int


@dataclass(frozen=True, order=True)
class OrthoSegment:
    """Axis-parallel segment: y == fixed for "h", x == fixed for "v"."""

    axis: str
    fixed: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.axis not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"bad axis {self.axis!r}")
        if self.lo > self.hi:
            raise ValueError(f"reversed span [{self.lo}, {self.hi}]")

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def endpoints(self) -> tuple[Point, Point]:
        if self.axis == HORIZONTAL:
            return Point(self.lo, self.fixed), Point(self.hi, self.fixed)
        return Point(self.fixed, self.lo), Point(self.fixed, self.hi)

    def contains_point(self, p: Point) -> bool:
        if self.axis == HORIZONTAL:
            return p.y == self.fixed and self.lo <= p.x <= self.hi
        return p.x == self.fixed and self.lo <= p.y <= self.hi


@dataclass(frozen=True)
class Edge:
    """One polygon edge with its provenance and interior side.

    interior_side is +1 when the scene interior lies at greater perpendicular
    coordinate (above a horizontal edge / right of a vertical edge), else -1.
    """

    axis: str
    fixed: int
    lo: int
    hi: int
    interior_side: int
    eid: tuple[int, int, int]  # (component, ring, index); ring 0 is the outer

    @property
    def segment(self) -> OrthoSegment:
        return OrthoSegment(self.axis, self.fixed, self.lo, self.hi)


@dataclass(frozen=True)
class PolygonWithHoles:
    outer: tuple[tuple[int, int], ...]
    holes: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class Scene:
    """One or more disjoint orthogonal polygons-with-holes, internal units."""

    components: tuple[PolygonWithHoles, ...]

    def rings(self):
        for ci, comp in enumerate(self.components):
            yield (ci, 0), comp.outer
            for hi, hole in enumerate(comp.holes):
                yield (ci, hi + 1), hole

    def vertex_count(self) -> int:
        return sum(len(ring) for _, ring in self.rings())

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [x for _, ring in self.rings() for x, _ in ring]
        ys = [y for _, ring in self.rings() for _, y in ring]
        return min(xs), min(ys), max(xs), max(ys)


# ---------------------------------------------------------------------------
# construction / validation
# ---------------------------------------------------------------------------

def _shoelace2(ring) -> int:
    s = 0
    for (x1, y1), (x2, y2) in zip(ring, ring[1:] + ring[:1]):
        s += x1 * y2 - x2 * y1
    return s


def _check_ring(ring, rid) -> list[tuple[int, int]]:
    """Validate one ring (internal units) and return it normalized to a list."""
    pts = [tuple(p) for p in ring]
    n = len(pts)
    axes = []
    for i in range(n):
        (x1, y1), (x2, y2) = pts[i], pts[(i + 1) % n]
        if (x1 == x2) == (y1 == y2):
            raise NonOrthogonalEdge("edge not axis-parallel", ring=rid,
                                    vertex=(x1, y1))
        axes.append(HORIZONTAL if y1 == y2 else VERTICAL)
    if n % 2 != 0:
        raise OddVertexCount("odd vertex count", ring=rid, vertex=pts[0])
    if n < 4:
        raise OddVertexCount("ring needs at least 4 vertices", ring=rid,
                             vertex=pts[0] if pts else None)
    if len(set(pts)) != n:
        dup = next(p for p in pts if pts.count(p) > 1)
        raise PinchVertex("repeated vertex", ring=rid, vertex=dup)
    for i in range(n):
        if axes[i] == axes[(i + 1) % n]:
            raise NonOrthogonalEdge("consecutive collinear edges", ring=rid,
                                    vertex=pts[(i + 1) % n])
    return pts


def _ring_edges(pts):
    n = len(pts)
    out = []
    for i in range(n):
        (x1, y1), (x2, y2) = pts[i], pts[(i + 1) % n]
        if y1 == y2:
            out.append((HORIZONTAL, y1, min(x1, x2), max(x1, x2), i))
        else:
            out.append((VERTICAL, x1, min(y1, y2), max(y1, y2), i))
    return out


def _segments_touch(a, b) -> bool:
    """Closed intersection test for two axis-parallel segments."""
    ax, af, al, ah, _ = a
    bx, bf, bl, bh, _ = b
    if ax == bx:
        return af == bf and al <= bh and bl <= ah
    if ax == HORIZONTAL:
        return al <= bf <= ah and bl <= af <= bh
    return bl <= af <= bh and al <= bf <= ah


def _check_simple(pts, rid):
    edges = _ring_edges(pts)
    n = len(edges)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent: share exactly the common vertex
            if _segments_touch(edges[i], edges[j]):
                raise SelfIntersection("non-adjacent edges intersect",
                                       ring=rid, vertex=pts[j])


def _point_in_ring(pts, x, y) -> bool:
    """Strict interior test for a single ring (even-odd, half-open rule)."""
    inside = False
    n = len(pts)
    for i in range(n):
        (x1, y1), (x2, y2) = pts[i], pts[(i + 1) % n]
        if x1 == x2 and min(y1, y2) <= y < max(y1, y2) and x1 > x:
            inside = not inside
    return inside


def validate_scene(raw_components) -> Scene:
    """Validate raw rings (integer input units) and build an internal Scene.

    raw_components: sequence of {"outer": ring, "holes": [ring, ...]} mappings
    (or (outer, holes) pairs).  Coordinates are doubled, orientation is
    normalized to outer-CCW / holes-CW, and all invariants are checked.
    """
    comps = []
    for ci, rawcomp in enumerate(raw_components):
        if isinstance(rawcomp, dict):
            outer, holes = rawcomp["outer"], rawcomp.get("holes", [])
        else:
            outer, holes = rawcomp
        rings = []
        for ri, ring in enumerate([outer] + list(holes)):
            rid = (ci, ri)
            pts = []
            for p in ring:
                x, y = p
                if not isinstance(x, int) or not isinstance(y, int):
                    raise SceneValidationError("non-integer coordinate",
                                               ring=rid, vertex=tuple(p))
                xi, yi = 2 * x, 2 * y
                if abs(xi) >= COORD_LIMIT or abs(yi) >= COORD_LIMIT:
                    raise SceneValidationError("coordinate out of range",
                                               ring=rid, vertex=(x, y))
                pts.append((xi, yi))
            pts = _check_ring(pts, rid)
            _check_simple(pts, rid)
            # orientation: outer CCW (positive doubled area), holes CW
            area2 = _shoelace2(pts)
            want_ccw = ri == 0
            if (area2 > 0) != want_ccw:
                pts = [pts[0]] + pts[:0:-1]
            rings.append(tuple(pts))
        comps.append((tuple(rings[0]), tuple(rings[1:])))

    # cross-ring disjointness (within and across components)
    flat = []
    for ci, (outer, holes) in enumerate(comps):
        flat.append(((ci, 0), outer))
        for hi, hole in enumerate(holes):
            flat.append(((ci, hi + 1), hole))
    for i in range(len(flat)):
        for j in range(i + 1, len(flat)):
            (rid_a, ring_a), (rid_b, ring_b) = flat[i], flat[j]
            ea, eb = _ring_edges(list(ring_a)), _ring_edges(list(ring_b))
            for sa in ea:
                for sb in eb:
                    if _segments_touch(sa, sb):
                        raise OverlappingComponents(
                            f"rings {rid_a} and {rid_b} share boundary points",
                            ring=rid_b, vertex=ring_b[sb[4]])

    # containment structure
    for ci, (outer, holes) in enumerate(comps):
        for hi, hole in enumerate(holes):
            hx, hy = hole[0]
            if not _point_in_ring(list(outer), hx, hy):
                raise OverlappingComponents("hole not inside its outer ring",
                                            ring=(ci, hi + 1), vertex=hole[0])
            for hj, other in enumerate(holes):
                if hi != hj and _point_in_ring(list(other), hx, hy):
                    raise OverlappingComponents("nested holes",
                                                ring=(ci, hi + 1),
                                                vertex=hole[0])
    for ci, (outer_a, holes_a) in enumerate(comps):
        for cj, (outer_b, _) in enumerate(comps):
            if ci == cj:
                continue
            bx, by = outer_b[0]
            if _point_in_ring(list(outer_a), bx, by):
                # legal only when component cj nests inside a hole of ci
                if not any(_point_in_ring(list(h), bx, by) for h in holes_a):
                    raise OverlappingComponents(
                        f"component {cj} overlaps interior of component {ci}",
                        ring=(cj, 0), vertex=outer_b[0])

    return Scene(tuple(PolygonWithHoles(outer, holes)
                       for outer, holes in comps))


def scene_edges(scene: Scene) -> tuple[Edge, ...]:
    """All edges of the scene with interior sides (left of travel direction)."""
    out = []
    for rid, ring in scene.rings():
        n = len(ring)
        for i in range(n):
            (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
            if y1 == y2:
                side = 1 if x2 > x1 else -1  # interior above iff travelling +x
                out.append(Edge(HORIZONTAL, y1, min(x1, x2), max(x1, x2),
                                side, rid + (i,)))
            else:
                side = -1 if y2 > y1 else 1  # interior left iff travelling +y
                out.append(Edge(VERTICAL, x1, min(y1, y2), max(y1, y2),
                                side, rid + (i,)))
    return tuple(out)


# ---------------------------------------------------------------------------
# point queries
# ---------------------------------------------------------------------------

def point_location(scene: Scene, p) -> str:
    """Exact interior/boundary/exterior classification of a point.

    Accepts Point or an (x, y) pair; coordinates may be ints or Fractions.
    """
    x, y = (p.x, p.y) if isinstance(p, Point) else p
    crossings = 0
    on_boundary = False
    for _, ring in scene.rings():
        n = len(ring)
        for i in range(n):
            (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
            if y1 == y2:
                if y == y1 and min(x1, x2) <= x <= max(x1, x2):
                    on_boundary = True
            else:
                if x == x1 and min(y1, y2) <= y <= max(y1, y2):
                    on_boundary = True
                if min(y1, y2) <= y < max(y1, y2) and x1 > x:
                    crossings += 1
    if on_boundary:
        return BOUNDARY
    return INTERIOR if crossings % 2 == 1 else EXTERIOR


# ---------------------------------------------------------------------------
# line models: the classification of one axis-parallel (possibly side-biased)
# line into maximal constant-class intervals
# ---------------------------------------------------------------------------

class LineModel:
    """Atoms of one line: open intervals of constant in/out/boundary class.

    The line runs parallel to `axis` at coordinate `c`; `bias` of +1/-1 means
    the line is displaced infinitesimally toward greater/smaller perpendicular
    coordinate (used to walk along an edge line on a chosen side, with purely
    integer tests).
    """

    __slots__ = ("bounds", "classes", "_nb_pos", "_cum", "_next_nb", "_prev_nb")

    def __init__(self, scene: Scene, edges, axis: str, c: int, bias: int):
        perp = [e for e in edges if e.axis != axis]
        along = [e for e in edges if e.axis == axis]
        crossings = set()
        touches = set()
        for e in perp:
            if bias == 0:
                if e.lo < c < e.hi:
                    crossings.add(e.fixed)
                elif e.lo == c or e.hi == c:
                    touches.add(e.fixed)
            elif bias > 0:
                if e.lo <= c < e.hi:
                    crossings.add(e.fixed)
            else:
                if e.lo < c <= e.hi:
                    crossings.add(e.fixed)
        runs = []
        if bias == 0:
            spans = sorted((e.lo, e.hi) for e in along if e.fixed == c)
            for lo, hi in spans:
                if runs and lo <= runs[-1][1]:
                    runs[-1][1] = max(runs[-1][1], hi)
                else:
                    runs.append([lo, hi])
        bounds = sorted(crossings | touches
                        | {x for r in runs for x in r})
        self.bounds = bounds
        n_atoms = len(bounds) + 1

        need_point_test = bias == 0 and (runs or touches)
        classes = []
        parity = 0
        for i in range(n_atoms):
            if i > 0 and bounds[i - 1] in crossings:
                parity ^= 1
            if i == 0 or i == n_atoms - 1:
                classes.append(EXTERIOR)
                continue
            lo, hi = bounds[i - 1], bounds[i]
            in_run = any(r[0] <= lo and hi <= r[1] for r in runs)
            if in_run:
                classes.append(BOUNDARY)
            elif need_point_test:
                mid = (lo + hi) // 2 if (lo + hi) % 2 == 0 else Fraction(lo + hi, 2)
                q = (mid, c) if axis == HORIZONTAL else (c, mid)
                classes.append(point_location(scene, q))
            else:
                classes.append(INTERIOR if parity else EXTERIOR)
        self.classes = classes

        # prefix machinery for O(log) transition queries
        nb_pos = [-1] * n_atoms
        cum = [0]
        prev_cls = None
        next_nb = [None] * (n_atoms + 1)
        prev_nb = [None] * (n_atoms + 1)
        k = -1
        for i, cls in enumerate(classes):
            if cls != BOUNDARY:
                k += 1
                nb_pos[i] = k
                if prev_cls is not None:
                    cum.append(cum[-1] + (1 if cls != prev_cls else 0))
                prev_cls = cls
        self._nb_pos = nb_pos
        self._cum = cum
        nxt = None
        for i in range(n_atoms - 1, -1, -1):
            if nb_pos[i] >= 0:
                nxt = nb_pos[i]
            next_nb[i] = nxt
        prv = None
        for i in range(n_atoms):
            if nb_pos[i] >= 0:
                prv = nb_pos[i]
            prev_nb[i] = prv
        self._next_nb = next_nb
        self._prev_nb = prev_nb

    def _atom_range(self, a: int, b: int) -> tuple[int, int]:
        first = bisect.bisect_right(self.bounds, a)
        last = bisect.bisect_left(self.bounds, b)
        return first, last

    def transitions(self, a, b) -> int:
        """Interior/exterior side changes along the open run from a to b."""
        if a > b:
            a, b = b, a
        if a == b:
            return 0
        first, last = self._atom_range(a, b)
        if first > last:
            return 0
        f1 = self._next_nb[first]
        f2 = self._prev_nb[last]
        if f1 is None or f2 is None or f1 > f2:
            return 0
        return self._cum[f2] - self._cum[f1]

    def atom_class(self, first: int) -> str:
        return self.classes[first]

    def segment_in_closure(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        first, last = self._atom_range(a, b)
        if first > last:  # zero-length at coordinate a
            i = bisect.bisect_left(self.bounds, a)
            if i < len(self.bounds) and self.bounds[i] == a:
                return True  # on an event coordinate: boundary or crossing
            return self.classes[bisect.bisect_right(self.bounds, a)] != EXTERIOR
        return all(self.classes[i] != EXTERIOR for i in range(first, last + 1))

    def closure_run(self, a: int, b: int) -> tuple[int, int]:
        """Maximal closure interval containing [a, b] (which must be one)."""
        if a > b:
            a, b = b, a
        first, last = self._atom_range(a, b)
        if first > last:
            first = last = bisect.bisect_right(self.bounds, a)
            if self.classes[first] == EXTERIOR:
                first = last = bisect.bisect_right(self.bounds, a - 1)
        i, j = first, last
        while i > 0 and self.classes[i - 1] != EXTERIOR:
            i -= 1
        n = len(self.classes)
        while j + 1 < n and self.classes[j + 1] != EXTERIOR:
            j += 1
        if i == 0 or j == n - 1:
            raise ValueError("unbounded closure run: segment outside scene")
        return self.bounds[i - 1], self.bounds[j]

    def interior_stretches(self) -> list[tuple[int, int]]:
        """Maximal strictly-interior intervals along the line, in order."""
        out = []
        start = None
        for i, cls in enumerate(self.classes):
            if cls == INTERIOR and start is None:
                start = self.bounds[i - 1]
            elif cls != INTERIOR and start is not None:
                out.append((start, self.bounds[i - 1]))
                start = None
        return out


class LineOracle:
    """Per-scene cache of LineModels keyed by (axis, coordinate, bias)."""

    def __init__(self, scene: Scene):
        self.scene = scene
        self.edges = scene_edges(scene)
        self._models: dict[tuple[str, int, int], LineModel] = {}

    def model(self, axis: str, c: int, bias: int = 0) -> LineModel:
        key = (axis, c, bias)
        m = self._models.get(key)
        if m is None:
            m = LineModel(self.scene, self.edges, axis, c, bias)
            self._models[key] = m
        return m


# ---------------------------------------------------------------------------
# segment / grid queries
# ---------------------------------------------------------------------------

def transition_count(scene: Scene, seg: OrthoSegment,
                     oracle: LineOracle | None = None) -> int:
    """Number of interior<->exterior transitions along the segment lo->hi.

    Boundary touches and collinear runs that do not change side count 0;
    each proper crossing of the scene boundary counts 1; segment endpoints
    lying on the boundary count 0.
    """
    if oracle is None:
        oracle = LineOracle(scene)
    return oracle.model(seg.axis, seg.fixed, 0).transitions(seg.lo, seg.hi)


@dataclass(frozen=True)
class UnitGrid:
    xs: tuple[int, ...]          # sorted distinct vertical-edge coordinates
    ys: tuple[int, ...]          # sorted distinct horizontal-edge coordinates
    interior: tuple[tuple[bool, ...], ...]  # [ix][iy] cell interior flags

    def cell(self, ix: int, iy: int) -> tuple[int, int, int, int]:
        return self.xs[ix], self.ys[iy], self.xs[ix + 1], self.ys[iy + 1]


def unit_grid(scene: Scene) -> UnitGrid:
    """Elementary grid of the scene with an interior-cell membership matrix."""
    edges = scene_edges(scene)
    xs = sorted({e.fixed for e in edges if e.axis == VERTICAL})
    ys = sorted({e.fixed for e in edges if e.axis == HORIZONTAL})
    cols = []
    for ix in range(len(xs) - 1):
        mx = (xs[ix] + xs[ix + 1]) // 2
        col = []
        for iy in range(len(ys) - 1):
            my = (ys[iy] + ys[iy + 1]) // 2
            col.append(point_location(scene, (mx, my)) == INTERIOR)
        cols.append(tuple(col))
    return UnitGrid(tuple(xs), tuple(ys), tuple(cols))


def is_y_monotone(scene: Scene) -> bool:
    """True iff one hole-free component whose every horizontal line meets it
    in at most one interval."""
    if len(scene.components) != 1 or scene.components[0].holes:
        return False
    grid = unit_grid(scene)
    nx = len(grid.xs) - 1
    for iy in range(len(grid.ys) - 1):
        runs = 0
        prev = False
        for ix in range(nx):
            cur = grid.interior[ix][iy]
            if cur and not prev:
                runs += 1
            prev = cur
        if runs > 1:
            return False
    return True


def shoelace_area2(scene: Scene) -> int:
    """Twice the scene area (outer rings minus holes), internal units."""
    total = 0
    for comp in scene.components:
        total += abs(_shoelace2(list(comp.outer)))
        for hole in comp.holes:
            total -= abs(_shoelace2(list(hole)))
    return total
