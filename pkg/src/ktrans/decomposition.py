"""Slice/cross discretization of an orthogonal scene.

For even k, every edge is extended along its line through up to k/2 walls
(maximal exterior gaps); the extended segments cut the interior into
rectangular slices.  Each slice carries a slice-segment anchored strictly
inside it, and each nonempty pixel (intersection of a horizontal and a
vertical slice) yields one cross supported by the two slice-segments.
Selecting guard segments that hit every cross is equivalent to guarding
the whole scene.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import geometry as g
from .errors import CrossOutsidePixel, NonRectangularFace

Rect = tuple[int, int, int, int]  # x1, y1, x2, y2 (internal units)


@dataclass(frozen=True)
class PartitionSegment:
    axis: str
    fixed: int
    lo: int
    hi: int
    origin: tuple[int, int, int]
    interior_side: int

    @property
    def segment(self) -> g.OrthoSegment:
        return g.OrthoSegment(self.axis, self.fixed, self.lo, self.hi)


@dataclass(frozen=True)
class Slice:
    rect: Rect
    orientation: str  # "h" or "v"
    sid: int


@dataclass(frozen=True)
class SliceSegment:
    sid: int
    segment: g.OrthoSegment  # anchor (fixed) is odd, strictly inside the slice


@dataclass(frozen=True)
class GuardSegment:
    axis: str
    fixed: int
    lo: int
    hi: int
    gid: int
    origins: tuple[tuple[int, int, int], ...]

    @property
    def segment(self) -> g.OrthoSegment:
        return g.OrthoSegment(self.axis, self.fixed, self.lo, self.hi)

    def sort_key(self):
        return (self.axis, self.fixed, self.lo, self.hi)


@dataclass(frozen=True)
class Cross:
    point: g.Point                 # odd x odd internal coordinates
    h_support: g.OrthoSegment      # slice-segment of the horizontal slice
    v_support: g.OrthoSegment      # slice-segment of the vertical slice
    h_slice: int
    v_slice: int
    pixel: Rect
    cid: int


@dataclass(frozen=True)
class Decomposition:
    k: int
    h_partition: tuple[PartitionSegment, ...]
    v_partition: tuple[PartitionSegment, ...]
    h_slices: tuple[Slice, ...]
    v_slices: tuple[Slice, ...]
    h_segments: tuple[SliceSegment, ...]
    v_segments: tuple[SliceSegment, ...]
    crosses: tuple[Cross, ...]


@dataclass(frozen=True)
class HittingInstance:
    guards: tuple[GuardSegment, ...]
    crosses: tuple[Cross, ...]
    hit_sets: tuple[int, ...]  # per guard, bitmask over cross ids
    orientation: str           # "h", "v" or "both"


def _require_even_k(k: int):
    if k < 0 or k % 2 != 0:
        raise ValueError(f"k must be even and non-negative, got {k}")


# ---------------------------------------------------------------------------
# wall-crossing extension
# ---------------------------------------------------------------------------

def extend_across_walls(scene: g.Scene, axis: str, line: int, side: int,
                        start: tuple[int, int], k: int,
                        oracle: g.LineOracle | None = None) -> tuple[int, int]:
    """Extend an interval along a (possibly side-biased) line through walls.

    The interval is grown in both directions so that it fully covers the
    interior stretches 0..k/2 away from the starting stretch, ending on the
    perpendicular edge bounding the far side of the last covered stretch.
    Directions that run out of interior stretches stop at the last
    interior-approached edge (or at the start endpoint when none exists).
    """
    _require_even_k(k)
    if oracle is None:
        oracle = g.LineOracle(scene)
    model = oracle.model(axis, line, side)
    stretches = model.interior_stretches()
    lo, hi = start
    mid = (lo + hi) // 2
    j0 = None
    for j, (slo, shi) in enumerate(stretches):
        if slo <= mid <= shi and slo <= lo and hi <= shi:
            j0 = j
            break
    if j0 is None:
        return (lo, hi)  # degenerate start: nothing to walk from
    steps = k // 2
    right = stretches[min(j0 + steps, len(stretches) - 1)][1]
    left = stretches[max(j0 - steps, 0)][0]
    return (min(left, lo), max(right, hi))


def partition_segments(scene: g.Scene, k: int, axis: str,
                       oracle: g.LineOracle | None = None
                       ) -> tuple[PartitionSegment, ...]:
    """One extended segment per edge of the given axis."""
    _require_even_k(k)
    if oracle is None:
        oracle = g.LineOracle(scene)
    out = []
    for e in oracle.edges:
        if e.axis != axis:
            continue
        lo, hi = extend_across_walls(scene, axis, e.fixed, e.interior_side,
                                     (e.lo, e.hi), k, oracle)
        out.append(PartitionSegment(axis, e.fixed, lo, hi, e.eid,
                                    e.interior_side))
    out.sort(key=lambda s: (s.fixed, s.lo, s.hi, s.origin))
    return tuple(out)


# ---------------------------------------------------------------------------
# slices
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def build_slices(scene: g.Scene, k: int, orientation: str,
                 oracle: g.LineOracle | None = None,
                 grid: g.UnitGrid | None = None) -> tuple[Slice, ...]:
    """Faces of (interior minus in-scene partition cuts), asserted rectangular."""
    _require_even_k(k)
    if oracle is None:
        oracle = g.LineOracle(scene)
    if grid is None:
        grid = g.unit_grid(scene)
    cuts = partition_segments(scene, k, orientation, oracle)
    by_line: dict[int, list[tuple[int, int]]] = {}
    for c in cuts:
        by_line.setdefault(c.fixed, []).append((c.lo, c.hi))

    nx, ny = len(grid.xs) - 1, len(grid.ys) - 1
    uf = _UnionFind(nx * ny)
    idx = lambda ix, iy: ix * ny + iy

    def blocked(fixed: int, lo: int, hi: int) -> bool:
        return any(s <= lo and hi <= t for s, t in by_line.get(fixed, ()))

    for ix in range(nx):
        for iy in range(ny):
            if not grid.interior[ix][iy]:
                continue
            # neighbor to the right: cuts along vertical lines block this
            # merge for vertical slicing only
            if ix + 1 < nx and grid.interior[ix + 1][iy]:
                if orientation != "v" or not blocked(grid.xs[ix + 1],
                                                     grid.ys[iy],
                                                     grid.ys[iy + 1]):
                    uf.union(idx(ix, iy), idx(ix + 1, iy))
            if iy + 1 < ny and grid.interior[ix][iy + 1]:
                if orientation != "h" or not blocked(grid.ys[iy + 1],
                                                     grid.xs[ix],
                                                     grid.xs[ix + 1]):
                    uf.union(idx(ix, iy), idx(ix, iy + 1))

    faces: dict[int, list[tuple[int, int]]] = {}
    for ix in range(nx):
        for iy in range(ny):
            if grid.interior[ix][iy]:
                faces.setdefault(uf.find(idx(ix, iy)), []).append((ix, iy))

    rects = []
    for cells in faces.values():
        x1 = min(grid.xs[ix] for ix, _ in cells)
        x2 = max(grid.xs[ix + 1] for ix, _ in cells)
        y1 = min(grid.ys[iy] for _, iy in cells)
        y2 = max(grid.ys[iy + 1] for _, iy in cells)
        # a face is a rectangle iff its cells tile its bounding box exactly
        area = sum((grid.xs[ix + 1] - grid.xs[ix]) * (grid.ys[iy + 1] - grid.ys[iy])
                   for ix, iy in cells)
        if area != (x2 - x1) * (y2 - y1):
            raise NonRectangularFace(
                f"face with bbox {(x1, y1, x2, y2)} is not a rectangle")
        rects.append((x1, y1, x2, y2))
    rects.sort()
    return tuple(Slice(r, orientation, i) for i, r in enumerate(rects))


def _odd_anchor(lo: int, hi: int) -> int:
    """Odd internal coordinate nearest the center, strictly inside (lo, hi)."""
    mid = (lo + hi) // 2
    return mid if mid % 2 == 1 else mid - 1


def slice_segment(scene: g.Scene, sl: Slice, k: int,
                  oracle: g.LineOracle | None = None) -> SliceSegment:
    """Anchored segment of one slice, extended through up to k/2 walls."""
    if oracle is None:
        oracle = g.LineOracle(scene)
    x1, y1, x2, y2 = sl.rect
    if sl.orientation == "h":
        anchor = _odd_anchor(y1, y2)
        lo, hi = extend_across_walls(scene, "h", anchor, 0, (x1, x2), k, oracle)
        seg = g.OrthoSegment("h", anchor, lo, hi)
    else:
        anchor = _odd_anchor(x1, x2)
        lo, hi = extend_across_walls(scene, "v", anchor, 0, (y1, y2), k, oracle)
        seg = g.OrthoSegment("v", anchor, lo, hi)
    return SliceSegment(sl.sid, seg)


# ---------------------------------------------------------------------------
# guard segments
# ---------------------------------------------------------------------------

def guard_segments(scene: g.Scene, orientation: str = "both",
                   oracle: g.LineOracle | None = None
                   ) -> tuple[GuardSegment, ...]:
    """Maximal in-closure extension of every edge; exact duplicates merged."""
    if orientation not in ("h", "v", "both"):
        raise ValueError(f"bad orientation filter {orientation!r}")
    if oracle is None:
        oracle = g.LineOracle(scene)
    found: dict[tuple[str, int, int, int], list] = {}
    for e in oracle.edges:
        if orientation != "both" and e.axis != orientation:
            continue
        model = oracle.model(e.axis, e.fixed, 0)
        lo, hi = model.closure_run(e.lo, e.hi)
        found.setdefault((e.axis, e.fixed, lo, hi), []).append(e.eid)
    keys = sorted(found)
    return tuple(GuardSegment(a, f, lo, hi, i, tuple(sorted(found[key])))
                 for i, key in enumerate(keys)
                 for a, f, lo, hi in [key])


# ---------------------------------------------------------------------------
# crosses and the hitting instance
# ---------------------------------------------------------------------------

def decompose(scene: g.Scene, k: int,
              oracle: g.LineOracle | None = None) -> Decomposition:
    _require_even_k(k)
    if oracle is None:
        oracle = g.LineOracle(scene)
    grid = g.unit_grid(scene)
    h_cuts = partition_segments(scene, k, "h", oracle)
    v_cuts = partition_segments(scene, k, "v", oracle)
    h_slices = build_slices(scene, k, "h", oracle, grid)
    v_slices = build_slices(scene, k, "v", oracle, grid)
    h_segments = tuple(slice_segment(scene, sl, k, oracle) for sl in h_slices)
    v_segments = tuple(slice_segment(scene, sl, k, oracle) for sl in v_slices)

    crosses = []
    for hs, hseg in zip(h_slices, h_segments):
        hx1, hy1, hx2, hy2 = hs.rect
        for vs, vseg in zip(v_slices, v_segments):
            vx1, vy1, vx2, vy2 = vs.rect
            px1, py1 = max(hx1, vx1), max(hy1, vy1)
            px2, py2 = min(hx2, vx2), min(hy2, vy2)
            if px1 >= px2 or py1 >= py2:
                continue
            pt = g.Point(vseg.segment.fixed, hseg.segment.fixed)
            if not (px1 < pt.x < px2 and py1 < pt.y < py2):
                raise CrossOutsidePixel(
                    f"cross {pt} outside pixel {(px1, py1, px2, py2)}")
            crosses.append((pt, hseg.segment, vseg.segment, hs.sid, vs.sid,
                            (px1, py1, px2, py2)))
    crosses.sort(key=lambda c: (c[0].x, c[0].y))
    cross_objs = tuple(Cross(*c, cid=i) for i, c in enumerate(crosses))
    return Decomposition(k, h_cuts, v_cuts, h_slices, v_slices,
                         h_segments, v_segments, cross_objs)


def build_crosses(scene: g.Scene, k: int,
                  oracle: g.LineOracle | None = None) -> tuple[Cross, ...]:
    return decompose(scene, k, oracle).crosses


def hits(guard: GuardSegment, cross: Cross) -> bool:
    """True iff the guard intersects the support perpendicular to it."""
    support = cross.v_support if guard.axis == "h" else cross.h_support
    return (guard.lo <= support.fixed <= guard.hi
            and support.lo <= guard.fixed <= support.hi)


def build_instance(scene: g.Scene, k: int, orientation: str = "both",
                   oracle: g.LineOracle | None = None,
                   decomposition: Decomposition | None = None
                   ) -> HittingInstance:
    """Bundle guards, crosses, and the hit relation as per-guard bitsets."""
    if oracle is None:
        oracle = g.LineOracle(scene)
    if decomposition is None:
        decomposition = decompose(scene, k, oracle)
    guards = guard_segments(scene, orientation, oracle)
    masks = []
    for guard in guards:
        m = 0
        for cross in decomposition.crosses:
            if hits(guard, cross):
                m |= 1 << cross.cid
        masks.append(m)
    return HittingInstance(guards, decomposition.crosses, tuple(masks),
                           orientation)
