"""Boundary extraction for unions of axis-aligned rectangles.

Turns a set of integer rectangles into polygon rings (outer rings
counter-clockwise, holes clockwise), grouped into components.  Used by the
hardness-instance generator to emit scenes from gadget rectangles.
"""

from __future__ import annotations

import bisect

Rect = tuple[int, int, int, int]  # x1, y1, x2, y2


def _compress(rects: list[Rect]):
    xs = sorted({v for r in rects for v in (r[0], r[2])})
    ys = sorted({v for r in rects for v in (r[1], r[3])})
    nx, ny = len(xs) - 1, len(ys) - 1
    covered = [[False] * ny for _ in range(nx)]
    for x1, y1, x2, y2 in rects:
        ix1, ix2 = bisect.bisect_left(xs, x1), bisect.bisect_left(xs, x2)
        iy1, iy2 = bisect.bisect_left(ys, y1), bisect.bisect_left(ys, y2)
        for ix in range(ix1, ix2):
            for iy in range(iy1, iy2):
                covered[ix][iy] = True
    return xs, ys, covered


def _boundary_edges(xs, ys, covered):
    """Directed unit boundary edges with the covered region on the left."""
    nx, ny = len(xs) - 1, len(ys) - 1
    edges = {}  # start vertex -> end vertex

    def cov(ix, iy):
        return 0 <= ix < nx and 0 <= iy < ny and covered[ix][iy]

    for ix in range(nx + 1):
        for iy in range(ny):
            left, right = cov(ix - 1, iy), cov(ix, iy)
            if left != right:
                a, b = (xs[ix], ys[iy]), (xs[ix], ys[iy + 1])
                start, end = (a, b) if left else (b, a)
                if start in edges:
                    raise ValueError(f"pinch vertex at {start}")
                edges[start] = end
    for iy in range(ny + 1):
        for ix in range(nx):
            below, above = cov(ix, iy - 1), cov(ix, iy)
            if below != above:
                a, b = (xs[ix], ys[iy]), (xs[ix + 1], ys[iy])
                start, end = (a, b) if above else (b, a)
                if start in edges:
                    raise ValueError(f"pinch vertex at {start}")
                edges[start] = end
    return edges


def _trace_rings(edges):
    rings = []
    remaining = dict(edges)
    while remaining:
        start = min(remaining)
        ring = [start]
        cur = remaining.pop(start)
        while cur != start:
            ring.append(cur)
            cur = remaining.pop(cur)
        rings.append(ring)
    return rings


def _simplify(ring):
    out = []
    n = len(ring)
    for i in range(n):
        (px, py), (cx, cy), (nx_, ny_) = ring[i - 1], ring[i], ring[(i + 1) % n]
        if (px == cx == nx_) or (py == cy == ny_):
            continue
        out.append((cx, cy))
    return out


def _area2(ring) -> int:
    s = 0
    for (x1, y1), (x2, y2) in zip(ring, ring[1:] + ring[:1]):
        s += x1 * y2 - x2 * y1
    return s


def _inside(ring, x, y) -> bool:
    inside = False
    n = len(ring)
    for i in range(n):
        (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
        if x1 == x2 and min(y1, y2) <= y < max(y1, y2) and x1 > x:
            inside = not inside
    return inside


def union_components(rects) -> list[dict]:
    """Group the union boundary into components: [{"outer": ring, "holes": [...]}]."""
    rects = [tuple(r) for r in rects if r[0] < r[2] and r[1] < r[3]]
    if not rects:
        return []
    xs, ys, covered = _compress(rects)
    rings = [_simplify(r) for r in _trace_rings(_boundary_edges(xs, ys, covered))]
    outers = [r for r in rings if _area2(r) > 0]
    holes = [r for r in rings if _area2(r) < 0]
    comps = []
    for outer in sorted(outers, key=lambda r: min(r)):
        comps.append({"outer": outer, "holes": []})
    for hole in holes:
        hx, hy = hole[0]
        owners = [c for c in comps if _inside(c["outer"], hx, hy)]
        # with nesting, the innermost containing outer owns the hole
        owner = min(owners, key=lambda c: abs(_area2(c["outer"])))
        owner["holes"].append(hole)
    return comps
