"""k-transmitter visibility queries and a sampling-based coverage verifier.

A transmitter sees a point when the perpendicular from the point onto the
transmitter's line has its foot inside the closed span and crosses the scene
boundary at most k times.  verify_coverage samples every pixel of the k-level
decomposition (plus every cross point) and reports unseen samples; seeing one
interior point of a slice implies seeing all of it, so pixel-granular
sampling is sufficient for the pipeline's own verification.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import decomposition as d
from . import geometry as g
from .errors import NotInsidePolygon


@dataclass(frozen=True)
class Transmitter:
    segment: g.OrthoSegment


@dataclass(frozen=True)
class CoverageReport:
    total: int
    unseen: tuple[g.Point, ...]
    seen_counts: tuple[int, ...]  # per transmitter, over all sample points

    @property
    def covered(self) -> bool:
        return not self.unseen


def sees(scene: g.Scene, t: Transmitter | g.OrthoSegment, p: g.Point, k: int,
         oracle: g.LineOracle | None = None) -> bool:
    """True iff the perpendicular foot of p lies on t and crosses <= k walls."""
    if k < 0 or k % 2 != 0:
        raise ValueError(f"k must be even and non-negative, got {k}")
    seg = t.segment if isinstance(t, Transmitter) else t
    if oracle is None:
        oracle = g.LineOracle(scene)
    if seg.axis == g.VERTICAL:
        if not (seg.lo <= p.y <= seg.hi):
            return False
        model = oracle.model(g.HORIZONTAL, p.y, 0)
        return model.transitions(p.x, seg.fixed) <= k
    if not (seg.lo <= p.x <= seg.hi):
        return False
    model = oracle.model(g.VERTICAL, p.x, 0)
    return model.transitions(p.y, seg.fixed) <= k


def _segment_in_closure(scene: g.Scene, seg: g.OrthoSegment,
                        oracle: g.LineOracle) -> bool:
    return oracle.model(seg.axis, seg.fixed, 0).segment_in_closure(seg.lo, seg.hi)


def canonicalize_transmitter(scene: g.Scene, t: Transmitter | g.OrthoSegment,
                             oracle: g.LineOracle | None = None
                             ) -> d.GuardSegment:
    """Translate a transmitter to the nearest parallel edge line and extend.

    The segment moves perpendicular to itself toward the nearer boundary edge
    (ties toward the smaller fixed coordinate), then grows to the maximal
    in-closure segment on that line.  The result is a member of
    guard_segments(scene, axis).
    """
    seg = t.segment if isinstance(t, Transmitter) else t
    if oracle is None:
        oracle = g.LineOracle(scene)
    if not _segment_in_closure(scene, seg, oracle):
        raise NotInsidePolygon(f"transmitter {seg} leaves the scene closure")

    # candidate contact lines: parallel edges whose span meets the segment's
    below = [e.fixed for e in oracle.edges
             if e.axis == seg.axis and e.fixed <= seg.fixed
             and e.lo <= seg.hi and seg.lo <= e.hi]
    above = [e.fixed for e in oracle.edges
             if e.axis == seg.axis and e.fixed >= seg.fixed
             and e.lo <= seg.hi and seg.lo <= e.hi]
    cand = []
    if below:
        line = max(below)
        cand.append((seg.fixed - line, line))
    if above:
        line = min(above)
        cand.append((line - seg.fixed, line))
    if not cand:
        raise NotInsidePolygon(f"no parallel edge reachable from {seg}")
    cand.sort()  # nearer first; tie resolved toward the smaller coordinate
    target = cand[0][1]

    lo, hi = oracle.model(seg.axis, target, 0).closure_run(seg.lo, seg.hi)
    for guard in d.guard_segments(scene, seg.axis, oracle):
        if (guard.fixed, guard.lo, guard.hi) == (target, lo, hi):
            return guard
    raise AssertionError("canonical segment missing from guard set")


def _pixel_axis_samples(lo: int, hi: int, density: int) -> list[int]:
    out = []
    for i in range(1, density + 1):
        off = ((hi - lo) * (2 * i - 1)) // (2 * density)
        if off % 2 == 0:
            off += 1
        v = lo + off
        if v >= hi:
            v = hi - 1
        out.append(v)
    return out


def coverage_samples(scene: g.Scene, k: int, density: int,
                     oracle: g.LineOracle | None = None) -> tuple[g.Point, ...]:
    """Deterministic odd-coordinate sample points: density^2 per pixel plus
    every cross point."""
    if density < 1:
        raise ValueError("density must be >= 1")
    crosses = d.build_crosses(scene, k, oracle)
    pts = set()
    for cross in crosses:
        pts.add(cross.point)
        x1, y1, x2, y2 = cross.pixel
        for x in _pixel_axis_samples(x1, x2, density):
            for y in _pixel_axis_samples(y1, y2, density):
                pts.add(g.Point(x, y))
    return tuple(sorted(pts))


def verify_coverage(scene: g.Scene, transmitters, k: int, density: int = 3,
                    oracle: g.LineOracle | None = None) -> CoverageReport:
    """Check that every sample point is seen by some transmitter."""
    if oracle is None:
        oracle = g.LineOracle(scene)
    segs = [t.segment if isinstance(t, Transmitter) else
            (t if isinstance(t, g.OrthoSegment) else t.segment)
            for t in transmitters]
    samples = coverage_samples(scene, k, density, oracle)
    unseen = []
    counts = [0] * len(segs)
    for p in samples:
        hit_any = False
        for i, seg in enumerate(segs):
            if sees(scene, seg, p, k, oracle):
                counts[i] += 1
                hit_any = True
        if not hit_any:
            unseen.append(p)
    return CoverageReport(len(samples), tuple(sorted(unseen)), tuple(counts))
