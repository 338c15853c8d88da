"""Deterministic SVG rendering of scenes, decompositions, and guard sets.

All drawn coordinates are exact halves of internal units, printed as plain
decimals, so identical inputs produce byte-identical documents.  Layers are
emitted in a fixed z-order: polygon fill, partition segments, slice
segments, guard segments, transmitters, crosses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import geometry as g
from .errors import MismatchedOverlay

_DEFAULT_STYLES = {
    "polygon": "fill:#dfe8f2;stroke:#223;stroke-width:0.15",
    "partition": "stroke:#4466cc;stroke-width:0.1;stroke-dasharray:0.6,0.4",
    "slice": "fill:none;stroke:#88a;stroke-width:0.05",
    "slice_segment": "stroke:#cc2222;stroke-width:0.12",
    "guard": "stroke:#118833;stroke-width:0.18",
    "transmitter": "stroke:#dd8800;stroke-width:0.22",
    "cross": "fill:#cc2222",
}


@dataclass(frozen=True)
class RenderSpec:
    scale: int = 10
    styles: dict = field(default_factory=lambda: dict(_DEFAULT_STYLES))


def _fmt(internal: int) -> str:
    """Internal unit -> exact input-unit decimal (halves allowed)."""
    if internal % 2 == 0:
        return str(internal // 2)
    sign = "-" if internal < 0 else ""
    return f"{sign}{abs(internal) // 2}.5"


def _flip(y: int, total: int) -> int:
    return total - y


def render_svg(scene: g.Scene, overlays: dict | None = None,
               spec: RenderSpec | None = None) -> str:
    """Render a scene plus optional overlay layers as an SVG 1.1 document.

    overlays keys (all optional): "partition" (PartitionSegments), "slices"
    (Slices), "slice_segments" (SliceSegments), "guards" (GuardSegments),
    "transmitters" (OrthoSegments or Transmitters), "crosses" (Crosses).
    """
    spec = spec or RenderSpec()
    overlays = overlays or {}
    x1, y1, x2, y2 = scene.bbox()
    margin = max((x2 - x1), (y2 - y1), 20) // 20 + 1  # ~5% of the extent
    x1, y1, x2, y2 = x1 - margin, y1 - margin, x2 + margin, y2 + margin
    total = y1 + y2  # flip anchor so that +y points up in the drawing

    def fy(y):
        return _fmt(_flip(y, total))

    def in_bounds(px, py):
        return x1 <= px <= x2 and y1 <= py <= y2

    def seg_points(seg):
        if seg.axis == g.HORIZONTAL:
            return (seg.lo, seg.fixed), (seg.hi, seg.fixed)
        return (seg.fixed, seg.lo), (seg.fixed, seg.hi)

    body = []
    styles = spec.styles
    for comp in scene.components:
        parts = []
        for ring in (comp.outer,) + comp.holes:
            cmds = [f"M {_fmt(ring[0][0])} {fy(ring[0][1])}"]
            cmds += [f"L {_fmt(x)} {fy(y)}" for x, y in ring[1:]]
            cmds.append("Z")
            parts.append(" ".join(cmds))
        body.append(f'<path d="{" ".join(parts)}" fill-rule="evenodd" '
                    f'style="{styles["polygon"]}"/>')

    def emit_lines(items, style_key, to_seg):
        for item in items:
            seg = to_seg(item)
            (ax, ay), (bx, by) = seg_points(seg)
            for px, py in ((ax, ay), (bx, by)):
                if not in_bounds(px, py):
                    raise MismatchedOverlay(
                        f"overlay segment {seg} outside the scene frame")
            body.append(f'<line x1="{_fmt(ax)}" y1="{fy(ay)}" '
                        f'x2="{_fmt(bx)}" y2="{fy(by)}" '
                        f'style="{styles[style_key]}"/>')

    emit_lines(overlays.get("partition", ()), "partition",
               lambda c: c.segment)
    for sl in overlays.get("slices", ()):
        rx1, ry1, rx2, ry2 = sl.rect
        if not (in_bounds(rx1, ry1) and in_bounds(rx2, ry2)):
            raise MismatchedOverlay(f"slice {sl.rect} outside the scene frame")
        body.append(f'<rect x="{_fmt(rx1)}" y="{fy(ry2)}" '
                    f'width="{_fmt(rx2 - rx1)}" height="{_fmt(ry2 - ry1)}" '
                    f'style="{styles["slice"]}"/>')
    emit_lines(overlays.get("slice_segments", ()), "slice_segment",
               lambda s: s.segment)
    emit_lines(overlays.get("guards", ()), "guard", lambda s: s.segment)
    emit_lines(overlays.get("transmitters", ()), "transmitter",
               lambda t: t if isinstance(t, g.OrthoSegment) else t.segment)
    for cross in overlays.get("crosses", ()):
        px, py = cross.point.x, cross.point.y
        if not in_bounds(px, py):
            raise MismatchedOverlay(f"cross {cross.point} outside the frame")
        body.append(f'<circle cx="{_fmt(px)}" cy="{fy(py)}" r="0.35" '
                    f'style="{styles["cross"]}"/>')

    w, hgt = x2 - x1, y2 - y1
    header = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{(w // 2) * spec.scale}" height="{(hgt // 2) * spec.scale}" '
        f'viewBox="{_fmt(x1)} {fy(y2)} {_fmt(w)} {_fmt(hgt)}">'
    )
    return header + "\n" + "\n".join(body) + "\n</svg>\n"
