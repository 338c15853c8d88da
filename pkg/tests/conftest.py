"""Shared fixtures and independent oracles for the test suite.

The oracles here re-derive geometric facts by brute force (ray casting
written independently, dense sampling along segments) so the library's fast
paths are checked against something that does not share their code.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ktrans import geometry as g
from ktrans import jsonio

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def rect_scene():
    return jsonio.load_scene(FIXTURES / "rect.json")


@pytest.fixture(scope="session")
def u_scene():
    return jsonio.load_scene(FIXTURES / "u.json")


@pytest.fixture(scope="session")
def two_rects_scene():
    return jsonio.load_scene(FIXTURES / "two_rects.json")


def load_fixture_graph(name):
    return jsonio.load_graph(FIXTURES / f"{name}.json")


# -- independent oracles -------------------------------------------------------

def oracle_classify(scene: g.Scene, x, y) -> str:
    """Point classification by upward ray casting (independent of the
    library's rightward version)."""
    crossings = 0
    for _, ring in scene.rings():
        n = len(ring)
        for i in range(n):
            (x1, y1), (x2, y2) = ring[i], ring[(i + 1) % n]
            if y1 == y2:
                if y == y1 and min(x1, x2) <= x <= max(x1, x2):
                    return "boundary"
                if min(x1, x2) <= x < max(x1, x2) and y1 > y:
                    crossings += 1
            else:
                if x == x1 and min(y1, y2) <= y <= max(y1, y2):
                    return "boundary"
    return "interior" if crossings % 2 else "exterior"


def oracle_transitions(scene: g.Scene, seg: g.OrthoSegment,
                       steps_per_unit: int = 4) -> int:
    """Transition count by dense sampling along the segment."""
    total = (seg.hi - seg.lo) * steps_per_unit
    classes = []
    for j in range(total + 1):
        t = seg.lo + Fraction(j, steps_per_unit)
        x, y = (t, seg.fixed) if seg.axis == g.HORIZONTAL else (seg.fixed, t)
        classes.append(oracle_classify(scene, x, y))
    filtered = [c for c in classes if c != "boundary"]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a != b)


def interior_sample_grid(rect, n=3):
    """n x n odd-coordinate points strictly inside an internal-unit rect."""
    from ktrans.visibility import _pixel_axis_samples
    x1, y1, x2, y2 = rect
    xs = sorted(set(_pixel_axis_samples(x1, x2, n)))
    ys = sorted(set(_pixel_axis_samples(y1, y2, n)))
    return [g.Point(x, y) for x in xs for y in ys]
