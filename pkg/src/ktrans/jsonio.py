"""JSON schemas for scenes, transmitters, graphs, decompositions, and plans.

File coordinates are in input units; half-integers are written as
{"num": n, "den": 2} fixed-point values.  Internally everything is doubled,
so an internal value v maps to v/2 in a file.
"""

from __future__ import annotations

import json

from . import decomposition as d
from . import geometry as g
from . import reduction as r
from .visibility import Transmitter


class ParseError(ValueError):
    pass


# -- coordinate encoding -----------------------------------------------------

def coord_to_json(internal: int):
    if internal % 2 == 0:
        return internal // 2
    return {"num": internal, "den": 2}


def coord_from_json(value) -> int:
    if isinstance(value, bool):
        raise ParseError(f"bad coordinate {value!r}")
    if isinstance(value, int):
        return 2 * value
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        if value["den"] != 2 or not isinstance(value["num"], int):
            raise ParseError(f"bad rational {value!r}")
        return value["num"]
    raise ParseError(f"bad coordinate {value!r}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- scenes -------------------------------------------------------------------

def scene_to_json(scene: g.Scene) -> dict:
    comps = []
    for comp in scene.components:
        comps.append({
            "outer": [[x // 2, y // 2] for x, y in comp.outer],
            "holes": [[[x // 2, y // 2] for x, y in hole]
                      for hole in comp.holes],
        })
    return {"components": comps}


def parse_scene(data) -> g.Scene:
    if not isinstance(data, dict) or "components" not in data:
        raise ParseError("scene file must have a components list")
    raw = []
    for comp in data["components"]:
        outer = [tuple(p) for p in comp["outer"]]
        holes = [[tuple(p) for p in hole] for hole in comp.get("holes", [])]
        raw.append({"outer": outer, "holes": holes})
    return g.validate_scene(raw)


def dump_scene(scene: g.Scene) -> str:
    return _dump(scene_to_json(scene))


def load_scene(path) -> g.Scene:
    with open(path) as f:
        return parse_scene(json.load(f))


# -- transmitters / guard sets -----------------------------------------------

def segment_to_json(seg: g.OrthoSegment) -> dict:
    return {"axis": seg.axis, "fixed": coord_to_json(seg.fixed),
            "span": [coord_to_json(seg.lo), coord_to_json(seg.hi)]}


def segment_from_json(data) -> g.OrthoSegment:
    try:
        return g.OrthoSegment(data["axis"], coord_from_json(data["fixed"]),
                              coord_from_json(data["span"][0]),
                              coord_from_json(data["span"][1]))
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ParseError(f"bad segment entry: {exc}") from exc


def guards_to_json(segments, method: str | None = None) -> dict:
    out = {"guards": [segment_to_json(s) for s in segments]}
    if method is not None:
        out["method"] = method
        out["size"] = len(out["guards"])
    return out


def parse_guards(data) -> list[Transmitter]:
    if not isinstance(data, dict) or "guards" not in data:
        raise ParseError("guards file must have a guards list")
    return [Transmitter(segment_from_json(e)) for e in data["guards"]]


def load_guards(path) -> list[Transmitter]:
    with open(path) as f:
        return parse_guards(json.load(f))


def dump_guards(segments, method: str | None = None) -> str:
    return _dump(guards_to_json(segments, method))


# -- graphs with bar representations -----------------------------------------

def parse_graph(data) -> tuple[r.GraphInstance, r.BarRepresentation]:
    try:
        vertices = [v["id"] for v in data["vertices"]]
        bars = {v["id"]: (v["bar"]["y"], tuple(v["bar"]["x"]))
                for v in data["vertices"]}
        edges = [(e["u"], e["v"]) for e in data["edges"]]
        strips = {r.edge_key(e["u"], e["v"]): tuple(e["strip"])
                  for e in data["edges"]}
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad graph file: {exc}") from exc
    flags = data.get("flags", {})
    graph = r.validate_graph(vertices, edges,
                             planar=flags.get("planar", True),
                             two_connected=flags.get("two_connected", True))
    barrep = r.validate_bar_representation(graph, bars, strips)
    return graph, barrep


def load_graph(path) -> tuple[r.GraphInstance, r.BarRepresentation]:
    with open(path) as f:
        return parse_graph(json.load(f))


# -- decomposition ------------------------------------------------------------

def decomposition_to_json(dec: d.Decomposition, guards) -> dict:
    def cut(c):
        return {"axis": c.axis, "fixed": coord_to_json(c.fixed),
                "span": [coord_to_json(c.lo), coord_to_json(c.hi)],
                "origin": list(c.origin)}

    def rect(rc):
        return [coord_to_json(v) for v in rc]

    return {
        "k": dec.k,
        "partition_segments": {
            "h": [cut(c) for c in dec.h_partition],
            "v": [cut(c) for c in dec.v_partition],
        },
        "slices": {
            "h": [{"id": s.sid, "rect": rect(s.rect)} for s in dec.h_slices],
            "v": [{"id": s.sid, "rect": rect(s.rect)} for s in dec.v_slices],
        },
        "slice_segments": {
            "h": [{"slice": s.sid, **segment_to_json(s.segment)}
                  for s in dec.h_segments],
            "v": [{"slice": s.sid, **segment_to_json(s.segment)}
                  for s in dec.v_segments],
        },
        "guards": [{**segment_to_json(gu.segment), "id": gu.gid,
                    "origins": [list(o) for o in gu.origins]}
                   for gu in guards],
        "crosses": [{
            "id": c.cid,
            "point": [coord_to_json(c.point.x), coord_to_json(c.point.y)],
            "h_slice": c.h_slice, "v_slice": c.v_slice,
            "pixel": rect(c.pixel),
        } for c in dec.crosses],
    }


# -- reduction plans -----------------------------------------------------------

def plan_to_json(plan: r.ReductionPlan) -> dict:
    acc = plan.accounting()
    gadgets = []
    for key in plan.seq:
        p = plan.placements[key]
        gadgets.append({
            "kind": p.kind,
            "key": key[1] if key[0] == "v" else list(key[1]),
            "slot": p.slot,
            "boxes": [list(b) for b in p.boxes],
            "channels": [list(c) for c in p.channels],
            "shape": plan.shapes.get(key),
            "middle_box": list(p.middle_box) if p.kind == "vertex" else None,
        })
    return {
        "k": plan.k,
        "connected": plan.connected,
        "accounting": acc,
        "slots": [[key[0], key[1] if key[0] == "v" else list(key[1])]
                  for key in plan.seq],
        "gadgets": gadgets,
        "connectors": [{"boxes": [list(b) for b in c.boxes],
                        "channels": [list(ch) for ch in c.channels]}
                       for c in plan.connectors],
        "subdivisions": [{
            "edge": list(e.edge),
            "new_vertices": list(e.new_vertices),
            "new_edges": [list(x) for x in e.new_edges],
            "gap": e.gap,
            "window": list(e.window),
        } for e in plan.events],
        "corner_walk": [{
            "gap": s.gap, "from": list(s.c), "to": list(s.c_prime),
            "exit": list(s.c_dblprime) if s.c_dblprime else None,
            "exception": s.exception,
        } for s in plan.steps],
    }


def dump_plan(plan: r.ReductionPlan) -> str:
    return _dump(plan_to_json(plan))
