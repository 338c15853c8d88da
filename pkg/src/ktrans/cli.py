"""ktrans command line: decompose | solve | verify | gen-hardness | lemmas | render.

Exit codes: 0 success, 1 usage or parse error, 2 infeasible or uncovered,
3 internal assertion failure (non-rectangular face, cross outside pixel,
violated structural property).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decomposition as d
from . import geometry as g
from . import hitting as h
from . import jsonio
from . import reduction as r
from . import svgrender
from .errors import (CrossOutsidePixel, InfeasibleInstance, KTransError,
                     LemmaViolated, NonRectangularFace)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_ASSERTION = 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ktrans",
        description="sliding k-transmitter guarding of orthogonal polygons")
    sub = p.add_subparsers(dest="command", required=True)

    dec = sub.add_parser("decompose", help="emit slices, segments, guards, crosses")
    dec.add_argument("scene")
    dec.add_argument("-k", type=int, required=True)
    dec.add_argument("--orientation", choices=["h", "v", "both"],
                     default="both")
    dec.add_argument("--json", dest="json_out")
    dec.add_argument("--svg", dest="svg_out")

    sol = sub.add_parser("solve", help="select a minimum guard set")
    sol.add_argument("scene")
    sol.add_argument("-k", type=int, required=True)
    sol.add_argument("--algo", choices=["greedy", "exact"], required=True)
    sol.add_argument("--orientation", choices=["h", "v", "both"],
                     default="both")
    sol.add_argument("--cap", type=int)
    sol.add_argument("-o", "--output")

    ver = sub.add_parser("verify", help="sample-check coverage of a guard set")
    ver.add_argument("scene")
    ver.add_argument("guards")
    ver.add_argument("-k", type=int, required=True)
    ver.add_argument("--density", type=int, default=3)

    gen = sub.add_parser("gen-hardness",
                         help="build a guarding instance from a graph")
    gen.add_argument("graph")
    gen.add_argument("-k", type=int, required=True)
    gen.add_argument("--disconnected", action="store_true")
    gen.add_argument("-o", "--output", required=True)
    gen.add_argument("--plan")

    lem = sub.add_parser("lemmas",
                         help="check structural properties of a generated instance")
    lem.add_argument("graph")
    lem.add_argument("-k", type=int, required=True)
    lem.add_argument("--disconnected", action="store_true")
    lem.add_argument("--cap", type=int)

    ren = sub.add_parser("render", help="draw a scene (and overlays) as SVG")
    ren.add_argument("scene")
    ren.add_argument("-o", "--output", required=True)
    ren.add_argument("-k", type=int)
    ren.add_argument("--decomposition", action="store_true",
                     help="overlay slices, slice segments, and crosses")
    ren.add_argument("--guards", help="overlay a guards JSON file")
    return p


def _write(path, text):
    with open(path, "w") as f:
        f.write(text)


def _cmd_decompose(args) -> int:
    scene = jsonio.load_scene(args.scene)
    dec = d.decompose(scene, args.k)
    guards = d.guard_segments(scene, args.orientation)
    doc = jsonio.decomposition_to_json(dec, guards)
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.json_out:
        _write(args.json_out, text)
    else:
        sys.stdout.write(text)
    if args.svg_out:
        overlays = {"partition": dec.h_partition + dec.v_partition,
                    "slices": dec.h_slices,
                    "slice_segments": dec.h_segments + dec.v_segments,
                    "guards": guards, "crosses": dec.crosses}
        _write(args.svg_out, svgrender.render_svg(scene, overlays))
    return EXIT_OK


def _cmd_solve(args) -> int:
    scene = jsonio.load_scene(args.scene)
    inst = d.build_instance(scene, args.k, args.orientation)
    if args.algo == "greedy":
        sol = h.solve_greedy(inst)
    else:
        sol = h.solve_exact(inst, args.cap)
    segments = [inst.guards[gid].segment for gid in sol.selected]
    text = jsonio.dump_guards(segments, method=sol.method)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    print(f"size {sol.size}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    scene = jsonio.load_scene(args.scene)
    transmitters = jsonio.load_guards(args.guards)
    from .visibility import verify_coverage
    report = verify_coverage(scene, transmitters, args.k, args.density)
    if report.covered:
        print(f"covered: all {report.total} samples seen")
        return EXIT_OK
    print(f"not covered: {len(report.unseen)} of {report.total} samples unseen",
          file=sys.stderr)
    for p in report.unseen:
        print(f"  unseen ({jsonio.coord_to_json(p.x)}, "
              f"{jsonio.coord_to_json(p.y)})", file=sys.stderr)
    return EXIT_INFEASIBLE


def _cmd_gen_hardness(args) -> int:
    graph, barrep = jsonio.load_graph(args.graph)
    if args.disconnected:
        scene, plan = r.build_disconnected(graph, barrep, args.k)
    else:
        scene, plan = r.build_connected(graph, barrep, args.k)
    _write(args.output, jsonio.dump_scene(scene))
    if args.plan:
        _write(args.plan, jsonio.dump_plan(plan))
    acc = plan.accounting()
    vc, _ = r.min_vertex_cover(graph)
    print(f"gadgets {len(plan.seq)}  N_s {acc['N_s']}  N_c {acc['N_c']}  "
          f"expected_guards {r.expected_guard_count(plan, vc)}")
    return EXIT_OK


def _cmd_lemmas(args) -> int:
    graph, barrep = jsonio.load_graph(args.graph)
    if args.disconnected:
        scene, plan = r.build_disconnected(graph, barrep, args.k)
    else:
        scene, plan = r.build_connected(graph, barrep, args.k)
    report = r.check_structural_lemmas(scene, plan, args.k, args.cap)
    print(f"optimum {report.optimum_horizontal} (horizontal) == "
          f"{report.optimum_both} (unrestricted); "
          f"{report.n_optimal_horizontal} optimal solutions; "
          f"edge-free witness {list(report.edge_free_solution)}")
    return EXIT_OK


def _cmd_render(args) -> int:
    scene = jsonio.load_scene(args.scene)
    overlays = {}
    if args.decomposition:
        if args.k is None:
            print("--decomposition requires -k", file=sys.stderr)
            return EXIT_USAGE
        dec = d.decompose(scene, args.k)
        overlays.update({"partition": dec.h_partition + dec.v_partition,
                         "slices": dec.h_slices,
                         "slice_segments": dec.h_segments + dec.v_segments,
                         "crosses": dec.crosses})
    if args.guards:
        overlays["transmitters"] = jsonio.load_guards(args.guards)
    _write(args.output, svgrender.render_svg(scene, overlays))
    return EXIT_OK


_COMMANDS = {
    "decompose": _cmd_decompose,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "gen-hardness": _cmd_gen_hardness,
    "lemmas": _cmd_lemmas,
    "render": _cmd_render,
}


def cli_dispatch(argv) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (NonRectangularFace, CrossOutsidePixel, LemmaViolated) as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return EXIT_ASSERTION
    except InfeasibleInstance as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (KTransError, jsonio.ParseError, OSError, ValueError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
