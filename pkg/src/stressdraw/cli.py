"""Command-line front end.

Subcommands: generate (random or worst-case graphs), draw (one method, SVG
plus metrics), kaleidoscope (angle sweep CSV), gallery (method-by-graph
ratio table). Exit codes: 0 success, 2 bad input or parameters, 3 violated
algorithmic precondition, 4 numeric failure.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

from .errors import BadParams, InputError, NumericError, PreconditionError, StressDrawError
from .graph import (
    PlanarEmbedding,
    generate_planar,
    load_graph,
    save_graph,
    worst_case_graph,
)
from .metrics import compute_metrics, metrics_json
from .morph import best_row, kaleidoscope, rows_to_csv, worst_row, xy_morph
from .solver import Drawing, regular_polygon, tutte
from .spread import spread_drawing, spread_pipeline
from .svg import render_svg
from .treespread import best_r, bfs_spread, schnyder_spread
from .uniform import uniform_pipeline

METHODS = ("tutte", "xspread", "yspread", "xymorph", "bfs", "schnyder", "uniform")


def _write_text(path: str, text: str) -> None:
    """Write through a sibling temp file and an atomic rename."""
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".tmp.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_generate(args: argparse.Namespace) -> int:
    if args.worst_case is not None:
        emb = worst_case_graph(args.worst_case)
    else:
        if args.n is None or args.m is None:
            raise BadParams("generate needs --n and --m, or --worst-case K")
        emb = generate_planar(
            args.n, args.m, args.seed, attempts=args.attempts, strict=args.strict
        )
    save_graph(emb, args.out)
    print(
        f"wrote {args.out}: n={emb.n} m={emb.m} "
        f"outer_face_length={len(emb.outer_face)} valid=yes"
    )
    return 0


def _parse_r(raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise BadParams(f"--r must be a number or 'best', got {raw!r}") from None


def _drawing_for_method(
    emb: PlanarEmbedding, args: argparse.Namespace
) -> tuple[Drawing, dict[str, object]]:
    poly = regular_polygon(emb.outer_face, args.radius)
    angle = math.radians(args.angle)
    extra: dict[str, object] = {}
    if args.method == "tutte":
        return tutte(emb, poly), extra
    if args.method == "xspread":
        return spread_drawing(emb, poly, angle)[1], extra
    if args.method == "yspread":
        return spread_drawing(emb, poly, angle + math.pi / 2.0)[1], extra
    if args.method == "xymorph":
        return xy_morph(emb, poly, angle, args.t)[1], extra
    if args.method in ("bfs", "schnyder"):
        if args.r == "best":
            r, drawing, _rho = best_r(emb, poly, args.method, args.a)
            extra["r"] = r
            return drawing, extra
        return (bfs_spread if args.method == "bfs" else schnyder_spread)(
            emb, poly, args.a, _parse_r(args.r)
        ), extra
    result = uniform_pipeline(emb)
    return result.drawing, extra


def cmd_draw(args: argparse.Namespace) -> int:
    emb = load_graph(args.graph)
    drawing, extra = _drawing_for_method(emb, args)
    met = compute_metrics(drawing, emb)

    out_svg = args.out_svg
    if out_svg is None:
        stem, _ = os.path.splitext(args.graph)
        out_svg = f"{stem}.{args.method}.svg"
    _write_text(out_svg, render_svg(drawing, emb))
    if args.out_metrics:
        _write_text(args.out_metrics, metrics_json(met) + "\n")
    if args.out_coords:
        coords = {
            str(v): [drawing.positions[v][0], drawing.positions[v][1]]
            for v in range(emb.n)
        }
        _write_text(args.out_coords, json.dumps(coords, indent=1) + "\n")

    chosen = f" r={extra['r']}" if "r" in extra else ""
    print(
        f"method={args.method}{chosen} n={emb.n} m={emb.m} "
        f"edge_length_ratio={met.edge_length_ratio:.6f} "
        f"crossing_count={met.crossing_count} "
        f"all_faces_convex={'true' if met.all_faces_convex else 'false'} "
        f"svg={out_svg}"
    )
    return 0


def cmd_kaleidoscope(args: argparse.Namespace) -> int:
    emb = load_graph(args.graph)
    poly = regular_polygon(emb.outer_face, args.radius)
    rows = kaleidoscope(emb, poly, args.step)
    _write_text(args.out_csv, rows_to_csv(rows))
    best = best_row(rows)
    worst = worst_row(rows)
    for path, row in ((args.best_svg, best), (args.worst_svg, worst)):
        if path:
            _w, drawing = xy_morph(emb, poly, math.radians(row.angle_degrees))
            _write_text(path, render_svg(drawing, emb))
    print(
        f"rows={len(rows)} csv={args.out_csv} "
        f"best_angle={best.angle_degrees:g} best_ratio={best.ratio:.6f} "
        f"worst_angle={worst.angle_degrees:g} worst_ratio={worst.ratio:.6f}"
    )
    return 0


GALLERY_HEADER = "graph,tutte,x_spread,y_spread,xy_morph,bfs_spread,bfs_r"


def _gallery_row(emb: PlanarEmbedding, name: str, out_dir: str, radius: float, a: float) -> str:
    poly = regular_polygon(emb.outer_face, radius)
    ref = tutte(emb, poly)
    x = spread_pipeline(emb, poly, 0.0, reference=ref)
    y = spread_pipeline(emb, poly, math.pi / 2.0, reference=ref)
    drawings: list[tuple[str, Drawing]] = [
        ("tutte", ref),
        ("x_spread", x.drawing),
        ("y_spread", y.drawing),
        ("xy_morph", xy_morph(emb, poly, 0.0, reference=ref)[1]),
    ]
    r, bfs_drawing, _rho = best_r(emb, poly, "bfs", a)
    drawings.append(("bfs_spread", bfs_drawing))
    cells = [name]
    for label, drawing in drawings:
        met = compute_metrics(drawing, emb)
        _write_text(
            os.path.join(out_dir, f"{name}.{label}.svg"), render_svg(drawing, emb)
        )
        cells.append(f"{met.edge_length_ratio:.6f}")
    cells.append(str(r))
    return ",".join(cells)


def cmd_gallery(args: argparse.Namespace) -> int:
    os.makedirs(args.out_dir, exist_ok=True)
    lines = [GALLERY_HEADER]
    for path in args.graphs:
        name = os.path.splitext(os.path.basename(path))[0]
        try:
            emb = load_graph(path)
            lines.append(_gallery_row(emb, name, args.out_dir, args.radius, args.a))
        except (StressDrawError, OSError) as exc:
            # record the failure and keep going with the remaining graphs
            print(f"gallery: {path} failed: {type(exc).__name__}: {exc}", file=sys.stderr)
            lines.append(f"{name},FAILED:{type(exc).__name__},,,,,")
    csv_path = os.path.join(args.out_dir, "summary.csv")
    _write_text(csv_path, "\n".join(lines) + "\n")
    print("\n".join(lines))
    print(f"summary={csv_path}")
    return 0


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stressdraw",
        description="Convex planar drawings from weighted stress embeddings.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate a 3-connected planar graph as JSON")
    g.add_argument("--n", type=int, help="vertex count")
    g.add_argument("--m", type=int, help="edge count")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument(
        "--worst-case", type=int, metavar="K",
        help="emit the k-path double-apex graph instead of a random one",
    )
    g.add_argument("--attempts", type=int, default=8)
    g.add_argument(
        "--strict", action="store_true",
        help="fail when the target edge count cannot be hit exactly",
    )
    g.add_argument("--out", required=True)

    d = sub.add_parser("draw", help="draw one graph with one method")
    d.add_argument("graph", help="graph JSON path")
    d.add_argument("--method", required=True, choices=METHODS)
    d.add_argument("--angle", type=float, default=0.0, help="spread direction, degrees")
    d.add_argument("--t", type=float, default=0.5, help="morph parameter in [0, 1]")
    d.add_argument("--a", type=float, default=1.0, help="depth weight scale")
    d.add_argument("--r", default="5", help="depth decay base > 1, or 'best'")
    d.add_argument("--radius", type=float, default=1.0, help="outer polygon radius")
    d.add_argument("--out-svg", help="default: <graph>.<method>.svg")
    d.add_argument("--out-metrics", help="metrics JSON path")
    d.add_argument("--out-coords", help="coordinates JSON path")

    k = sub.add_parser("kaleidoscope", help="sweep morph angles, write angle/ratio CSV")
    k.add_argument("graph")
    k.add_argument("--step", type=float, default=5.0, help="angle step, degrees")
    k.add_argument("--radius", type=float, default=1.0)
    k.add_argument("--out-csv", required=True)
    k.add_argument("--best-svg", help="render the lowest-ratio angle here")
    k.add_argument("--worst-svg", help="render the highest-ratio angle here")

    ga = sub.add_parser("gallery", help="run all methods over several graphs")
    ga.add_argument("graphs", nargs="+", help="graph JSON paths")
    ga.add_argument("--out-dir", required=True)
    ga.add_argument("--radius", type=float, default=1.0)
    ga.add_argument("--a", type=float, default=1.0)
    return ap


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "generate": cmd_generate,
        "draw": cmd_draw,
        "kaleidoscope": cmd_kaleidoscope,
        "gallery": cmd_gallery,
    }[args.command]
    try:
        return handler(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
