"""Command-line front end: families, sweeps, fits, invariant suites, SVG.

Output conventions: CSV files have a fixed documented header row and
shortest-roundtrip float formatting, JSON reports carry a schema field,
and identical arguments produce byte-identical output.  Files are
written atomically (temp file plus rename).  Exit codes: 0 success,
1 invalid arguments, 2 numerical failure (a machine-readable error
object is printed to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import centers as centers_mod
from .billiard import BilliardShape, caustic, orbit
from .circumbilliard import circumbilliard
from .conic_invariants import (
    PoristicShape,
    count_interior_maxima,
    focal_profile,
    focal_ratio_closed_form,
    poristic_cb_aspect,
    poristic_triangle,
)
from .errors import OrbitConicsError
from .kernel import Triangle
from .loci import fit_by_shape_class, fit_locus, invariant_report, sample_grid, sweep_locus
from .svgout import render_svg

SCHEMA = "orbitconics-report/1"


def _fmt(x: float) -> str:
    return repr(float(x))


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("ORBITCONICS_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    cap = thread_cap()
    items = list(items)
    if cap <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(fn, items))


def write_text_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".orbitconics-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        write_text_atomic(out, text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def parse_center(text: str):
    if text == "vertices":
        return "vertices"
    if text.lower() in ("x6star", "x6*"):
        return centers_mod.ORTHIC_CB_CENTER
    raw = text[1:] if text[:1] in ("X", "x") else text
    try:
        index = int(raw)
    except ValueError:
        raise ValueError(f"unrecognized center selector {text!r}")
    if index not in centers_mod.SUPPORTED_CENTERS:
        raise ValueError(f"center X{index} not supported")
    return index


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbitconics")
    sub = parser.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="orbit samples over the family")
    fam.add_argument("--a", type=float, required=True)
    fam.add_argument("--b", type=float, required=True)
    fam.add_argument("--n", type=int, default=72)
    fam.add_argument("--format", choices=("csv", "json"), default="csv")
    fam.add_argument("--out")

    cb = sub.add_parser("cb", help="circumbilliard of an explicit triangle")
    cb.add_argument("--vertices", required=True, help="x1,y1,x2,y2,x3,y3")
    cb.add_argument("--out")

    loc = sub.add_parser("locus", help="sweep a center and optionally fit")
    loc.add_argument("--a", type=float, required=True)
    loc.add_argument("--b", type=float, required=True)
    loc.add_argument("--center", required=True)
    loc.add_argument("--derived", choices=("excentral", "act", "medial", "orthic"))
    loc.add_argument("--n", type=int, default=720)
    loc.add_argument("--fit", action="store_true")
    loc.add_argument("--out")

    inv = sub.add_parser("invariants", help="family invariance report")
    inv.add_argument("--a", type=float, required=True)
    inv.add_argument("--b", type=float, required=True)
    inv.add_argument("--n", type=int, default=720)
    inv.add_argument("--out")

    por = sub.add_parser("poristic", help="poristic aspect sweep")
    por.add_argument("--r", type=float, required=True)
    por.add_argument("--R", type=float, required=True, dest="R")
    por.add_argument("--n", type=int, default=360)
    por.add_argument("--out")

    hyp = sub.add_parser("hyperbolae", help="focal length profile and ratio")
    hyp.add_argument("--a", type=float, required=True)
    hyp.add_argument("--b", type=float, required=True)
    hyp.add_argument("--n", type=int, default=720)
    hyp.add_argument("--out")

    ren = sub.add_parser("render", help="render a locus CSV to SVG")
    ren.add_argument("--input", required=True)
    ren.add_argument("--out", required=True)
    ren.add_argument("--overlay", choices=("billiard", "caustic"), action="append", default=[])
    ren.add_argument("--a", type=float)
    ren.add_argument("--b", type=float)
    return parser


def _require_shape(parser, a: float, b: float) -> BilliardShape:
    if not (a > b > 0):
        parser.error(f"require a > b > 0, got a={a}, b={b}")
    return BilliardShape(a, b)


def cmd_family(args) -> int:
    shape = BilliardShape(args.a, args.b)

    def one(t: float):
        sample = orbit(shape, t)
        tri = sample.triangle
        return (
            t,
            tri,
            sample.shape_class.value,
            tri.perimeter(),
            tri.inradius() / tri.circumradius(),
        )

    records = _pmap(one, [float(t) for t in sample_grid(args.n)])
    if args.format == "csv":
        header = ["t", "x1", "y1", "x2", "y2", "x3", "y3", "shape_class", "perimeter", "rho"]
        rows = []
        for t, tri, cls, per, rho in records:
            coords = [c for p in tri.vertices for c in (p.x, p.y)]
            rows.append([_fmt(t)] + [_fmt(c) for c in coords] + [cls, _fmt(per), _fmt(rho)])
        _emit(_csv_text(header, rows), args.out)
    else:
        payload = {
            "schema": SCHEMA,
            "command": "family",
            "a": args.a,
            "b": args.b,
            "n": args.n,
            "samples": [
                {
                    "t": t,
                    "vertices": [[p.x, p.y] for p in tri.vertices],
                    "shape_class": cls,
                    "perimeter": per,
                    "rho": rho,
                }
                for t, tri, cls, per, rho in records
            ],
        }
        _emit(_json_dump(payload), args.out)
    return 0


def cmd_cb(args) -> int:
    values = [float(v) for v in args.vertices.split(",")]
    if len(values) != 6:
        raise ValueError("--vertices wants six comma-separated numbers")
    tri = Triangle.from_coords([(values[0], values[1]), (values[2], values[3]), (values[4], values[5])])
    result = circumbilliard(tri)
    payload = {
        "schema": SCHEMA,
        "command": "cb",
        "conic": dict(zip(("c1", "c2", "c3", "c4", "c5"), result.conic.coeffs)),
        "center": [result.params.center.x, result.params.center.y],
        "semi_major": result.params.semi_major,
        "semi_minor": result.params.semi_minor,
        "axis_angle": result.params.axis_angle,
        "mittenpunkt": [result.mittenpunkt.x, result.mittenpunkt.y],
        "aspect": result.aspect,
    }
    _emit(_json_dump(payload), args.out)
    return 0


def cmd_locus(args, parser) -> int:
    shape = _require_shape(parser, args.a, args.b)
    center_id = parse_center(args.center)
    sweep = sweep_locus(shape, center_id, derived=args.derived, n=args.n)
    header = ["t", "x", "y"]
    rows = [
        [_fmt(t), _fmt(p.x), _fmt(p.y)]
        for t, p in zip(sweep.t_values, sweep.points)
    ]
    _emit(_csv_text(header, rows), args.out)
    if args.fit:
        report = fit_locus(sweep.points)
        payload = {
            "schema": SCHEMA,
            "command": "locus-fit",
            "center": args.center,
            "derived": args.derived,
            "n_points": len(sweep.points),
            "n_skipped": len(sweep.skipped),
            "fit_A": report.fit_A,
            "fit_B": report.fit_B,
            "rms_residual": report.rms_residual,
            "mean_radius": report.mean_radius,
            "verdict": report.verdict.value,
            "fitted_axes": list(report.fitted_axes) if report.fitted_axes else None,
        }
        pieces = fit_by_shape_class(sweep)
        if len(pieces) > 1:
            payload["pieces"] = {
                cls: {
                    "n_points": len(rep.samples),
                    "rms_residual": rep.rms_residual,
                    "verdict": rep.verdict.value,
                    "fitted_axes": list(rep.fitted_axes) if rep.fitted_axes else None,
                }
                for cls, rep in sorted(pieces.items())
            }
        sys.stdout.write(_json_dump(payload))
    return 0


def cmd_invariants(args, parser) -> int:
    shape = _require_shape(parser, args.a, args.b)
    report = invariant_report(shape, n=args.n)
    payload = {"schema": SCHEMA, "command": "invariants"}
    payload.update(report.as_dict())
    _emit(_json_dump(payload), args.out)
    return 0


def cmd_poristic(args, parser) -> int:
    if not (args.R > 2 * args.r > 0):
        parser.error(f"require R > 2 r > 0, got r={args.r}, R={args.R}")
    ps = PoristicShape(args.r, args.R)
    aspects = []
    x9s = []
    for theta in sample_grid(args.n):
        tri = poristic_triangle(ps, float(theta))
        result = circumbilliard(tri)
        aspects.append(result.aspect)
        x9s.append(result.mittenpunkt)
    aspects_arr = np.array(aspects)
    closed = poristic_cb_aspect(ps)
    xs = np.array([p.x for p in x9s])
    ys = np.array([p.y for p in x9s])
    # circle through the swept Mittenpunkt positions, algebraic least squares
    M = np.column_stack([xs, ys, np.ones_like(xs)])
    sol, *_ = np.linalg.lstsq(M, -(xs * xs + ys * ys), rcond=None)
    cx, cy = -sol[0] / 2.0, -sol[1] / 2.0
    radius = math.sqrt(max(cx * cx + cy * cy - sol[2], 0.0))
    rms = float(np.sqrt(np.mean((np.hypot(xs - cx, ys - cy) - radius) ** 2)))
    payload = {
        "schema": SCHEMA,
        "command": "poristic",
        "r": args.r,
        "R": args.R,
        "n": args.n,
        "aspect_mean": float(aspects_arr.mean()),
        "aspect_spread_rel": float((aspects_arr.max() - aspects_arr.min()) / aspects_arr.mean()),
        "closed_form": closed,
        "closed_form_abs_diff": abs(float(aspects_arr.mean()) - closed),
        "mittenpunkt_circle": {
            "center": [float(cx), float(cy)],
            "radius": float(radius),
            "rms": rms,
        },
    }
    _emit(_json_dump(payload), args.out)
    return 0


def cmd_hyperbolae(args, parser) -> int:
    shape = _require_shape(parser, args.a, args.b)
    if args.n < 8:
        parser.error("need --n >= 8")
    profile = focal_profile(shape, n=args.n)
    header = ["t", "feuerbach_focal_length", "jerabek_excentral_focal_length"]
    rows = [[_fmt(s.t), _fmt(s.feuerbach), _fmt(s.jerabek_excentral)] for s in profile]
    _emit(_csv_text(header, rows), args.out)
    ratios = np.array([s.ratio for s in profile])
    payload = {
        "schema": SCHEMA,
        "command": "hyperbolae",
        "a": args.a,
        "b": args.b,
        "n_samples": len(profile),
        "ratio_mean": float(ratios.mean()),
        "ratio_spread_rel": float((ratios.max() - ratios.min()) / ratios.mean()),
        "ratio_closed_form": focal_ratio_closed_form(shape),
        "feuerbach_interior_maxima": count_interior_maxima([s.feuerbach for s in profile]),
    }
    sys.stdout.write(_json_dump(payload))
    return 0


def cmd_render(args, parser) -> int:
    overlays = []
    if args.overlay:
        if args.a is None or args.b is None:
            parser.error("--overlay needs --a and --b for the ellipse axes")
        shape = _require_shape(parser, args.a, args.b)
        for name in args.overlay:
            if name == "billiard":
                overlays.append((shape.a, shape.b))
            else:
                caus = caustic(shape)
                overlays.append((caus.semi_major, caus.semi_minor))
    with open(args.input, newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or "x" not in reader.fieldnames or "y" not in reader.fieldnames:
            raise ValueError("input CSV needs 'x' and 'y' columns")
        points = [(float(row["x"]), float(row["y"])) for row in reader]
    write_text_atomic(args.out, render_svg(points, overlays=overlays))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "family":
            _require_shape(parser, args.a, args.b)
            return cmd_family(args)
        if args.command == "cb":
            return cmd_cb(args)
        if args.command == "locus":
            if args.n < 8:
                parser.error("need --n >= 8")
            return cmd_locus(args, parser)
        if args.command == "invariants":
            return cmd_invariants(args, parser)
        if args.command == "poristic":
            return cmd_poristic(args, parser)
        if args.command == "hyperbolae":
            return cmd_hyperbolae(args, parser)
        if args.command == "render":
            return cmd_render(args, parser)
        parser.error(f"unknown command {args.command!r}")
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"orbitconics: error: {exc}\n")
        return 1
    except OrbitConicsError as exc:
        sys.stderr.write(
            _json_dump({"error": type(exc).__name__, "message": str(exc)})
        )
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
