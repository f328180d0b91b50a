"""``netlab``: command-line front end.

Exit codes: 0 success, 1 semantic failure (a net fails verification, or a
search with ``--expect-found`` finds nothing), 2 usage, parse or I/O errors.
The NETLAB_TOL environment variable overrides the relative geometric
tolerance (default 1e-9, multiplied by the polygon scale).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import admissibility, construct
from .io import NetFormatError, dumps, load_net
from .net import GEOM_REL, MalformedNet, verify
from .render import render_development, render_sheets
from .search import BIFOCAL_TARGET, FIGURE8, SearchConfig, search_bifocal, search_figure8
from .surface import InvalidSpec

FAMILIES = ("theta", "tetra", "figure8-odd", "figure8-isosceles", "figure8-hexagon",
            "bifocal-triangle")


class UsageError(Exception):
    pass


def _tolerance(arg: float | None) -> float:
    if arg is not None:
        return arg
    env = os.environ.get("NETLAB_TOL")
    if env is None:
        return GEOM_REL
    try:
        val = float(env)
    except ValueError:
        raise UsageError(f"NETLAB_TOL={env!r} is not a number") from None
    if not val > 0:
        raise UsageError("NETLAB_TOL must be positive")
    return val


def _angles(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError("--angles takes three comma-separated values")
    return parts


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_admissible(args) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    try:
        _emit(admissibility.report(args.n, args.graph))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


def cmd_classify_triangle(args) -> int:
    parts = _angles(args.angles)
    try:
        if args.radians:
            flags = admissibility.classify_triangle([float(p) for p in parts])
        else:
            from fractions import Fraction
            flags = admissibility.classify_triangle_deg([Fraction(p) for p in parts])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    _emit({"angles": parts, "units": "radians" if args.radians else "degrees", **flags})
    return 0


def cmd_construct(args) -> int:
    fam = args.family
    try:
        if fam == "theta":
            net = construct.construct_theta_regular(_need_n(args))
        elif fam == "tetra":
            net = construct.construct_3regular_4n(_need_n(args))
        elif fam == "figure8-odd":
            net = construct.construct_figure8_odd(_need_n(args))
        elif fam == "figure8-isosceles":
            if not args.angles:
                raise UsageError("--angles is required for figure8-isosceles")
            from fractions import Fraction
            net = construct.construct_figure8_isosceles([Fraction(a) for a in _angles(args.angles)])
        elif fam == "figure8-hexagon":
            net = construct.construct_figure8_hexagon()
        else:
            net = construct.construct_bifocal_30_30_120()
    except (construct.ConstructionError, InvalidSpec, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    text = dumps(net) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError(f"--n is required for family {args.family}")
    return args.n


def cmd_verify(args) -> int:
    net = load_net(args.net)
    rel = _tolerance(args.tol)
    try:
        rep = verify(net, tol=rel * net.surface.scale)
    except MalformedNet as exc:
        raise NetFormatError(str(exc)) from exc
    _emit(rep.to_json())
    return 0 if rep.passed else 1


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(n=args.n, target=args.target, max_word_length=args.max_word,
                           max_length=args.max_length,
                           report_near_misses=args.near_misses, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = search_figure8(cfg) if cfg.target == FIGURE8 else search_bifocal(cfg)
    data = report.to_json()
    if not args.near_misses:
        data.pop("near_misses")
    if args.report:
        _emit(data, args.report)
        summary = {k: data[k] for k in ("candidates_examined", "loops_examined",
                                        "solution_count", "exhaustive_up_to", "heuristic")}
        _emit(summary)
    else:
        _emit(data)
    if args.expect_found and not report.solutions:
        return 1
    return 0


def cmd_render(args) -> int:
    net = load_net(args.net)
    try:
        svg = (render_sheets(net) if args.mode == "sheets"
               else render_development(net, args.edge))
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    Path(args.output).write_text(svg)
    return 0


def cmd_repro(args) -> int:
    from .repro import run
    return run(quick=args.quick, stream=sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="netlab", description="Geodesic nets on doubled polygons.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("admissible", help="Gauss-Bonnet admissibility for the regular n-gon")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--graph", choices=["three_regular", "3regular", "theta", "bifocal",
                                       "figure8"])
    a.set_defaults(func=cmd_admissible)

    c = sub.add_parser("classify-triangle", help="which nets a doubled triangle can carry")
    c.add_argument("--angles", required=True, help="A,B,C in degrees (exact) or radians")
    c.add_argument("--radians", action="store_true")
    c.set_defaults(func=cmd_classify_triangle)

    k = sub.add_parser("construct", help="build a known net and write it as JSON")
    k.add_argument("--family", choices=FAMILIES, required=True)
    k.add_argument("--n", type=int)
    k.add_argument("--angles")
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a net file")
    v.add_argument("net")
    v.add_argument("--tol", type=float, help="relative geometric tolerance")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="bounded search for figure-eights or bifocals")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--target", choices=[FIGURE8, BIFOCAL_TARGET], default=FIGURE8)
    s.add_argument("--max-word", type=int, default=24)
    s.add_argument("--max-length", type=float, default=20.0)
    s.add_argument("--report")
    s.add_argument("--near-misses", action="store_true")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--expect-found", action="store_true")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("render", help="draw a net as SVG")
    r.add_argument("net")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--mode", choices=["sheets", "development"], default="sheets")
    r.add_argument("--edge", type=int, default=0)
    r.set_defaults(func=cmd_render)

    q = sub.add_parser("repro", help="re-check every reproduced result and print a table")
    q.add_argument("--quick", action="store_true", help="smaller brute-force sample")
    q.set_defaults(func=cmd_repro)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NetFormatError) as exc:
        print(f"netlab: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"netlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
