"""Command line entry point ``laminar``.

``laminar run`` executes a scenario file.  The other verbs are shortcuts that
run a single command, reading fixtures from a scenario file where needed,
and print the command's entry of the report as JSON.
"""

import argparse
import json
import sys
from pathlib import Path

from .scenario import EXIT_INVALID, ScenarioError, load, run_file, run_scenario


def _point_arg(s: str) -> dict:
    h, _, w = s.partition(":")
    return {"h": h, "w": w}


def _fixtures(path) -> dict:
    if path is None:
        return {}
    data = load(Path(path).read_text())
    data.pop("commands", None)
    return data


def _single(args, command: dict) -> int:
    try:
        data = _fixtures(getattr(args, "file", None))
    except (OSError, ScenarioError) as e:
        print(json.dumps({"status": "invalid", "error": str(e), **getattr(e, "detail", {})}))
        return EXIT_INVALID
    data["commands"] = [command]
    code, report = run_scenario(data)
    entry = report["commands"][0] if report["commands"] else report
    entry.pop("wall_time", None)
    print(json.dumps(entry, indent=2, sort_keys=True))
    if code == 0 and getattr(args, "svg", None) and "result" in entry:
        from .laminations import LaminarRelation
        from .svg import render_svg

        rel = LaminarRelation(tuple(l) for l in entry["result"])
        Path(args.svg).write_text(render_svg(rel, geodesic=not args.straight))
    return code


def _cmd_run(args) -> int:
    code, report = run_file(args.file, args.out, args.svg, args.seed)
    if args.out is None or args.verbose:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"{report.get('status', 'invalid')}: {len(report.get('commands', []))} commands, "
              f"report in {Path(args.out, 'report.json')}")
    return code


def _oracle_command(args) -> dict:
    cmd = {"op": "oracle", "kind": args.kind}
    if args.kind == "linking":
        cmd["n"] = args.n
    elif args.kind == "hull":
        cmd["points"] = args.points
    elif args.kind == "faces":
        cmd["lamination"] = [p.split(",") for p in args.points]
    elif args.kind == "word-search":
        cmd["interval"] = [_point_arg(p) for p in (args.interval or ["-1:0", "0:"])]
        cmd["max_word_len"] = args.max_word_len
        cmd["chart"] = {"n": args.arity}
    return cmd


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="laminar", description="Exact laminations, monotone maps and leaf spaces.")
    sub = p.add_subparsers(dest="verb", required=True)

    r = sub.add_parser("run", help="run a scenario file")
    r.add_argument("file")
    r.add_argument("--out", help="directory for report.json and SVG files")
    r.add_argument("--svg", action="store_true", help="write an SVG for every lamination result")
    r.add_argument("--seed", type=int, help="override the seed of randomized commands")
    r.add_argument("-v", "--verbose", action="store_true")
    r.set_defaults(func=_cmd_run)

    o = sub.add_parser("oracle", help="compare against a brute-force oracle")
    o.add_argument("kind", choices=["linking", "hull", "faces", "word-search"])
    o.add_argument("points", nargs="*", help="hull points, or leaves as a,b for faces")
    o.add_argument("--n", type=int, default=12, help="grid size for linking")
    o.add_argument("--arity", type=int, default=2, help="branching of the chart for word search")
    o.add_argument("--interval", nargs=2, metavar="H:W")
    o.add_argument("--max-word-len", type=int, default=6)
    o.set_defaults(func=lambda a: _single(a, _oracle_command(a)))

    def verb(name, help_, build, file_=True, svg=False):
        s = sub.add_parser(name, help=help_)
        if file_:
            s.add_argument("file", help="scenario file holding the fixtures")
        if svg:
            s.add_argument("--svg", metavar="PATH", help="also draw the result")
            s.add_argument("--straight", action="store_true", help="straight chords instead of geodesics")
        s.set_defaults(func=lambda a: _single(a, build(a)))
        return s

    s = verb("pushforward", "image of a lamination", lambda a: {
        "op": "pushforward", "map": a.map, "lamination": a.lamination}, svg=True)
    s.add_argument("map"), s.add_argument("lamination")
    s = verb("pullback", "minimal or maximal pullback", lambda a: {
        "op": "pullback", "map": a.map, "lamination": a.lamination, "mode": a.mode}, svg=True)
    s.add_argument("map"), s.add_argument("lamination")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--min", dest="mode", action="store_const", const="min")
    g.add_argument("--max", dest="mode", action="store_const", const="max")
    s.set_defaults(mode="min")
    s = verb("compose", "composite of two maps", lambda a: {"op": "compose", "outer": a.outer, "inner": a.inner})
    s.add_argument("outer"), s.add_argument("inner")

    s = verb("classify", "dynamics class of a homeomorphism", lambda a: {
        "op": "classify", "homeo": a.homeo, "max_period": a.max_period})
    s.add_argument("homeo"), s.add_argument("--max-period", type=int, default=12)
    s = verb("rot", "rotation number", lambda a: {"op": "rot", "homeo": a.homeo, "max_period": a.max_period})
    s.add_argument("homeo"), s.add_argument("--max-period", type=int, default=12)
    s = verb("dual", "dual polygon of a pseudo-Anosov-like map", lambda a: {
        "op": "dual", "homeo": a.homeo, "vertices": a.vertices})
    s.add_argument("homeo"), s.add_argument("vertices", nargs="+")
    s = verb("orbit", "orbit closure of a seed lamination", lambda a: {
        "op": "orbit", "seed": a.seed, "depth": a.depth,
        "generators": dict(g.split("=", 1) for g in a.gen)}, svg=True)
    s.add_argument("seed"), s.add_argument("--gen", action="append", required=True, metavar="a=HOMEO")
    s.add_argument("--depth", type=int, default=3)
    s = verb("sticky-build", "sticky lamination", lambda a: {
        "op": "sticky-build", "n_levels": a.n_levels, "arity_cap": a.arity_cap}, file_=False, svg=True)
    s.add_argument("n_levels", type=int), s.add_argument("arity_cap", type=int)
    s = verb("sticky-detect", "sticky ends of a lamination", lambda a: {
        "op": "sticky-detect", "lamination": a.lamination, "min_chain": a.min_chain})
    s.add_argument("lamination"), s.add_argument("--min-chain", type=int, default=2)

    verb("validate", "build and validate every declaration", lambda a: {"op": "declarations"})
    s = verb("universal", "maps from the top circle", lambda a: {"op": "universal", "markers": a.markers})
    s.add_argument("markers")
    s = verb("pinch", "pinching lamination of a pair", lambda a: {
        "op": "pinch", "markers": a.markers, "upper": a.upper, "lower": a.lower, "mode": a.mode}, svg=True)
    s.add_argument("markers"), s.add_argument("upper"), s.add_argument("lower")
    s.add_argument("--mode", choices=["closure", "finite"], default="closure")
    s = verb("pinch-total", "union of pinching laminations", lambda a: {
        "op": "pinch-total", "markers": a.markers, "leaf": a.leaf}, svg=True)
    s.add_argument("markers"), s.add_argument("leaf")
    s = verb("push-check", "pushforward consistency of pinching laminations", lambda a: {
        "op": "push-check", "markers": a.markers, "upper": a.upper, "lower": a.lower})
    s.add_argument("markers"), s.add_argument("upper"), s.add_argument("lower")
    s = verb("classify-polygon", "image type of a polygon", lambda a: {
        "op": "classify-polygon", "map": a.map, "vertices": a.vertices})
    s.add_argument("map"), s.add_argument("vertices", nargs="+")

    s = verb("zmap", "Z map on the n-adic chart", lambda a: {
        "op": "zmap", "chart": {"n": a.n}, "point": _point_arg(a.point)}, file_=False)
    s.add_argument("point", metavar="H:W"), s.add_argument("--n", type=int, default=2)
    s = verb("sup", "least upper bound", lambda a: {
        "op": "sup", "chart": {"n": a.n}, "points": [_point_arg(p) for p in a.points]}, file_=False)
    s.add_argument("points", nargs="+", metavar="H:W"), s.add_argument("--n", type=int, default=2)
    s = verb("act", "apply a word in x, t and inverses", lambda a: {
        "op": "act", "chart": {"n": a.n}, "word": a.word, "point": _point_arg(a.point),
        "digits": a.digits}, file_=False)
    s.add_argument("word"), s.add_argument("point", metavar="H:W")
    s.add_argument("--n", type=int, default=2), s.add_argument("--digits", type=int, nargs="*")
    s = verb("compress-search", "search for a compressing word", lambda a: {
        "op": "compress-search", "chart": {"n": a.n}, "max_word_len": a.max_word_len,
        "interval": [_point_arg(p) for p in a.interval]}, file_=False)
    s.add_argument("--interval", nargs=2, default=["-1:0", "0:"], metavar="H:W")
    s.add_argument("--n", type=int, default=2), s.add_argument("--max-word-len", type=int, default=6)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
