"""Deterministic SVG chord diagrams."""

import json
import math
from fractions import Fraction

from .circle import circ_dist
from .laminations import LaminarRelation, gap_census

SIZE = 400
RADIUS = 180


def _xy(p: Fraction, c: float, r: float) -> tuple:
    a = 2 * math.pi * float(p)
    # SVG's y axis points down; flip so anticlockwise reads anticlockwise
    return c + r * math.cos(a), c - r * math.sin(a)


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _chord_path(a: Fraction, b: Fraction, c: float, r: float, geodesic: bool) -> str:
    if (b - a) % 1 > Fraction(1, 2):
        a, b = b, a
    x1, y1 = _xy(a, c, r)
    x2, y2 = _xy(b, c, r)
    start = f"M {_fmt(x1)} {_fmt(y1)}"
    if not geodesic or circ_dist(a, b) == Fraction(1, 2):
        return f"{start} L {_fmt(x2)} {_fmt(y2)}"
    # the orthogonal circle through both endpoints has radius r*tan(delta/2)
    half = math.pi * float((b - a) % 1)
    rr = r * math.tan(half)
    # b is anticlockwise of a by less than half a turn: the geodesic bends
    # towards the centre, which is a clockwise sweep on screen
    return f"{start} A {_fmt(rr)} {_fmt(rr)} 0 0 1 {_fmt(x2)} {_fmt(y2)}"


def render_svg(rel: LaminarRelation, geodesic: bool = True, points=(), title: str = "") -> str:
    """Unit-circle picture of ``rel``; ``points`` are drawn as marker dots.

    Leaf count and gap census are embedded as JSON metadata.
    """
    c, r = SIZE / 2, RADIUS
    census = gap_census(rel)
    meta = {
        "leaves": len(rel),
        "gaps": {"polygons": {str(k): v for k, v in sorted(census["polygons"].items())},
                 "cusp": census["cusp"]},
        "style": "geodesic" if geodesic else "straight",
    }
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<metadata>{json.dumps(meta, sort_keys=True)}</metadata>",
    ]
    if title:
        lines.append(f"<title>{_escape(title)}</title>")
    lines.append(f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(r)}" fill="none" stroke="black" stroke-width="1.5"/>')
    for leaf in rel.sorted_leaves():
        d = _chord_path(leaf.a, leaf.b, c, r, geodesic)
        lines.append(f'<path d="{d}" fill="none" stroke="#1f4e9a" stroke-width="1"/>')
    for p in sorted({Fraction(q) % 1 for q in points}):
        x, y = _xy(p, c, r)
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#b03030"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def svg_metadata(svg: str) -> dict:
    start = svg.index("<metadata>") + len("<metadata>")
    return json.loads(svg[start:svg.index("</metadata>")])
