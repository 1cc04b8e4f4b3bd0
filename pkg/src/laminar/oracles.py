"""Brute-force reference implementations for small instances.

Nothing here imports the main modules' algorithms: points are plain
fractions, chords are pairs, and maps are lists of breakpoint pairs.  Each
oracle refuses instances above its documented size with
:class:`BoundsExceeded`.
"""

import math
from fractions import Fraction
from itertools import combinations, product
from math import lcm

MAX_GRID = 4096
MAX_HULL_POINTS = 12
MAX_FACE_LEAVES = 40
MAX_WORD_LEN = 6


class BoundsExceeded(ValueError):
    pass


def _frac(x) -> Fraction:
    return Fraction(x) % 1


# -- linking ----------------------------------------------------------------------


def links_on_grid(c1, c2) -> bool:
    """Walk the common-denominator grid from one endpoint of ``c1`` to the
    other and count endpoints of ``c2`` met strictly inside."""
    pts = [_frac(x) for x in (*c1, *c2)]
    if len(set(pts)) < 4:
        return False
    d = lcm(*(p.denominator for p in pts))
    if d > MAX_GRID:
        raise BoundsExceeded(f"common denominator {d} exceeds {MAX_GRID}")
    a, b, r, s = (int(p * d) for p in pts)
    inside = 0
    i = (a + 1) % d
    while i != b:
        inside += i in (r, s)
        i = (i + 1) % d
    return inside == 1


def linking_table(n: int) -> dict:
    """Linking of both pairings of every 4-subset of the n-point grid."""
    if n > 24:
        raise BoundsExceeded("grid of at most 24 points")
    grid = [Fraction(i, n) for i in range(n)]
    table = {}
    for quad in combinations(grid, 4):
        for c1, c2 in (((quad[0], quad[1]), (quad[2], quad[3])),
                       ((quad[0], quad[2]), (quad[1], quad[3])),
                       ((quad[0], quad[3]), (quad[1], quad[2]))):
            table[(c1, c2)] = links_on_grid(c1, c2)
    return table


# -- convex hull ---------------------------------------------------------------


def hull_edges(points) -> set:
    """Edges of the convex hull of points on the unit circle, by checking
    that every other point lies on one side of the candidate edge."""
    pts = sorted({_frac(p) for p in points})
    if len(pts) > MAX_HULL_POINTS:
        raise BoundsExceeded(f"at most {MAX_HULL_POINTS} hull points")
    if len(pts) < 2:
        return set()
    xy = {p: (math.cos(2 * math.pi * p), math.sin(2 * math.pi * p)) for p in pts}
    edges = set()
    for p, q in combinations(pts, 2):
        (x1, y1), (x2, y2) = xy[p], xy[q]
        sides = set()
        for r in pts:
            if r in (p, q):
                continue
            x3, y3 = xy[r]
            cross = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)
            sides.add(cross > 0)
        if len(sides) <= 1:
            edges.add((p, q))
    return edges


# -- faces -----------------------------------------------------------------------


def face_sizes(chords) -> list:
    """Faces of a non-crossing chord diagram by tracing a planar embedding.

    Vertices are the chord endpoints on the unit circle; edges are the chords
    and the circle arcs between consecutive endpoints.  Every face inside the
    disk is traced by turning as far as possible at each vertex.  Returns, per
    face, the number of chord edges and the number of arc edges.
    """
    chords = {tuple(sorted((_frac(a), _frac(b)))) for a, b in chords}
    if len(chords) > MAX_FACE_LEAVES:
        raise BoundsExceeded(f"at most {MAX_FACE_LEAVES} leaves")
    verts = sorted({p for c in chords for p in c})
    if not verts:
        return [(0, 1)]
    k = len(verts)
    nxt = {verts[i]: verts[(i + 1) % k] for i in range(k)}
    # darts: ("arc", u) runs anticlockwise from u to nxt[u]; ("chord", u, v)
    darts = [("arc", u) for u in verts]
    for a, b in chords:
        darts += [("chord", a, b), ("chord", b, a)]

    def head(d):
        return nxt[d[1]] if d[0] == "arc" else d[2]

    def angle_from(v, w):
        # position of w as seen from v, measured anticlockwise from the tangent
        return (w - v) % 1

    def successor(d):
        # arriving at v, leave by the next dart clockwise from the way back:
        # the arc out of v sits at angle 0 and the arc arriving at v at 1
        v = head(d)
        came_from = d[1]
        outs = [("arc", v)] + [("chord", v, w) for a, b in chords
                               for w in ((b,) if a == v else (a,) if b == v else ())]
        back = angle_from(v, came_from) if d[0] == "chord" else Fraction(1)
        best = None
        for o in outs:
            ang = Fraction(0) if o[0] == "arc" else angle_from(v, o[2])
            if ang < back and (best is None or ang > best[0]):
                best = (ang, o)
        return best[1]

    seen = set()
    faces = []
    for d in darts:
        if d in seen:
            continue
        n_chords = n_arcs = 0
        cur = d
        while cur not in seen:
            seen.add(cur)
            if cur[0] == "arc":
                n_arcs += 1
            else:
                n_chords += 1
            cur = successor(cur)
        faces.append((n_chords, n_arcs))
    return faces


def face_count(chords) -> int:
    return len(face_sizes(chords))


# -- piecewise linear maps -------------------------------------------------------


def lift_on_scan(pairs, t) -> Fraction:
    """Evaluate a degree-one lift given by breakpoint pairs ``(x, y)`` with
    ``x`` in ``[0, 1)`` and lifted ``y`` values, by scanning segments."""
    pairs = sorted((Fraction(x), Fraction(y)) for x, y in pairs)
    t = Fraction(t)
    shift = math.floor(t - pairs[0][0])
    r = t - shift
    ext = pairs + [(pairs[0][0] + 1, pairs[0][1] + 1)]
    for (x0, y0), (x1, y1) in zip(ext, ext[1:]):
        if x0 <= r <= x1:
            return shift + y0 + (y1 - y0) * (r - x0) / (x1 - x0)
    raise AssertionError("unreachable")


def evaluate_on_grid(pairs, grid: int = 24) -> list:
    if grid > MAX_GRID:
        raise BoundsExceeded(f"grid of at most {MAX_GRID} points")
    return [lift_on_scan(pairs, Fraction(i, grid)) % 1 for i in range(grid)]


def composite_agrees(outer, inner, direct, extra_points=(), grid: int = 24) -> bool:
    """``outer o inner == direct`` at every grid point and every extra point."""
    pts = [Fraction(i, grid) for i in range(grid)] + [Fraction(p) for p in extra_points]
    for p in pts:
        lhs = lift_on_scan(outer, lift_on_scan(inner, p) % 1) % 1
        if lhs != lift_on_scan(direct, p) % 1:
            return False
    return True


# -- words -----------------------------------------------------------------------


def first_compressing_word(letters, apply_letter, leq, interval, max_len: int):
    """Least word (by length, then letter order) moving ``[p, q]`` properly
    inside itself, over all words including unreduced ones."""
    if max_len > MAX_WORD_LEN:
        raise BoundsExceeded(f"words of length at most {MAX_WORD_LEN}")
    p, q = interval
    for n in range(1, max_len + 1):
        for word in product(letters, repeat=n):
            ap, aq = p, q
            for letter in word:
                ap, aq = apply_letter(letter, ap), apply_letter(letter, aq)
            if leq(p, ap) and leq(aq, q) and (ap, aq) != (p, q):
                return " ".join(word)
    return None


# -- Hausdorff distance ----------------------------------------------------------


def hausdorff_by_pairings(a, b) -> Fraction:
    """Hausdorff distance between two chord sets, trying both endpoint
    matchings of every pair of chords."""
    if len(a) * len(b) > 10_000:
        raise BoundsExceeded("at most 10000 chord pairs")

    def arc(x, y):
        d = abs(_frac(x) - _frac(y))
        return min(d, 1 - d)

    def dist(c1, c2):
        (p, q), (r, s) = c1, c2
        return min(max(arc(p, r), arc(q, s)), max(arc(p, s), arc(q, r)))

    a, b = list(a), list(b)
    forward = max(min(dist(x, y) for y in b) for x in a)
    backward = max(min(dist(x, y) for x in a) for y in b)
    return max(forward, backward)
