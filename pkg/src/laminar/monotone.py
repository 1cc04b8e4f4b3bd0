"""Degree-one monotone circle maps and the calculus of laminar relations.

A :class:`MonotoneMap` is piecewise linear with rational breakpoints.  It is
stored through a lift ``F: R -> R`` with ``F(t + 1) = F(t) + 1``: breakpoints
``xs`` sorted in ``[0, 1)`` and nondecreasing lifted values ``ys`` with
``ys[-1] <= ys[0] + 1``.  Between breakpoints the lift is affine; the segment
after the last breakpoint closes up at ``(xs[0] + 1, ys[0] + 1)``.
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Union

from .circle import Arc, Chord, ccw_dist, point
from .laminations import LaminarRelation


@dataclass(frozen=True)
class Point:
    """A fiber that is a single point."""

    p: Fraction


@dataclass(frozen=True)
class ClosedArc:
    """A fiber that is a nondegenerate closed arc (a flat)."""

    arc: Arc

    @property
    def clockwise_end(self) -> Fraction:
        return self.arc.start

    @property
    def anticlockwise_end(self) -> Fraction:
        return self.arc.end


Fiber = Union[Point, ClosedArc]


class MonotoneMap:
    """PL weakly monotone degree-one map of the circle.

    Construct from breakpoint pairs ``(x, y)``.  The ``y`` values are lifted
    as given when they already form a valid lift (nondecreasing after sorting
    by ``x``, total span at most one); otherwise they are read mod 1 and
    unwrapped with the least nonnegative advance per segment.  The stored
    form is normalized: collinear breakpoints are merged and ``ys[0]`` lies in
    ``[0, 1)``, so equal maps compare equal.
    """

    __slots__ = ("xs", "ys", "_knots")

    def __init__(self, pairs: Iterable):
        pts = sorted((Fraction(x), Fraction(y)) for x, y in pairs)
        if not pts:
            raise ValueError("a monotone map needs at least one breakpoint")
        xs = [x for x, _ in pts]
        ys = [y for _, y in pts]
        if any(not 0 <= x < 1 for x in xs):
            xs_red = [point(x) for x in xs]
            pts = sorted(zip(xs_red, ys))
            xs = [x for x, _ in pts]
            ys = [y for _, y in pts]
        if len(set(xs)) != len(xs):
            raise ValueError("breakpoint x values must be distinct")
        if not _is_lift(ys):
            ys = _unwrap(ys)
            if not _is_lift(ys):
                raise ValueError("breakpoint values wind more than once: not degree one")
        self.xs, self.ys = _normalize(xs, ys)
        self._knots = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def identity(cls) -> "MonotoneMap":
        return cls([(0, 0)])

    @classmethod
    def rotation(cls, r) -> "MonotoneMap":
        return cls([(0, point(r))])

    @classmethod
    def collapse(cls, start, end, value=None) -> "MonotoneMap":
        """Collapse the arc ``[start, end]`` to ``value`` (default ``start``).

        The complementary arc is stretched affinely onto the rest of the circle.
        """
        start, end = Fraction(start), Fraction(end)
        if end <= start:
            end += 1
        if not 0 < end - start < 1:
            raise ValueError("collapsed arc must be a proper nondegenerate arc")
        value = start if value is None else Fraction(value)
        a, b = point(start), point(end)
        # when the arc wraps past 0 its end sits one turn lower in the lift
        return cls([(a, value), (b, value if a < b else value - 1)])

    def flats(self) -> list:
        """Maximal arcs on which the map is constant, as :class:`Arc` values."""
        k = self._ext()
        out = []
        n = len(self.xs)
        for i in range(n):
            (x0, y0), (x1, y1) = k[n + i], k[n + i + 1]
            if y0 == y1:
                out.append(Arc(x0, x1))
        return out

    def is_injective(self) -> bool:
        return not self.flats()

    # -- evaluation -----------------------------------------------------------

    def _ext(self):
        """Knots over three periods, for lookups anywhere near one period."""
        if self._knots is None:
            n = len(self.xs)
            knots = []
            for shift in (-1, 0, 1):
                knots.extend((x + shift, y + shift) for x, y in zip(self.xs, self.ys))
            knots.append((self.xs[0] + 2, self.ys[0] + 2))
            self._knots = knots
        return self._knots

    def lift(self, t) -> Fraction:
        """Value of the lift at a real (rational) ``t``."""
        t = Fraction(t)
        k = floor(t - self.xs[0])
        r = t - k
        knots = self._ext()
        kx = [x for x, _ in knots]
        i = bisect_right(kx, r) - 1
        (x0, y0), (x1, y1) = knots[i], knots[i + 1]
        return k + y0 + (y1 - y0) * (r - x0) / (x1 - x0)

    def __call__(self, p) -> Fraction:
        return point(self.lift(Fraction(p)))

    apply = __call__

    def preimage(self, q) -> Fiber:
        """Exact fiber over ``q``: a point, or the closed arc of a flat."""
        q = point(q)
        base = self.ys[0]
        target = base + (q - base) % 1
        lo = hi = None
        knots = self._ext()
        for (x0, y0), (x1, y1) in zip(knots, knots[1:]):
            if y0 == target:
                lo = x0 if lo is None else min(lo, x0)
                hi = x0 if hi is None else max(hi, x0)
            if y0 < target < y1:
                t = x0 + (target - y0) * (x1 - x0) / (y1 - y0)
                lo = t if lo is None else min(lo, t)
                hi = t if hi is None else max(hi, t)
        if lo == hi:
            return Point(point(lo))
        return ClosedArc(Arc(lo, hi))

    # -- structure ------------------------------------------------------------

    def pairs(self) -> list:
        return list(zip(self.xs, self.ys))

    def to_json(self) -> list:
        return [[str(x), str(y)] for x, y in self.pairs()]

    def __eq__(self, other):
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        return hash((tuple(self.xs), tuple(self.ys)))

    def __repr__(self):
        body = ", ".join(f"({x}, {y})" for x, y in self.pairs())
        return f"{type(self).__name__}([{body}])"


def _is_lift(ys) -> bool:
    return all(a <= b for a, b in zip(ys, ys[1:])) and ys[-1] <= ys[0] + 1


def _unwrap(ys):
    out = [ys[0]]
    for y in ys[1:]:
        out.append(out[-1] + (y - out[-1]) % 1)
    return out


def _normalize(xs, ys):
    n = len(xs)
    shift = floor(ys[0])
    ys = [y - shift for y in ys]
    if n == 1:
        return list(xs), list(ys)
    # a knot is redundant when the slopes on both sides agree
    keep = []
    for i in range(n):
        xp, yp = (xs[i - 1], ys[i - 1]) if i else (xs[-1] - 1, ys[-1] - 1)
        xn, yn = (xs[i + 1], ys[i + 1]) if i + 1 < n else (xs[0] + 1, ys[0] + 1)
        left = (ys[i] - yp) / (xs[i] - xp)
        right = (yn - ys[i]) / (xn - xs[i])
        if left != right:
            keep.append(i)
    if not keep:
        # slope one everywhere: a rotation, stored by its value at 0
        c = ys[0] - xs[0]
        return [Fraction(0)], [c - floor(c)]
    xs2 = [xs[i] for i in keep]
    ys2 = [ys[i] for i in keep]
    shift = floor(ys2[0])
    return xs2, [y - shift for y in ys2]


# -- the calculus ---------------------------------------------------------------


def apply(phi: MonotoneMap, p) -> Fraction:
    return phi(p)


def preimage(phi: MonotoneMap, q) -> Fiber:
    return phi.preimage(q)


def pushforward(phi: MonotoneMap, rel: LaminarRelation) -> LaminarRelation:
    """Image relation; leaves whose endpoints are identified are dropped."""
    out = set()
    for leaf in rel.leaves:
        a, b = phi(leaf.a), phi(leaf.b)
        if a != b:
            out.add(Chord(a, b))
    return LaminarRelation(out)


def _fiber_ends(f: Fiber):
    if isinstance(f, Point):
        return f.p, f.p
    return f.clockwise_end, f.anticlockwise_end


def _attach_points(phi: MonotoneMap, rel: LaminarRelation) -> dict:
    """Endpoints of the blown-up fiber that each leaf attaches to, per end.

    A leaf alone at a point whose fiber is an arc ``I`` attaches to both
    ``I+`` and ``I-``.  When several leaves share that point, listed
    anticlockwise from it, only the last one also attaches to ``I-``; the
    others attach to ``I+`` alone, which keeps the pullback unlinked.
    """
    fibers = {p: phi.preimage(p) for p in rel.endpoints()}
    fans = {}
    for leaf in rel.leaves:
        for p in leaf.endpoints:
            fans.setdefault(p, []).append(leaf)
    attach = {}
    for p, fan in fans.items():
        f = fibers[p]
        if isinstance(f, Point):
            for leaf in fan:
                attach[(leaf, p)] = (f.p,)
            continue
        fan.sort(key=lambda l: ccw_dist(p, l.other(p)))
        for leaf in fan[:-1]:
            attach[(leaf, p)] = (f.anticlockwise_end,)
        attach[(fan[-1], p)] = (f.anticlockwise_end, f.clockwise_end)
    return attach


def pullback_min(phi: MonotoneMap, rel: LaminarRelation) -> LaminarRelation:
    """Minimal pullback.

    Point/point fibers give one leaf; a point ``p`` against an arc ``I`` gives
    the leaves ``{p, I+}`` and ``{p, I-}``; two arcs ``I, J`` give
    ``{I+, J-}`` and ``{J+, I-}``.  Leaves sharing a blown-up endpoint follow
    :func:`_attach_points`.
    """
    attach = _attach_points(phi, rel)
    out = set()
    for leaf in rel.leaves:
        xs, ys = attach[(leaf, leaf.a)], attach[(leaf, leaf.b)]
        if len(xs) == 2 and len(ys) == 2:
            (i_plus, i_minus), (j_plus, j_minus) = xs, ys
            out.add(Chord(i_plus, j_minus))
            out.add(Chord(j_plus, i_minus))
        else:
            out.update(Chord(x, y) for x in xs for y in ys)
    return LaminarRelation(out)


def pullback_max(phi: MonotoneMap, rel: LaminarRelation) -> LaminarRelation:
    """Minimal pullback plus the leaf spanning every flat of ``phi``."""
    base = pullback_min(phi, rel)
    extra = {Chord(f.start, f.end) for f in phi.flats()}
    return LaminarRelation(base.leaves | extra)


def pullback(phi: MonotoneMap, rel: LaminarRelation, mode: str = "min") -> LaminarRelation:
    if mode == "min":
        return pullback_min(phi, rel)
    if mode == "max":
        return pullback_max(phi, rel)
    raise ValueError(f"unknown pullback mode {mode!r}")


def compose(phi2: MonotoneMap, phi1: MonotoneMap) -> MonotoneMap:
    """``phi2 o phi1`` as an exact PL map."""
    xs = set(phi1.xs)
    for x2 in phi2.xs:
        f = phi1.preimage(x2)
        xs.update(_fiber_ends(f))
    pairs = [(x, phi2.lift(phi1.lift(x))) for x in sorted(xs)]
    cls = type(phi1) if type(phi1) is type(phi2) else MonotoneMap
    return cls(pairs)
