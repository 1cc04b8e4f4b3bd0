"""Exact points, arcs and chords on the circle R/Z.

A point of the circle is a :class:`fractions.Fraction` in ``[0, 1)``; the
value is the angle divided by ``2*pi``.  Everything downstream compares
points with ``==``, so no tolerance ever appears.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

Rational = Union[Fraction, int, str]


def point(x: Rational) -> Fraction:
    """Reduce ``x`` to its canonical representative in ``[0, 1)``.

    Strings of the form ``"p/q"`` are accepted, as in scenario files.
    """
    return Fraction(x) % 1


def ccw_dist(a: Fraction, b: Fraction) -> Fraction:
    """Length of the anticlockwise arc from ``a`` to ``b`` (in ``[0, 1)``)."""
    return (b - a) % 1


def circ_dist(a: Fraction, b: Fraction) -> Fraction:
    """Circular distance, at most 1/2."""
    d = (a - b) % 1
    return min(d, 1 - d)


class Orientation(Enum):
    POSITIVE = 1
    NEGATIVE = -1
    DEGENERATE = 0


def cyclic_order(a: Fraction, b: Fraction, c: Fraction) -> Orientation:
    """Orientation of the triple ``(a, b, c)``.

    Positive when ``b`` lies on the open anticlockwise arc from ``a`` to ``c``.
    """
    if a == b or b == c or a == c:
        return Orientation.DEGENERATE
    if ccw_dist(a, b) < ccw_dist(a, c):
        return Orientation.POSITIVE
    return Orientation.NEGATIVE


@dataclass(frozen=True)
class Arc:
    """Closed anticlockwise arc from ``start`` to ``end``.

    ``start == end`` is the one-point arc.  The whole circle is the separate
    value :data:`WHOLE_CIRCLE`, never an arc with equal endpoints.
    """

    start: Fraction
    end: Fraction
    whole: bool = False

    def __post_init__(self):
        if self.whole:
            object.__setattr__(self, "start", Fraction(0))
            object.__setattr__(self, "end", Fraction(0))
        else:
            object.__setattr__(self, "start", point(self.start))
            object.__setattr__(self, "end", point(self.end))

    @property
    def length(self) -> Fraction:
        return Fraction(1) if self.whole else ccw_dist(self.start, self.end)

    def contains(self, p: Fraction) -> bool:
        """Membership in the closed arc."""
        if self.whole:
            return True
        return ccw_dist(self.start, p) <= self.length

    def contains_open(self, p: Fraction) -> bool:
        """Membership in the open arc (endpoints excluded)."""
        if self.whole:
            return True
        return 0 < ccw_dist(self.start, p) < self.length

    def __str__(self):
        if self.whole:
            return "S1"
        return f"[{self.start}, {self.end}]"


WHOLE_CIRCLE = Arc(Fraction(0), Fraction(0), whole=True)


def in_open_arc(p: Fraction, arc: Arc) -> bool:
    return arc.contains_open(p)


@dataclass(frozen=True, order=True)
class Chord:
    """Unordered pair of distinct circle points, stored lesser value first."""

    a: Fraction
    b: Fraction

    def __init__(self, a: Rational, b: Rational):
        a, b = point(a), point(b)
        if a == b:
            raise ValueError(f"degenerate chord at {a}")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def endpoints(self) -> tuple:
        return (self.a, self.b)

    def other(self, p: Fraction) -> Fraction:
        if p == self.a:
            return self.b
        if p == self.b:
            return self.a
        raise ValueError(f"{p} is not an endpoint of {self}")

    def __str__(self):
        return f"{{{self.a}, {self.b}}}"

    def __repr__(self):
        return f"Chord({self.a}, {self.b})"


class Relation(Enum):
    EQUAL = "equal"
    SHARED_ENDPOINT = "shared_endpoint"
    DISJOINT = "disjoint"
    LINKED = "linked"


def chords_relate(l1: Chord, l2: Chord) -> Relation:
    if l1 == l2:
        return Relation.EQUAL
    if set(l1.endpoints) & set(l2.endpoints):
        return Relation.SHARED_ENDPOINT
    side = Arc(l1.a, l1.b)
    inside = side.contains_open(l2.a) + side.contains_open(l2.b)
    return Relation.LINKED if inside == 1 else Relation.DISJOINT


def links(l1: Chord, l2: Chord) -> bool:
    return chords_relate(l1, l2) is Relation.LINKED


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"`` (integers as plain ``"p"``)."""
    return str(Fraction(x))
