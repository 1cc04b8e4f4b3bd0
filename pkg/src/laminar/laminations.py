"""Finite laminar relations on the circle and their complementary regions."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .circle import Arc, Chord, circ_dist, links, point


class LinkedPair(ValueError):
    """Two leaves of a would-be laminar relation link."""

    def __init__(self, l1: Chord, l2: Chord):
        super().__init__(f"leaves {l1} and {l2} link")
        self.l1 = l1
        self.l2 = l2


class EmptyRelation(ValueError):
    pass


def _first_linked_pair(leaves):
    leaves = sorted(leaves)
    for i, l1 in enumerate(leaves):
        for l2 in leaves[i + 1:]:
            if links(l1, l2):
                return l1, l2
    return None


class LaminarRelation:
    """A finite, pairwise unlinked set of chords.

    Leaves may share endpoints; only transverse linking is forbidden.
    Instances are immutable and compare equal iff their leaf sets agree.
    """

    __slots__ = ("_leaves",)

    def __init__(self, leaves: Iterable = ()):
        leaves = frozenset(_as_chord(l) for l in leaves)
        bad = _first_linked_pair(leaves)
        if bad is not None:
            raise LinkedPair(*bad)
        self._leaves = leaves

    @classmethod
    def _trusted(cls, leaves: frozenset) -> "LaminarRelation":
        rel = cls.__new__(cls)
        rel._leaves = leaves
        return rel

    @property
    def leaves(self) -> frozenset:
        return self._leaves

    def sorted_leaves(self) -> list:
        return sorted(self._leaves)

    def endpoints(self) -> list:
        return sorted({p for l in self._leaves for p in l.endpoints})

    def __len__(self):
        return len(self._leaves)

    def __iter__(self):
        return iter(self.sorted_leaves())

    def __contains__(self, leaf):
        return _as_chord(leaf) in self._leaves

    def __eq__(self, other):
        if not isinstance(other, LaminarRelation):
            return NotImplemented
        return self._leaves == other._leaves

    def __hash__(self):
        return hash(self._leaves)

    def __repr__(self):
        return "LaminarRelation([" + ", ".join(str(l) for l in self) + "])"

    def to_json(self) -> list:
        return [[str(l.a), str(l.b)] for l in self]


def _as_chord(leaf) -> Chord:
    if isinstance(leaf, Chord):
        return leaf
    a, b = leaf
    return Chord(a, b)


def validate(leaves: Iterable) -> LaminarRelation:
    """Build a relation, raising :class:`LinkedPair` on the first linked pair."""
    return LaminarRelation(leaves)


def hull_boundary(points: Iterable) -> LaminarRelation:
    """Boundary of the ideal convex hull of finitely many circle points."""
    pts = sorted({point(p) for p in points})
    if len(pts) < 2:
        return LaminarRelation._trusted(frozenset())
    if len(pts) == 2:
        return LaminarRelation._trusted(frozenset([Chord(*pts)]))
    sides = {Chord(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))}
    return LaminarRelation._trusted(frozenset(sides))


def is_sublamination(a: LaminarRelation, b: LaminarRelation) -> bool:
    return a.leaves <= b.leaves


def union(a: LaminarRelation, b: LaminarRelation) -> LaminarRelation:
    new = b.leaves - a.leaves
    for l2 in sorted(new):
        for l1 in sorted(a.leaves):
            if links(l1, l2):
                raise LinkedPair(*sorted((l1, l2)))
    return LaminarRelation._trusted(a.leaves | b.leaves)


def leaf_distance(l1: Chord, l2: Chord) -> Fraction:
    """Distance between leaves viewed as unordered pairs of circle points."""
    straight = max(circ_dist(l1.a, l2.a), circ_dist(l1.b, l2.b))
    crossed = max(circ_dist(l1.a, l2.b), circ_dist(l1.b, l2.a))
    return min(straight, crossed)


def hausdorff_distance(a: LaminarRelation, b: LaminarRelation) -> Fraction:
    if not len(a) or not len(b):
        raise EmptyRelation("Hausdorff distance needs two nonempty relations")

    def directed(xs, ys):
        return max(min(leaf_distance(x, y) for y in ys) for x in xs)

    return max(directed(a.leaves, b.leaves), directed(b.leaves, a.leaves))


@dataclass(frozen=True)
class Gap:
    """A complementary region of a finite lamination in the closed disk.

    ``vertices`` lists the ideal points anticlockwise; ``edges[i]`` joins
    ``vertices[i]`` to the next vertex and is either a :class:`Chord` (a side)
    or an :class:`Arc` of the circle (free boundary).
    """

    vertices: tuple
    edges: tuple

    @property
    def sides(self) -> tuple:
        return tuple(e for e in self.edges if isinstance(e, Chord))

    @property
    def free_arcs(self) -> tuple:
        return tuple(e for e in self.edges if isinstance(e, Arc))

    @property
    def is_polygon(self) -> bool:
        """True for an ideal polygon: every boundary edge is a leaf."""
        return bool(self.edges) and not self.free_arcs

    @property
    def n_sides(self) -> int:
        return len(self.sides)


def gaps(rel: LaminarRelation) -> list:
    """Faces of the chord diagram; there are always ``len(rel) + 1`` of them.

    Faces are grown by cutting: start from the disk bounded by arcs between
    consecutive endpoints and split the unique face carrying both endpoints
    of each chord.
    """
    pts = rel.endpoints()
    if not pts:
        return [Gap((), (Arc(0, 0, whole=True),))]
    k = len(pts)
    if k == 1:
        faces = [(list(pts), [Arc(0, 0, whole=True)])]
    else:
        faces = [(list(pts), [Arc(pts[i], pts[(i + 1) % k]) for i in range(k)])]
    # shorter chords first keeps face lists small; any order gives the same faces
    for chord in sorted(rel.leaves, key=lambda c: (min(c.b - c.a, 1 - c.b + c.a), c)):
        for idx, (vs, es) in enumerate(faces):
            if chord.a in vs and chord.b in vs:
                break
        else:  # pragma: no cover - impossible for a valid relation
            raise RuntimeError(f"no face carries {chord}")
        i, j = sorted((vs.index(chord.a), vs.index(chord.b)))
        first = (vs[i:j + 1], es[i:j] + [chord])
        second = (vs[j:] + vs[:i + 1], es[j:] + es[:i] + [chord])
        faces[idx:idx + 1] = [first, second]
    return [_canonical_gap(vs, es) for vs, es in faces]


def _canonical_gap(vs, es) -> Gap:
    # rotate so the least vertex comes first: deterministic output
    i = vs.index(min(vs))
    return Gap(tuple(vs[i:] + vs[:i]), tuple(es[i:] + es[:i]))


def gap_census(rel: LaminarRelation) -> dict:
    """Counts of interior polygons by side number, plus boundary-touching gaps."""
    census = {"polygons": {}, "cusp": 0}
    for g in gaps(rel):
        if g.is_polygon:
            census["polygons"][g.n_sides] = census["polygons"].get(g.n_sides, 0) + 1
        else:
            census["cusp"] += 1
    return census
