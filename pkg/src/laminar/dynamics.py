"""Circle homeomorphisms: fixed points, rotation numbers and classification,
orbits of laminations under group actions, and sticky laminations."""

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, floor
from typing import Mapping, NamedTuple, Optional, Sequence, Union

from .circle import Arc, Chord, ccw_dist, links, point
from .laminations import LaminarRelation
from .monotone import MonotoneMap, compose


class SegmentOfFixedPoints(ValueError):
    pass


class NotPseudoAnosov(ValueError):
    pass


class RepellingSetMismatch(ValueError):
    pass


class InterleavingViolation(ValueError):
    pass


class UnresolvedRotationNumber(ValueError):
    pass


class PLCircleHomeo(MonotoneMap):
    """Orientation-preserving PL homeomorphism of the circle."""

    __slots__ = ()

    def __init__(self, pairs):
        super().__init__(pairs)
        ys = self.ys
        if any(a >= b for a, b in zip(ys, ys[1:])) or ys[-1] >= ys[0] + 1:
            raise ValueError("a homeomorphism must be strictly increasing")

    @classmethod
    def from_map(cls, phi: MonotoneMap) -> "PLCircleHomeo":
        return cls(phi.pairs())

    def inverse(self) -> "PLCircleHomeo":
        return PLCircleHomeo([(y, x) for x, y in self.pairs()])

    def lift_inverse(self, t) -> Fraction:
        """Inverse of the stored lift, evaluated at ``t``."""
        t = Fraction(t)
        k = floor(t - self.ys[0])
        r = t - k
        knots = self._ext()
        ky = [y for _, y in knots]
        i = bisect_right(ky, r) - 1
        (x0, y0), (x1, y1) = knots[i], knots[i + 1]
        return k + x0 + (x1 - x0) * (r - y0) / (y1 - y0)

    def __mul__(self, other: "PLCircleHomeo") -> "PLCircleHomeo":
        """``f * g`` is ``f o g``."""
        return compose(self, other)

    def __pow__(self, n: int) -> "PLCircleHomeo":
        base = self if n >= 0 else self.inverse()
        out = PLCircleHomeo.identity()
        for _ in range(abs(n)):
            out = base * out
        return out

    def is_identity(self) -> bool:
        return self.xs == [0] and self.ys == [0]

    def slopes_at(self, p) -> tuple:
        """Slopes of the lift immediately to the left and right of ``p``."""
        p = Fraction(p) % 1
        knots = self._ext()
        n = len(self.xs)
        left = right = None
        for (x0, y0), (x1, y1) in zip(knots[n - 1:], knots[n:]):
            s = (y1 - y0) / (x1 - x0)
            if x0 <= p < x1:
                right = s
            if x0 < p <= x1:
                left = s
        return left, right


def rotation(r) -> PLCircleHomeo:
    return PLCircleHomeo([(0, point(r))])


def alternating_homeo(fixed: Sequence, first_repelling: bool = True, push=Fraction(1, 4)) -> PLCircleHomeo:
    """PL homeomorphism fixing exactly ``fixed``, alternately repelling and attracting.

    Each complementary interval gets one interior breakpoint at its midpoint,
    displaced by ``push`` times half its length in the flow direction.  With
    an odd number of points the alternation cannot close up; the last interval
    then repeats a direction and yields a semi-attracting point.
    """
    pts = sorted({point(p) for p in fixed})
    if not pts:
        raise ValueError("need at least one fixed point")
    pairs = []
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        length = ccw_dist(p, q) or Fraction(1)
        forward = (i % 2 == 0) == first_repelling
        mid = p + length / 2
        shift = push * length / 2
        pairs.append((p, p))
        pairs.append((point(mid), mid + (shift if forward else -shift)))
    return PLCircleHomeo([(x, y) for x, y in pairs])


def north_south() -> PLCircleHomeo:
    """Attracting fixed point at 0, repelling at 1/2."""
    return PLCircleHomeo([(0, 0), (Fraction(1, 4), Fraction(1, 8)), (Fraction(3, 4), Fraction(7, 8))])


def pseudo_anosov(n_fixed: int) -> PLCircleHomeo:
    """Even number of equally spaced fixed points, repelling at ``k/n_fixed`` for even ``k``."""
    if n_fixed < 4 or n_fixed % 2:
        raise ValueError("pseudo-Anosov-like maps need an even number >= 4 of fixed points")
    return alternating_homeo([Fraction(k, n_fixed) for k in range(n_fixed)])


# -- fixed points ----------------------------------------------------------------


class Kind(Enum):
    ATTRACTING = "attracting"
    REPELLING = "repelling"
    # points on both sides move anticlockwise through p (resp. clockwise)
    SEMI_ATTRACTING_CCW = "semi_attracting_ccw"
    SEMI_ATTRACTING_CW = "semi_attracting_cw"


class FixedPoint(NamedTuple):
    p: Fraction
    kind: Kind


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def fixed_points(f: PLCircleHomeo) -> tuple:
    """Fixed points in increasing order with their side dynamics."""
    if f.is_identity():
        raise SegmentOfFixedPoints("the identity fixes every point")
    n = len(f.xs)
    knots = f._ext()[n:2 * n + 1]
    roots = set()
    for (x0, y0), (x1, y1) in zip(knots, knots[1:]):
        d0, d1 = y0 - x0, y1 - x1
        lo, hi = min(d0, d1), max(d0, d1)
        for k in range(ceil(lo), floor(hi) + 1):
            if d0 == d1:
                raise SegmentOfFixedPoints(f"{f} fixes the arc {Arc(x0, x1)} pointwise")
            roots.add(point(x0 + (k - d0) * (x1 - x0) / (d1 - d0)))
    out = []
    for p in sorted(roots):
        left, right = f.slopes_at(p)
        r_side, l_side = _sign(right - 1), -_sign(left - 1)
        if r_side > 0 and l_side < 0:
            kind = Kind.REPELLING
        elif r_side < 0 and l_side > 0:
            kind = Kind.ATTRACTING
        elif r_side > 0:
            kind = Kind.SEMI_ATTRACTING_CCW
        else:
            kind = Kind.SEMI_ATTRACTING_CW
        out.append(FixedPoint(p, kind))
    return tuple(out)


# -- rotation numbers --------------------------------------------------------------


class IntervalEstimate(NamedTuple):
    """Closed bounds on the translation number of the lift."""

    lo: Fraction
    hi: Fraction


def _iterate(step, x, n):
    for _ in range(n):
        x = step(x)
    return x


def _translation_number(step, power_knots, max_period: int):
    """Translation number of a lift given by ``step``.

    ``power_knots(q)`` returns the breakpoints of the ``q``-th iterate on the
    circle.  Between them the displacement of the iterate is affine, so its
    range is read off exactly at the knots.  An integer ``p`` in the range of
    the ``q``-th displacement is a periodic orbit and gives ``p/q`` exactly.
    """
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    for q in range(1, max_period + 1):
        ds = [_iterate(step, x, q) - x for x in power_knots(q)]
        lo, hi = min(ds), max(ds)
        if ceil(lo) <= hi:
            return Fraction(ceil(lo), q)
        if lo == hi:
            # constant displacement: conjugate to a rigid translation
            return lo / q
    return IntervalEstimate(lo / max_period, hi / max_period)


def _power_knots(f: PLCircleHomeo):
    powers = [None, f]

    def knots(q):
        while len(powers) <= q:
            powers.append(f * powers[-1])
        return powers[q].xs

    return knots


def rotation_number(f: PLCircleHomeo, max_period: int) -> Union[Fraction, IntervalEstimate]:
    """Exact rotation number in ``[0, 1)`` if some orbit has period at most
    ``max_period``; otherwise bounds on the translation number of the stored lift."""
    t = _translation_number(f.lift, _power_knots(f), max_period)
    if isinstance(t, Fraction):
        return t % 1
    return t


def rotation_cocycle(g, h, k, max_period: int) -> Fraction:
    """Coboundary of the cochain ``s(a, b) = tau(A^-1 B)`` at ``(g, h, k)``.

    ``tau`` is the translation number and ``A, B`` the stored lifts, so on
    rotations ``s`` is additive and the coboundary vanishes.
    """

    def s(a, b):
        step = lambda t: a.lift_inverse(b.lift(t))
        t = _translation_number(step, _power_knots(a.inverse() * b), max_period)
        if not isinstance(t, Fraction):
            raise UnresolvedRotationNumber(f"translation number only bounded: {t}")
        return t

    return s(h, k) - s(g, k) + s(g, h)


# -- classification ------------------------------------------------------------------


class ClassKind(Enum):
    IDENTITY = "identity"
    FIXED_POINT_FREE = "fixed_point_free"
    MOBIUS_LIKE = "mobius_like"
    PSEUDO_ANOSOV_LIKE = "pseudo_anosov_like"
    PARABOLIC_LIKE = "parabolic_like"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class DynamicsClass:
    kind: ClassKind
    fixed: tuple = ()
    rotation: Optional[Union[Fraction, IntervalEstimate]] = None

    @property
    def repelling(self) -> list:
        return [fp.p for fp in self.fixed if fp.kind is Kind.REPELLING]

    @property
    def attracting(self) -> list:
        return [fp.p for fp in self.fixed if fp.kind is Kind.ATTRACTING]


def _strictly_alternating(fixed) -> bool:
    kinds = [fp.kind for fp in fixed]
    if any(k not in (Kind.ATTRACTING, Kind.REPELLING) for k in kinds):
        return False
    return all(kinds[i] != kinds[(i + 1) % len(kinds)] for i in range(len(kinds)))


def classify(f: PLCircleHomeo, max_period: int = 12) -> DynamicsClass:
    if f.is_identity():
        return DynamicsClass(ClassKind.IDENTITY)
    fixed = fixed_points(f)
    if not fixed:
        return DynamicsClass(ClassKind.FIXED_POINT_FREE, rotation=rotation_number(f, max_period))
    n = len(fixed)
    alternating = _strictly_alternating(fixed)
    if n == 2 and alternating:
        kind = ClassKind.MOBIUS_LIKE
    elif n >= 4 and n % 2 == 0 and alternating:
        kind = ClassKind.PSEUDO_ANOSOV_LIKE
    elif n == 1 and fixed[0].kind in (Kind.SEMI_ATTRACTING_CW, Kind.SEMI_ATTRACTING_CCW):
        kind = ClassKind.PARABOLIC_LIKE
    else:
        kind = ClassKind.UNCLASSIFIED
    return DynamicsClass(kind, fixed=fixed, rotation=Fraction(0))


def dual_polygon(f: PLCircleHomeo, vertices) -> list:
    """Attracting fixed points of a pseudo-Anosov-like ``f`` whose repelling set is ``vertices``."""
    c = classify(f)
    if c.kind is not ClassKind.PSEUDO_ANOSOV_LIKE:
        raise NotPseudoAnosov(f"{c.kind.value} map has no dual polygon")
    verts = sorted({point(p) for p in vertices})
    if verts != c.repelling:
        raise RepellingSetMismatch(f"{verts} is not the repelling set {c.repelling}")
    dual = c.attracting
    for i, p in enumerate(verts):
        gap = Arc(p, verts[(i + 1) % len(verts)])
        inside = [a for a in dual if gap.contains_open(a)]
        if len(inside) != 1:
            raise InterleavingViolation(f"{len(inside)} attracting points in {gap}")
    return dual


# -- orbits of laminations -------------------------------------------------------------


class LinkWitness(ValueError):
    """An image of the seed under ``word`` links an earlier leaf."""

    def __init__(self, word: str, l1: Chord, l2: Chord):
        super().__init__(f"word {word!r}: leaf {l1} links {l2}")
        self.word = word
        self.l1 = l1
        self.l2 = l2


def _alphabet(generators):
    if not isinstance(generators, Mapping):
        generators = {chr(ord("a") + i): g for i, g in enumerate(generators)}
    letters = []
    for name, g in generators.items():
        if name != name.lower() or name == name.upper():
            raise ValueError(f"generator names must be lowercase letters: {name!r}")
        letters.append((name, g))
        letters.append((name.upper(), g.inverse()))
    return letters


def _orbit_levels(generators, seed: LaminarRelation):
    """Yield the leaf set after words of length 0, 1, 2, ...

    Words are processed shortest first and lexicographically within a length,
    letters ordered ``a, A, b, B, ...``; a word ``"a b"`` means ``a o b``.
    """
    letters = _alphabet(generators)
    order = {name: i for i, (name, _) in enumerate(letters)}
    seed_leaves = tuple(seed.sorted_leaves())
    leaves = set(seed_leaves)
    seen = {seed_leaves}
    frontier = [((), seed_leaves)]
    yield frozenset(leaves)
    while True:
        nxt = []
        for name, g in letters:
            for word, images in frontier:
                if word and word[0].swapcase() == name:
                    continue
                new_word = (name,) + word
                new_images = tuple(Chord(g(l.a), g(l.b)) for l in images)
                for leaf in new_images:
                    if leaf in leaves:
                        continue
                    for old in sorted(leaves):
                        if links(leaf, old):
                            raise LinkWitness(" ".join(new_word), leaf, old)
                    leaves.add(leaf)
                if new_images not in seen:
                    seen.add(new_images)
                    nxt.append((new_word, new_images))
        nxt.sort(key=lambda item: [order[c] for c in item[0]])
        frontier = nxt
        yield frozenset(leaves)


def orbit_closure(generators, seed: LaminarRelation, depth: int) -> LaminarRelation:
    """Union of the images of ``seed`` under all words of length at most ``depth``.

    Raises :class:`LinkWitness` at the first word whose image links the leaves
    already collected.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    levels = _orbit_levels(generators, seed)
    for d, leaves in enumerate(levels):
        if d == depth:
            return LaminarRelation._trusted(leaves)


def orbit_saturation(generators, seed: LaminarRelation, max_depth: int) -> Optional[int]:
    """Least ``d <= max_depth`` with no new leaves at depth ``d + 1``, else ``None``."""
    prev = None
    for d, leaves in enumerate(_orbit_levels(generators, seed)):
        if prev is not None and leaves == prev:
            return d - 1
        if d > max_depth:
            return None
        prev = leaves


# -- sticky laminations ------------------------------------------------------------------


def dyadic_indices(count: int) -> list:
    """First ``count`` dyadic rationals of ``(-1, 1) - {0}`` in construction order.

    ``1/2, -1/2, 1/4, -1/4, 3/4, -3/4, 1/8, ...``; the index 0 stands for the
    edge towards the parent.
    """
    out = []
    m = 1
    while len(out) < count:
        for num in range(1, 2 ** m, 2):
            for sign in (1, -1):
                out.append(sign * Fraction(num, 2 ** m))
        m += 1
    return out[:count]


def _midpoints(params, lo, hi):
    bounds = [lo] + sorted(params) + [hi]
    return {t: ((bounds[i] + t) / 2, (t + bounds[i + 2]) / 2) for i, t in enumerate(bounds[1:-1])}


@dataclass(frozen=True)
class StickyTree:
    lamination: LaminarRelation
    vertex_depth: dict  # tree vertex point -> depth (root 0)


def sticky_tree(n_levels: int, arity_cap: int) -> StickyTree:
    """Truncated thickened tree: each edge becomes an ideal quadrilateral whose
    diagonal joins the two tree vertices."""
    if n_levels < 1 or arity_cap < 2:
        raise ValueError("need n_levels >= 1 and arity_cap >= 2")
    params = dyadic_indices(arity_cap)
    leaves = set()
    depth_of = {Fraction(0): 0}
    # vertex: (point, start of left arc, end of right arc) with arcs given by lifts
    layer = [(Fraction(0), Fraction(1, 2), Fraction(1, 2), Fraction(1))]  # (P, b, a, P+1)
    for depth in range(1, n_levels + 1):
        nxt = []
        for p, right_end, left_start, p_top in layer:
            neg = [t for t in params if t < 0]
            pos = [t for t in params if t > 0]
            windows = []
            r_len = right_end - p
            for t, (u, v) in _midpoints(neg, Fraction(-1), Fraction(0)).items():
                windows.append((p + (u + 1) * r_len, p + (v + 1) * r_len))
            l_len = p_top - left_start
            for t, (u, v) in _midpoints(pos, Fraction(0), Fraction(1)).items():
                windows.append((left_start + u * l_len, left_start + v * l_len))
            for s0, s1 in windows:
                w = s1 - s0
                a, c, b = s0 + w / 4, s0 + w / 2, s0 + 3 * w / 4
                for x, y in ((p, a), (a, c), (c, b), (b, p)):
                    leaves.add(Chord(x, y))
                depth_of[point(c)] = depth
                nxt.append((c, b, a, c))
        layer = nxt
    return StickyTree(LaminarRelation(leaves), depth_of)


def sticky_build(n_levels: int, arity_cap: int) -> LaminarRelation:
    return sticky_tree(n_levels, arity_cap).lamination


def sticky_detect(rel: LaminarRelation, min_chain: int) -> list:
    """Leaves approximated by at least ``min_chain`` leaves sharing one endpoint.

    For a leaf ``{p, q}`` and endpoint ``p``, the other leaves at ``p`` whose
    free ends lie on one side of ``q`` form a chain converging monotonically
    to the leaf; either side counts.
    """
    if min_chain < 2:
        raise ValueError("min_chain must be >= 2")
    at = {}
    for leaf in rel.leaves:
        for p in leaf.endpoints:
            at.setdefault(p, []).append(leaf)
    out = []
    for leaf in rel.sorted_leaves():
        for p in leaf.endpoints:
            q = leaf.other(p)
            free = [l.other(p) for l in at[p] if l != leaf]
            cw_side = sum(1 for r in free if Arc(p, q).contains_open(r))
            ccw_side = len(free) - cw_side
            if max(cw_side, ccw_side) >= min_chain:
                out.append((leaf, p))
    return out
