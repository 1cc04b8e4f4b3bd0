"""Finite truncations of the universal circle.

A :class:`LeafPoset` is a finite tree of leaves ordered upwards towards a
unique top leaf.  Marker data on pairs of leaves induce monotone maps between
their circles; :func:`build_monotone_system` assembles them and checks the
cocycle condition, and the pinching laminations are read off the flats.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .circle import Chord, Orientation, cyclic_order, links, point
from .laminations import Gap, LaminarRelation, LinkedPair, hull_boundary, union
from .monotone import ClosedArc, MonotoneMap, Point, compose, pushforward

SATURATED = "saturated"
VOID = "void"


class InvalidPoset(ValueError):
    pass


class InvalidMarkers(ValueError):
    pass


class IncomparableLink(InvalidMarkers):
    def __init__(self, mu, nu, witness):
        super().__init__(f"markers from {mu!r} and {nu!r} link: {witness[0]} vs {witness[1]}")
        self.mu, self.nu, self.witness = mu, nu, witness


class OrderReversal(InvalidMarkers):
    def __init__(self, upper, lower, witness):
        super().__init__(f"markers from {lower!r} to {upper!r} reverse circular order: {witness}")
        self.upper, self.lower, self.witness = upper, lower, witness


class GapFlagMismatch(InvalidMarkers):
    pass


class NotComparable(ValueError):
    pass


class CocycleViolation(ValueError):
    def __init__(self, lam, mu, nu, p):
        super().__init__(f"composite {lam}->{mu}->{nu} differs from direct map at {p}")
        self.lam, self.mu, self.nu, self.point = lam, mu, nu, p


class InconsistentMarkers(ValueError):
    def __init__(self, witness):
        super().__init__(f"pinching laminations link: {witness[0]} vs {witness[1]}")
        self.witness = witness


class LeafPoset:
    """Finite poset branching only downwards.

    ``covers`` maps each non-top leaf to the unique leaf covering it.
    """

    def __init__(self, leaves: Iterable, covers: Mapping):
        self.leaves = tuple(leaves)
        if len(set(self.leaves)) != len(self.leaves):
            raise InvalidPoset("duplicate leaf names")
        self.parent = dict(covers)
        for lo, up in self.parent.items():
            if lo not in self.leaves or up not in self.leaves:
                raise InvalidPoset(f"unknown leaf in cover {lo!r} < {up!r}")
        tops = [l for l in self.leaves if l not in self.parent]
        if len(tops) != 1:
            raise InvalidPoset(f"need a unique maximal leaf, found {tops}")
        self.top = tops[0]
        for l in self.leaves:
            seen = {l}
            while l in self.parent:
                l = self.parent[l]
                if l in seen:
                    raise InvalidPoset("cycle in covering relation")
                seen.add(l)

    @classmethod
    def from_edges(cls, leaves, edges) -> "LeafPoset":
        """``edges`` are ``(lower, upper)`` covering pairs."""
        covers = {}
        for lo, up in edges:
            if lo in covers:
                raise InvalidPoset(f"{lo!r} has two covering successors")
            covers[lo] = up
        return cls(leaves, covers)

    def ancestors(self, leaf) -> list:
        """Leaves strictly above ``leaf``, nearest first."""
        out = []
        while leaf in self.parent:
            leaf = self.parent[leaf]
            out.append(leaf)
        return out

    def less(self, mu, lam) -> bool:
        return lam in self.ancestors(mu)

    def comparable(self, a, b) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    def below(self, lam) -> list:
        return [l for l in self.leaves if self.less(l, lam)]

    def comparable_pairs(self) -> list:
        """All ``(upper, lower)`` pairs."""
        return [(up, lo) for lo in self.leaves for up in self.ancestors(lo)]

    def covering_pairs(self) -> list:
        return [(up, lo) for lo, up in self.parent.items()]

    def chains(self) -> list:
        """Triples ``(lam, mu, nu)`` with ``lam > mu > nu``."""
        out = []
        for nu in self.leaves:
            up = self.ancestors(nu)
            for i, mu in enumerate(up):
                for lam in up[i + 1:]:
                    out.append((lam, mu, nu))
        return out


@dataclass
class PairMarkers:
    """Markers between ``upper > lower``: pairs ``(p_upper, p_lower)`` sorted by
    ``p_upper``; ``gaps[i]`` flags the arc from marker ``i`` to marker ``i + 1``."""

    markers: list
    gaps: list

    def __init__(self, markers, gaps=None):
        ms = sorted((point(a), point(b)) for a, b in markers)
        if not ms:
            raise InvalidMarkers("a marker list must be nonempty")
        self.markers = ms
        if gaps is None:
            gaps = [SATURATED] * len(ms)
        elif isinstance(gaps, Mapping):
            gaps = _gaps_from_arcs(ms, gaps)
        gaps = [str(g).lower() for g in gaps]
        if len(gaps) != len(ms):
            raise InvalidMarkers(f"{len(ms)} markers need {len(ms)} gap flags, got {len(gaps)}")
        if any(g not in (SATURATED, VOID) for g in gaps):
            raise InvalidMarkers(f"gap flags must be {SATURATED!r} or {VOID!r}")
        self.gaps = gaps

    @property
    def upper_points(self) -> list:
        return [a for a, _ in self.markers]


def _gaps_from_arcs(ms, arcs: Mapping) -> list:
    """Flags given as ``{"a:b": flag}`` for the arc from marker ``a`` to ``b``."""
    flags = [SATURATED] * len(ms)
    starts = [a for a, _ in ms]
    for key, flag in arcs.items():
        a, b = (point(s) for s in str(key).split(":"))
        if a not in starts:
            raise InvalidMarkers(f"gap {key!r} does not start at a marker")
        i = starts.index(a)
        if starts[(i + 1) % len(starts)] != b:
            raise InvalidMarkers(f"gap {key!r} does not join consecutive markers")
        flags[i] = flag
    return flags


MarkerFamily = Mapping  # (upper, lower) -> PairMarkers


def _gap_advances(pm: PairMarkers, upper, lower) -> list:
    ms, k = pm.markers, len(pm.markers)
    adv = []
    for i in range(k):
        d = (ms[(i + 1) % k][1] - ms[i][1]) % 1
        if pm.gaps[i] == VOID:
            if d != 0:
                raise GapFlagMismatch(
                    f"void gap after marker {ms[i][0]} on {upper!r} has distinct images on {lower!r}")
        elif d == 0:
            d = Fraction(1)
        adv.append(d)
    if sum(adv) != 1:
        witness = None
        for i, j, l in combinations(range(k), 3):
            if cyclic_order(ms[i][1], ms[j][1], ms[l][1]) is Orientation.NEGATIVE:
                witness = (ms[i], ms[j], ms[l])
                break
        raise OrderReversal(upper, lower, witness or "images wind more than once")
    return adv


def marker_map(pm: PairMarkers, upper="upper", lower="lower") -> MonotoneMap:
    """Monotone map sending markers to partners, affine across saturated gaps
    and constant across void gaps."""
    adv = _gap_advances(pm, upper, lower)
    y = pm.markers[0][1]
    pairs = []
    for (x, _), a in zip(pm.markers, adv):
        pairs.append((x, y))
        y += a
    return MonotoneMap(pairs)


def _pair_key(key):
    if isinstance(key, str):
        up, lo = key.split(">")
        return up.strip(), lo.strip()
    return tuple(key)


@dataclass
class MonotoneSystem:
    poset: LeafPoset
    maps: dict  # (upper, lower) -> MonotoneMap
    markers: dict = field(default_factory=dict)
    covering: dict = field(default_factory=dict)

    def marker_points(self, upper, lower) -> list:
        """Marker endpoints from ``lower`` on the circle of ``upper``; for pairs
        without markers of their own, the fiber ends of the markers below."""
        return _marker_points(self.poset, self.markers, self.covering, upper, lower)

    def map(self, upper, lower) -> MonotoneMap:
        if upper == lower:
            return MonotoneMap.identity()
        if (upper, lower) not in self.maps:
            raise NotComparable(f"{upper!r} is not above {lower!r}")
        return self.maps[(upper, lower)]

    def phi(self, leaf) -> MonotoneMap:
        """Map from the top circle to the circle of ``leaf``."""
        return self.map(self.poset.top, leaf)


def _marker_points(poset, markers, covering_maps, upper, lower) -> list:
    """Points of the circle of ``upper`` where markers from ``lower`` land."""
    if (upper, lower) in markers:
        return markers[(upper, lower)].upper_points
    path = [lower] + poset.ancestors(lower)
    child = path[path.index(upper) - 1]
    below = _marker_points(poset, markers, covering_maps, child, lower)
    pi = covering_maps[(upper, child)]
    out = set()
    for q in below:
        f = pi.preimage(q)
        out.update([f.p] if isinstance(f, Point) else [f.clockwise_end, f.anticlockwise_end])
    return sorted(out)


def validate_markers(poset: LeafPoset, markers: MarkerFamily) -> dict:
    """Check marker data; returns the covering maps on success."""
    markers = {_pair_key(k): v for k, v in markers.items()}
    for up, lo in markers:
        if not poset.less(lo, up):
            raise InvalidMarkers(f"markers given for non-comparable pair {up!r} > {lo!r}")
    covering = {}
    for up, lo in poset.covering_pairs():
        if (up, lo) not in markers:
            raise InvalidMarkers(f"covering pair {up!r} > {lo!r} has no markers")
    for (up, lo), pm in sorted(markers.items()):
        m = marker_map(pm, up, lo)
        if (up, lo) in poset.covering_pairs():
            covering[(up, lo)] = m
    for lam in poset.leaves:
        below = sorted(poset.below(lam))
        for mu, nu in combinations(below, 2):
            if poset.comparable(mu, nu):
                continue
            a = _marker_points(poset, markers, covering, lam, mu)
            b = _marker_points(poset, markers, covering, lam, nu)
            w = _linked_witness(a, b)
            if w is not None:
                raise IncomparableLink(mu, nu, w)
    return covering


def _linked_witness(a, b):
    for p, q in combinations(sorted(a), 2):
        for r, s in combinations(sorted(b), 2):
            if len({p, q, r, s}) == 4 and links(Chord(p, q), Chord(r, s)):
                return Chord(p, q), Chord(r, s)
    return None


def build_monotone_system(poset: LeafPoset, markers: MarkerFamily, check: bool = True) -> MonotoneSystem:
    """Maps for every comparable pair.

    Covering pairs come from their markers, other pairs by composition.  A
    non-covering pair with its own markers gets its direct map, which must
    equal the composite when ``check`` is set.
    """
    markers = {_pair_key(k): v for k, v in markers.items()}
    covering = validate_markers(poset, markers)
    maps = dict(covering)
    for lo in poset.leaves:
        up_chain = poset.ancestors(lo)
        current = MonotoneMap.identity()
        child = lo
        for up in up_chain:
            current = compose(current, covering[(up, child)])
            child = up
            if (up, lo) in covering:
                continue
            if (up, lo) in markers:
                direct = marker_map(markers[(up, lo)], up, lo)
                if check and direct != current:
                    mid = poset.ancestors(lo)[0]
                    raise CocycleViolation(up, mid, lo, _first_difference(direct, current))
                maps[(up, lo)] = direct
            else:
                maps[(up, lo)] = current
    sys = MonotoneSystem(poset, maps, markers, covering)
    if check:
        verify_cocycle(sys)
    return sys


def _first_difference(f, g, grid: int = 24):
    pts = sorted(set(f.xs) | set(g.xs) | {Fraction(i, grid) for i in range(grid)})
    for p in pts:
        if f(p) != g(p):
            return p
    return None


def verify_cocycle(sys: MonotoneSystem, grid: int = 24) -> None:
    """Composite maps equal direct maps at every breakpoint and grid point."""
    for lam, mu, nu in sys.poset.chains():
        direct = sys.map(lam, nu)
        composite = compose(sys.map(mu, nu), sys.map(lam, mu))
        p = _first_difference(direct, composite, grid)
        if p is not None:
            raise CocycleViolation(lam, mu, nu, p)


@dataclass(frozen=True)
class UniversalCircle:
    """Depth-one surrogate of the inverse limit: the top circle with its maps."""

    top: str
    phi: dict = field(hash=False)


def universal_circle(sys: MonotoneSystem) -> UniversalCircle:
    return UniversalCircle(sys.poset.top, {l: sys.phi(l) for l in sys.poset.leaves})


def pinching_lamination(sys: MonotoneSystem, lam, mu, mode: str = "closure") -> LaminarRelation:
    """Boundary of the hull of the marker closure on the circle of ``lam``.

    In the default ``"closure"`` mode saturated gaps stand for arcs where
    markers are dense, so the hull boundary is one leaf across each collapsed
    (void) interval, i.e. across each flat of the map.  ``"finite"`` mode takes
    the hull boundary of the finitely many listed marker endpoints.
    """
    if not sys.poset.less(mu, lam):
        raise NotComparable(f"{lam!r} is not above {mu!r}")
    if mode == "finite":
        return hull_boundary(sys.marker_points(lam, mu))
    if mode != "closure":
        raise ValueError(f"unknown pinching mode {mode!r}")
    return LaminarRelation(Chord(f.start, f.end) for f in sys.map(lam, mu).flats())


def pinching_total(sys: MonotoneSystem, lam, mode: str = "closure") -> LaminarRelation:
    out = LaminarRelation()
    for mu in sorted(sys.poset.below(lam)):
        try:
            out = union(out, pinching_lamination(sys, lam, mu, mode))
        except LinkedPair as e:
            raise InconsistentMarkers((e.l1, e.l2)) from None
    return out


def lamination_stages(sys: MonotoneSystem, chain) -> list:
    """Pullbacks to the top circle of the pinching laminations along ``chain``."""
    from .monotone import pullback_min

    return [pullback_min(sys.phi(l), pinching_total(sys, l)) for l in chain]


@dataclass(frozen=True)
class ConsistencyReport:
    ok: bool
    missing: tuple = ()
    extra: tuple = ()


def pushforward_consistency(sys: MonotoneSystem, lam, mu) -> ConsistencyReport:
    if not sys.poset.less(mu, lam):
        raise NotComparable(f"{lam!r} is not above {mu!r}")
    image = pushforward(sys.map(lam, mu), pinching_total(sys, lam))
    expected = pinching_total(sys, mu)
    missing = tuple(sorted(expected.leaves - image.leaves))
    extra = tuple(sorted(image.leaves - expected.leaves))
    return ConsistencyReport(not missing and not extra, missing, extra)


PRESERVED = "preserved"
COLLAPSED_TO_LEAF = "collapsed_to_leaf"
COLLAPSED_TO_POINT = "collapsed_to_point"


@dataclass(frozen=True)
class PolygonImage:
    kind: str
    leaf: Optional[Chord] = None
    point: Optional[Fraction] = None
    degenerate: bool = False


def classify_polygon_image(phi: MonotoneMap, gap) -> PolygonImage:
    """Preserved, collapsed to a leaf or collapsed to a point.

    Partial collapses (more than two but fewer than all vertex images) are
    reported as preserved with ``degenerate`` set.
    """
    verts = gap.vertices if isinstance(gap, Gap) else tuple(point(v) for v in gap)
    images = sorted({phi(v) for v in verts})
    if len(images) == 1:
        return PolygonImage(COLLAPSED_TO_POINT, point=images[0])
    if len(images) == 2:
        return PolygonImage(COLLAPSED_TO_LEAF, leaf=Chord(*images))
    return PolygonImage(PRESERVED, degenerate=len(images) < len(verts))
