"""Exact laminations of the circle, monotone maps, circle dynamics,
universal-circle truncations and one-sided branching leaf spaces."""

from .circle import Arc, Chord, Orientation, Relation, chords_relate, cyclic_order, links, point
from .laminations import (
    EmptyRelation, Gap, LaminarRelation, LinkedPair, gap_census, gaps, hausdorff_distance,
    hull_boundary, is_sublamination, union, validate,
)
from .monotone import (
    ClosedArc, MonotoneMap, Point, apply, compose, preimage, pullback, pullback_max,
    pullback_min, pushforward,
)
from .dynamics import (
    ClassKind, DynamicsClass, FixedPoint, IntervalEstimate, Kind, LinkWitness, PLCircleHomeo,
    alternating_homeo, classify, dual_polygon, fixed_points, north_south, orbit_closure,
    orbit_saturation, pseudo_anosov, rotation, rotation_cocycle, rotation_number, sticky_build,
    sticky_detect, sticky_tree,
)
from .universal import (
    CocycleViolation, GapFlagMismatch, IncomparableLink, InconsistentMarkers, InvalidMarkers,
    LeafPoset, MonotoneSystem, NotComparable, OrderReversal, PairMarkers, PolygonImage,
    build_monotone_system, classify_polygon_image, pinching_lamination, pinching_total,
    pushforward_consistency, universal_circle, validate_markers,
)
from .leafspace import (
    BranchingChart, Compressible, MapAction, NadicLeafPoint, NoWitnessUpTo,
    compressibility_search,
)
from .svg import render_svg

__version__ = "0.1.0"
