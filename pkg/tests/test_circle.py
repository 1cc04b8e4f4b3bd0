from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from laminar.circle import (
    WHOLE_CIRCLE, Arc, Chord, Orientation, Relation, chords_relate, cyclic_order, in_open_arc, point,
)
from laminar.dynamics import PLCircleHomeo
from laminar.oracles import links_on_grid

grid12 = [F(k, 12) for k in range(12)]
rationals = st.fractions(min_value=0, max_value=1, max_denominator=64).map(lambda x: x % 1)


def test_point_reduces_mod_one():
    assert point(F(5, 4)) == F(1, 4)
    assert point(-F(1, 3)) == F(2, 3)
    assert point("3/2") == F(1, 2)


def test_cyclic_order_examples():
    assert cyclic_order(F(0), F(1, 3), F(2, 3)) is Orientation.POSITIVE
    assert cyclic_order(F(0), F(2, 3), F(1, 3)) is Orientation.NEGATIVE
    assert cyclic_order(F(0), F(0), F(1, 2)) is Orientation.DEGENERATE


def test_chords_relate_examples():
    assert chords_relate(Chord(0, F(1, 2)), Chord(F(1, 4), F(3, 4))) is Relation.LINKED
    assert chords_relate(Chord(0, F(1, 4)), Chord(F(1, 2), F(3, 4))) is Relation.DISJOINT
    assert chords_relate(Chord(0, F(1, 2)), Chord(F(1, 2), F(3, 4))) is Relation.SHARED_ENDPOINT
    assert chords_relate(Chord(F(1, 2), 0), Chord(0, F(1, 2))) is Relation.EQUAL


def test_chord_is_stored_lesser_first_and_rejects_degenerate():
    assert Chord(F(3, 4), F(1, 4)) == Chord(F(1, 4), F(3, 4))
    assert Chord(F(3, 4), F(1, 4)).a == F(1, 4)
    with pytest.raises(ValueError):
        Chord(F(1, 3), F(4, 3))


def test_arcs_open_and_closed_membership():
    a = Arc(F(3, 4), F(1, 4))
    assert a.length == F(1, 2)
    assert a.contains(F(3, 4)) and not a.contains_open(F(3, 4))
    assert in_open_arc(F(0), a) and not in_open_arc(F(1, 2), a)
    assert Arc(F(1, 3), F(1, 3)).length == 0
    assert WHOLE_CIRCLE.length == 1 and WHOLE_CIRCLE.contains_open(F(1, 3))


def test_linking_matches_grid_walk_on_all_twelve_point_quadruples():
    for quad in combinations(grid12, 4):
        for c1, c2 in (((quad[0], quad[1]), (quad[2], quad[3])),
                       ((quad[0], quad[2]), (quad[1], quad[3])),
                       ((quad[0], quad[3]), (quad[1], quad[2]))):
            main = chords_relate(Chord(*c1), Chord(*c2)) is Relation.LINKED
            assert main == links_on_grid(c1, c2), (c1, c2)


@given(rationals, rationals, rationals, rationals)
def test_chords_relate_is_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    assert chords_relate(Chord(a, b), Chord(c, d)) == chords_relate(Chord(c, d), Chord(a, b))


@given(rationals, rationals, rationals)
def test_cyclic_order_rotates_and_flips(a, b, c):
    o = cyclic_order(a, b, c)
    assert cyclic_order(b, c, a) == o
    if o is not Orientation.DEGENERATE:
        assert cyclic_order(b, a, c) is Orientation(-o.value)


@given(st.lists(rationals, min_size=4, max_size=4, unique=True),
       st.lists(st.integers(1, 40), min_size=3, max_size=3, unique=True),
       st.lists(st.integers(1, 40), min_size=3, max_size=3, unique=True))
def test_linking_survives_increasing_relabelling(pts, xs, ys):
    xs = [F(x, 41) for x in sorted(xs)]
    ys = [F(y, 41) for y in sorted(ys)]
    h = PLCircleHomeo(list(zip(xs, ys)))
    l1, l2 = Chord(pts[0], pts[1]), Chord(pts[2], pts[3])
    m1, m2 = Chord(h(pts[0]), h(pts[1])), Chord(h(pts[2]), h(pts[3]))
    assert chords_relate(l1, l2) == chords_relate(m1, m2)
