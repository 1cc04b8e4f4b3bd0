from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from laminar.circle import Chord
from laminar.generators import random_lamination
from laminar.laminations import (
    EmptyRelation, LaminarRelation, LinkedPair, gap_census, gaps, hausdorff_distance, hull_boundary,
    is_sublamination, union, validate,
)
from laminar.oracles import face_sizes, hausdorff_by_pairings, hull_edges

SQUARE = LaminarRelation([(0, F(1, 4)), (F(1, 4), F(1, 2)), (F(1, 2), F(3, 4)), (F(3, 4), 0)])
seeds = st.integers(0, 10**6)


def test_validate_examples():
    assert len(validate([])) == 0
    assert len(validate([(0, F(1, 2)), (F(1, 8), F(3, 8))])) == 2
    with pytest.raises(LinkedPair) as e:
        validate([(0, F(1, 2)), (F(1, 4), F(3, 4))])
    assert (e.value.l1, e.value.l2) == (Chord(0, F(1, 2)), Chord(F(1, 4), F(3, 4)))


def test_shared_endpoints_are_allowed():
    assert len(validate([(0, F(1, 3)), (0, F(2, 3)), (F(1, 3), F(2, 3))])) == 3


def test_hull_boundary_examples():
    assert hull_boundary([0]) == LaminarRelation()
    assert hull_boundary([0, F(1, 2)]) == LaminarRelation([(0, F(1, 2))])
    assert hull_boundary([0, F(1, 4), F(1, 2), F(3, 4)]) == SQUARE


@pytest.mark.parametrize("pts", [
    [0, F(1, 4), F(1, 2), F(3, 4)],
    [F(1, 7), F(2, 7), F(6, 7)],
    [F(k, 8) for k in range(8)],
    [F(1, 12), F(5, 12), F(2, 3), F(11, 12), F(1, 5)],
])
def test_hull_boundary_matches_planar_hull(pts):
    assert {(l.a, l.b) for l in hull_boundary(pts)} == {tuple(sorted(e)) for e in hull_edges(pts)}


def test_gap_examples():
    assert len(gaps(LaminarRelation())) == 1
    assert len(gaps(LaminarRelation([(0, F(1, 2))]))) == 2
    g = gaps(SQUARE)
    assert len(g) == 5
    assert gap_census(SQUARE) == {"polygons": {4: 1}, "cusp": 4}
    (centre,) = [x for x in g if x.is_polygon]
    assert centre.vertices == (0, F(1, 4), F(1, 2), F(3, 4))
    assert set(centre.sides) == SQUARE.leaves


def test_gap_boundaries_alternate_properly():
    rel = LaminarRelation([(0, F(1, 2)), (0, F(1, 4)), (F(1, 2), F(3, 4))])
    for g in gaps(rel):
        assert len(g.vertices) == len(g.edges)
        assert all(s in rel.leaves for s in g.sides)


def test_sublamination_examples():
    assert is_sublamination(LaminarRelation(), SQUARE)
    assert is_sublamination(SQUARE, SQUARE)
    assert not is_sublamination(LaminarRelation([(0, F(1, 2))]), LaminarRelation([(0, F(1, 3))]))


def test_union_examples():
    assert union(SQUARE, LaminarRelation()) == SQUARE
    nested = union(LaminarRelation([(0, F(1, 2))]), LaminarRelation([(F(1, 8), F(3, 8))]))
    assert len(nested) == 2
    with pytest.raises(LinkedPair):
        union(LaminarRelation([(0, F(1, 2))]), LaminarRelation([(F(1, 4), F(3, 4))]))


def test_hausdorff_examples():
    assert hausdorff_distance(SQUARE, SQUARE) == 0
    a = LaminarRelation([(0, F(1, 2))])
    b = LaminarRelation([(0, F(1, 2) + F(1, 100))])
    assert hausdorff_distance(a, b) == F(1, 100)
    with pytest.raises(EmptyRelation):
        hausdorff_distance(a, LaminarRelation())


def test_hausdorff_three_leaf_example_matches_pairing_search():
    a = LaminarRelation([(0, F(1, 3)), (F(1, 3), F(2, 3)), (0, F(2, 3))])
    b = LaminarRelation([(F(1, 24), F(3, 8)), (F(3, 8), F(5, 8)), (F(1, 24), F(5, 8))])
    expected = hausdorff_by_pairings([(l.a, l.b) for l in a], [(l.a, l.b) for l in b])
    assert expected == F(1, 24)
    assert hausdorff_distance(a, b) == expected


@given(seeds)
def test_face_count_law_and_census_against_embedding_trace(seed):
    rel = random_lamination(seed, max_leaves=20)
    g = gaps(rel)
    assert len(g) == len(rel) + 1
    traced = face_sizes([(l.a, l.b) for l in rel])
    assert len(traced) == len(g)
    assert sorted((x.n_sides, len(x.free_arcs)) for x in g) == sorted(traced)


@given(seeds, seeds)
def test_union_commutes_when_defined(s1, s2):
    a, b = random_lamination(s1, 6), random_lamination(s2, 6)
    try:
        ab = union(a, b)
    except LinkedPair:
        with pytest.raises(LinkedPair):
            union(b, a)
        return
    assert ab == union(b, a) == validate(ab.leaves)


@given(st.lists(st.integers(0, 47), min_size=0, max_size=10, unique=True))
def test_hull_boundary_is_valid(ks):
    rel = hull_boundary([F(k, 48) for k in ks])
    assert validate(rel.leaves) == rel


@given(seeds, seeds, seeds)
def test_hausdorff_is_a_metric_on_leaf_sets(s1, s2, s3):
    a, b, c = (random_lamination(s, 5, 24) for s in (s1, s2, s3))
    if not (len(a) and len(b) and len(c)):
        return
    d = hausdorff_distance
    assert d(a, b) == d(b, a)
    assert d(a, c) <= d(a, b) + d(b, c)
    assert (d(a, b) == 0) == (a == b)
    assert d(a, b) == hausdorff_by_pairings([(l.a, l.b) for l in a], [(l.a, l.b) for l in b])
