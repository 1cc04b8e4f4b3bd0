from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from laminar.leafspace import (
    BranchingChart, Compressible, MapAction, NadicLeafPoint, NoWitnessUpTo, compressibility_search,
    parse_word, unit_interval, word_length,
)
from laminar.oracles import first_compressing_word

BS2 = BranchingChart(2)
DEPTH4 = BS2.points(4)


def P(h, w=""):
    return NadicLeafPoint(F(h), w)


def test_word_length_rule():
    assert [word_length(F(h)) for h in (1, 0, F(-1, 2), -1, F(-3, 2), -2)] == [0, 0, 1, 1, 2, 2]
    with pytest.raises(ValueError):
        P(-2, "0")
    assert NadicLeafPoint.from_json(P(F(-3, 2), "01").to_json()) == P(F(-3, 2), "01")


def test_order_examples():
    assert BS2.leq(P(-1, "0"), P(0))
    assert BS2.leq(P(-2, "01"), P(-1, "0"))
    assert not BS2.leq(P(-2, "01"), P(-1, "1")) and not BS2.leq(P(-1, "1"), P(-2, "01"))
    assert BS2.inf(P(-2, "01"), P(-1, "1")) is None
    assert BS2.divergence(P(-2, "01"), P(-1, "1")) == 0


def test_sup_examples():
    assert BS2.sup([P(-2, "01")]) == P(-2, "01")
    assert BS2.sup([P(-2, "00"), P(-2, "01")]) == P(-1, "0")
    assert BS2.sup([P(-2, "00"), P(-2, "10")]) == P(0)
    assert BS2.sup([P(F(-5, 2), "010"), P(F(-1, 3), "0")]) == P(F(-1, 3), "0")


def _brute_sup(points):
    uppers = [u for u in DEPTH4 if all(BS2.leq(p, u) for p in points)]
    least = [u for u in uppers if all(BS2.leq(u, v) for v in uppers)]
    return least[0] if least else None


def test_sup_matches_brute_force_on_integer_heights():
    for p, q in product(DEPTH4, repeat=2):
        assert BS2.sup([p, q]) == _brute_sup([p, q])


def test_action_examples():
    assert BS2.act_t(P(-1, "0")) == P(0)
    assert BS2.act_x(P(-2, "10")) == P(-2, "01")
    assert BS2.act_x(P(0)) == P(0)
    assert BS2.act_t_inv(P(0), 1) == P(-1, "1")
    assert BS2.act_x_inv(BS2.act_x(P(-3, "111"))) == P(-3, "111")


def test_word_parsing():
    assert parse_word("t x t⁻¹") == parse_word("txT") == parse_word("t x t^-1") == ["t", "x", "T"]


def test_group_relation_on_depth_four():
    assert len(DEPTH4) == 31
    for p in DEPTH4:
        assert BS2.act_word("t x t⁻¹", p) == BS2.act_word("x x", p)


@pytest.mark.parametrize("n", [3, 4])
def test_group_relation_for_other_arities(n):
    chart = BranchingChart(n)
    for p in chart.points(3):
        assert chart.act_word("t x T", p) == chart.act_word("x" * n, p)


def test_slither_examples():
    assert BS2.slither(P(0)) == 0
    for p in DEPTH4:
        assert BS2.slither(BS2.act_t(p)) == BS2.slither(p) + 1
        assert BS2.slither(BS2.act_x(p)) == BS2.slither(p)


def _chains(points, length):
    def extend(chain):
        if len(chain) == length:
            yield chain
            return
        for q in points:
            if BS2.lt(chain[-1], q):
                yield from extend(chain + [q])
    for p in points:
        yield from extend([p])


def test_slither_increases_along_chains():
    for chain in _chains(DEPTH4, 3):
        hs = [BS2.slither(p) for p in chain]
        assert hs == sorted(hs) and len(set(hs)) == 3


def test_zmap_examples():
    assert BS2.zmap(P(-1, "0")) == P(0)
    for p, q in product(DEPTH4, repeat=2):
        if BS2.lt(p, q):
            assert BS2.lt(BS2.zmap(p), BS2.zmap(q))
    for p in DEPTH4:
        assert BS2.lt(p, BS2.zmap(p))
        z = p
        for k in range(1, 6):
            z = BS2.zmap(z)
            assert BS2.slither(z) == BS2.slither(p) + k


def test_zmap_commutes_with_the_action():
    for p in DEPTH4:
        assert BS2.zmap(BS2.act_t(p)) == BS2.act_t(BS2.zmap(p))
        assert BS2.zmap(BS2.act_x(p)) == BS2.act_x(BS2.zmap(p))


def test_zmap_agrees_with_the_sup_formula():
    for p in BS2.points(3):
        assert BS2.zmap_by_sup(p) == BS2.zmap(p)


def test_compressibility_examples():
    assert compressibility_search(MapAction.from_chart(BS2), unit_interval(), 6) == NoWitnessUpTo(6)
    half = MapAction.real_line({"g": lambda x: x / 2})
    assert compressibility_search(half, (F(-1), F(1)), 3) == Compressible("g")
    ident = MapAction.real_line({"e": lambda x: x})
    assert compressibility_search(ident, (F(0), F(1)), 5) == NoWitnessUpTo(5)


def test_compressibility_matches_exhaustive_word_search():
    maps = {"x": BS2.act_x, "X": BS2.act_x_inv, "t": BS2.act_t, "T": BS2.act_t_inv}
    found = first_compressing_word(list(maps), lambda a, p: maps[a](p), BS2.leq, unit_interval(), 6)
    assert found is None
    real = {"a": lambda x: x + 1, "A": lambda x: x - 1, "d": lambda x: 2 * x, "D": lambda x: x / 2}
    action = MapAction.real_line(real, {"a": "A", "A": "a", "d": "D", "D": "d"})
    for lo, hi in [(F(0), F(1)), (F(-1), F(3)), (F(1), F(5)), (F(-3), F(-1))]:
        oracle = first_compressing_word(list(real), lambda a, x: real[a](x), lambda a, b: a <= b, (lo, hi), 4)
        got = compressibility_search(action, (lo, hi), 4)
        assert got == (Compressible(oracle) if oracle else NoWitnessUpTo(4))


heights = st.fractions(min_value=-4, max_value=1, max_denominator=4)


@st.composite
def chart_points(draw):
    h = draw(heights)
    w = draw(st.text("01", min_size=word_length(h), max_size=word_length(h)))
    return P(h, w)


@given(st.lists(chart_points(), min_size=1, max_size=5))
def test_sup_is_the_least_upper_bound(points):
    s = BS2.sup(points)
    assert all(BS2.leq(p, s) for p in points)
    # any upper bound at a chart height is above s
    for u in BS2.points(4) + [P(1)]:
        if all(BS2.leq(p, u) for p in points):
            assert BS2.leq(s, u)


@given(chart_points(), chart_points())
def test_incomparable_points_have_no_common_lower_bound(p, q):
    if BS2.comparable(p, q):
        assert BS2.inf(p, q) in (p, q)
        return
    assert BS2.inf(p, q) is None
    k = BS2.divergence(p, q)
    assert p.w[k] != q.w[k]
    low = min(p.h, q.h) - 1
    for w in ("0", "1"):
        below = P(low, (p.w + w * 8)[: word_length(low)])
        assert not (BS2.leq(below, p) and BS2.leq(below, q))


@given(chart_points(), st.text("xXtT", max_size=6))
def test_zmap_is_equivariant_for_words(p, word):
    if not word:
        return
    assert BS2.zmap(BS2.act_word(word, p)) == BS2.act_word(word, BS2.zmap(p))
