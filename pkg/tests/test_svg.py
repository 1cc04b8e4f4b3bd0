from fractions import Fraction as F

from laminar.dynamics import sticky_build
from laminar.laminations import LaminarRelation, gap_census
from laminar.svg import render_svg, svg_metadata

SQUARE = LaminarRelation([(0, F(1, 4)), (F(1, 4), F(1, 2)), (F(1, 2), F(3, 4)), (F(3, 4), 0)])


def test_empty_lamination_draws_only_the_circle():
    svg = render_svg(LaminarRelation())
    assert svg.count("<circle") == 1 and "<path" not in svg
    assert svg_metadata(svg)["leaves"] == 0


def test_square_draws_four_geodesic_arcs():
    svg = render_svg(SQUARE)
    assert svg.count("<path") == 4 and svg.count(" A ") == 4
    flat = render_svg(SQUARE, geodesic=False)
    assert flat.count(" L ") == 4 and svg_metadata(flat)["style"] == "straight"


def test_diameters_are_straight_even_in_geodesic_style():
    svg = render_svg(LaminarRelation([(0, F(1, 2))]))
    assert " L " in svg and " A " not in svg


def test_sticky_metadata_matches_the_builder():
    rel = sticky_build(3, 3)
    meta = svg_metadata(render_svg(rel))
    census = gap_census(rel)
    assert meta["leaves"] == len(rel)
    assert meta["gaps"]["polygons"] == {str(k): v for k, v in census["polygons"].items()}
    assert set(meta["gaps"]["polygons"]) == {"4"}


def test_rendering_is_byte_deterministic():
    rel = sticky_build(2, 3)
    assert render_svg(rel, points=[F(1, 3)], title="a < b") == render_svg(rel, points=[F(1, 3)], title="a < b")
    assert "a &lt; b" in render_svg(rel, title="a < b")
