"""A four-pronged circle map, its dual square, and an orbit that stays put.

Run with an output directory to also get SVG drawings:
    python demos/four_pronged_square.py /tmp/square
"""

import sys
from fractions import Fraction as F
from pathlib import Path

from laminar import LaminarRelation, render_svg
from laminar.dynamics import (
    LinkWitness, classify, dual_polygon, orbit_closure, pseudo_anosov, rotation, sticky_build, sticky_detect,
)

f = pseudo_anosov(4)
c = classify(f)
print("class:", c.kind.value)
for fp in c.fixed:
    print(f"  fixed point {fp.p}: {fp.kind.value}")
print("dual of the repelling square:", dual_polygon(f, c.repelling))

square = LaminarRelation([(0, F(1, 4)), (F(1, 4), F(1, 2)), (F(1, 2), F(3, 4)), (F(3, 4), 0)])
print("orbit of the square under f and a quarter turn:", orbit_closure({"a": f, "b": rotation(F(1, 4))}, square, 3))
try:
    orbit_closure({"a": f, "b": rotation(F(1, 8))}, square, 3)
except LinkWitness as e:
    print("an eighth turn breaks it:", e)

tree = sticky_build(2, 3)
print(f"thickened tree: {len(tree)} leaves, {len(sticky_detect(tree, 2))} sticky ends")

if len(sys.argv) > 1:
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    (out / "square.svg").write_text(render_svg(square, points=c.attracting, title="square and its dual"))
    (out / "sticky.svg").write_text(render_svg(tree, title="thickened tree"))
    print("drawings in", out)
