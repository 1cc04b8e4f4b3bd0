"""Collapse an arc of the circle, then blow it back up.

Leaves that touch the collapsed arc come back split in two; as the arc
shrinks the round trip moves the lamination less and less.
"""

from fractions import Fraction as F

from laminar import LaminarRelation, MonotoneMap, hausdorff_distance, pullback_max, pullback_min, pushforward

squeeze = MonotoneMap.collapse(F(1, 4), F(1, 2), F(1, 3))
print("map:", squeeze.pairs(), "flats:", squeeze.flats())

rel = LaminarRelation([(F(1, 3), F(3, 4))])
low, high = pullback_min(squeeze, rel), pullback_max(squeeze, rel)
print("leaf through the image of the flat:", rel)
print("  minimal pullback:", low)
print("  maximal pullback:", high)
print("  pushed back down:", pushforward(squeeze, low), pushforward(squeeze, high))

R = LaminarRelation([(0, F(1, 2)), (F(1, 4), F(1, 2)), (F(1, 2), F(3, 4))])
for d in (8, 16, 32, 64):
    phi = MonotoneMap.collapse(F(-1, d), F(1, d), 0)
    moved = hausdorff_distance(pullback_min(phi, pushforward(phi, R)), R)
    print(f"flat of width 2/{d}: the round trip moves R by {moved}")
