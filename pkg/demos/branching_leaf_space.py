"""The binary branching leaf space with its group action.

x moves sideways between branches, t moves up one level; together they
satisfy t x t^-1 = x x, and the unit interval cannot be squeezed into itself.
"""

from laminar.leafspace import BranchingChart, MapAction, compressibility_search, unit_interval

chart = BranchingChart(2)
p = chart.point(-3, "101")
print("point:", p, " x:", chart.act_x(p), " t:", chart.act_t(p), " Z:", chart.zmap(p))
print("t x t^-1:", chart.act_word("t x t⁻¹", p), " x x:", chart.act_word("x x", p))
print("sup of two branches:", chart.sup([chart.point(-2, "00"), chart.point(-2, "01")]))
print("unit interval:", compressibility_search(MapAction.from_chart(chart), unit_interval(), 6))
print("halving the line:", compressibility_search(MapAction.real_line({"g": lambda x: x / 2}), (-1, 1), 3))
