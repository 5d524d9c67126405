"""
Checking minor balance
======================

A graph is minor-balanced when no minor beats its density.  Subdividing an
edge of K4 breaks this; stars of diamonds and the 25/11 graph keep it.
"""

from minordensity import Mode, balance_check, build_star_of_plants, build_witness_25_11, densest_minor
from minordensity.graph_core import Graph
from minordensity.minor_engine import describe_counterexample

# %%
# A failure with a replayable counterexample
# ------------------------------------------

subdivided = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
report = balance_check(subdivided, "minor_balanced")
print(report.verdict, describe_counterexample(report.counterexample))
print("densest minor:", densest_minor(subdivided))

# %%
# Strict balance of the four-diamond star
# ---------------------------------------

star = build_star_of_plants(3, 4, 0)
report = balance_check(star, "strictly_minor_balanced")
print(star.n, star.num_edges, report.verdict, report.explored, "minors explored")

# %%
# The 25/11 graph under every mode
# --------------------------------

g = build_witness_25_11()
for mode in (Mode(False, None), Mode(True, None), Mode(False, 1), Mode(True, 1)):
    r = balance_check(g, mode)
    print(f"{mode.name:<28} {r.verdict}  value {r.value}")
