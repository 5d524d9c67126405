"""
Walking the catalog of critical densities
=========================================

Every minor-closed class has a critical density, and below 2 the possible
values are known exactly.  This script lists the values just above 1, asks
about a few fractions, and follows the gaps upward toward 3/2.
"""

from fractions import Fraction as F

from minordensity import enumerate_B, gap, membership, next_above, witness
from minordensity.graph6 import emit_graph6

# %%
# The first values above 1
# ------------------------
#
# ``enumerate_B`` needs a cap on ``n`` here because the values pile up
# just below 3/2.

for entry in enumerate_B(1, F(3, 2), max_n=12):
    print(f"{str(entry.beta):>6}  {entry.label()}")

# %%
# Membership questions
# --------------------
#
# 14/11 falls strictly between 5/4 and 9/7, so no class has it.  20/13
# is reached only by the 13-vertex star of four diamonds.

for q in (F(14, 11), F(20, 13), F(4, 3), F(25, 11)):
    res = membership(q)
    print(q, res.status, res.entry.parametrizations if res.entry else res.known_hit)

# %%
# Gaps shrink toward the accumulation point
# -----------------------------------------

x = F(1)
for _ in range(8):
    nxt = next_above(x)
    print(f"{str(x):>6} -> {str(nxt.beta):>6}  gap {gap(x)}")
    x = nxt.beta

# %%
# Each value comes with a witness graph of exactly that density.

w = witness(membership(F(20, 13)).entry)
print(w.n, "vertices,", w.num_edges, "edges:", emit_graph6(w))
