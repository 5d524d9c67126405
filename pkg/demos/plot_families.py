"""
Dense families and their closed forms
=====================================

The graphs G_k(m) sweep densities between k - 1/2 and about k + 1/2 in
steps of 1/(k^2+2k+2); the graphs F_k(m) bridge to the next k.  Each
builder is checked against its closed form.
"""

from minordensity import FamilySpec, closed_form
from minordensity.families import a_k, b_k, gkm_density, gkm_n

# %%
# Densities of G_2(m)
# -------------------

n = gkm_n(2)
for m in range(n + 1):
    if 2 * m <= n or (m - n // 2) % 3 == 0:
        spec = FamilySpec("Gkm", (2, m))
        g = spec.build()
        cf = closed_form(spec)
        assert (cf.v, cf.e) == (g.n, g.num_edges)
        print(f"m={m:<2} v={g.n} e={g.num_edges:<3} rho={cf.rho}")

# %%
# Interval ends for several k
# ---------------------------

for k in range(2, 7):
    print(k, a_k(k), b_k(k), gkm_density(k, 1) - gkm_density(k, 0))

# %%
# Other families from their text form
# -----------------------------------

for text in ("Fkm(2,9)", "FanCliques(3,1)", "BowtieStar(3)", "CliqueStar(5,3,4)"):
    spec = FamilySpec.parse(text)
    cf = closed_form(spec)
    print(f"{text:<18} v={cf.v:<3} e={cf.e:<3} rho={cf.rho}  rho1={cf.rho1}")
