"""
===========================
Fully packed loops and A_pi
===========================

Count FPLs on the n x n grid, split them by link pattern, and look at the
growth of A_pi(m) when m nested arcs are wrapped around pi.
"""

# %%
# Totals and the link-pattern census

from tfplkit import enumerate_fpl, fpl_census, interpolate_api, link_pattern
from tfplkit.fpl import a_pi_m

for n in range(1, 6):
    census = fpl_census(n)
    print(n, sum(census.values()), max(census.values()))

for f in enumerate_fpl(2):
    print(sorted(f.edges), "->", link_pattern(f))

# %%
# Polynomial growth in m
# ----------------------
#
# The interpolant through enough values of m has degree d(pi) and
# leading coefficient 1/H of the diagram of pi.

for pi in ["0101", "001011", "010101"]:
    values = [a_pi_m(pi, m) for m in range(7 - len(pi) // 2)]
    print(pi, values, interpolate_api(pi, range(len(values))).render("m"))
