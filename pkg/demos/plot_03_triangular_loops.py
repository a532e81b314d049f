"""
=====================================
Fully packed loops in a triangle
=====================================

TFPLs with boundary words (sigma, tau) and bottom connectivity pi, their
path structure, and the orientation that turns connectivity into a local
condition.
"""

# %%
# Counting by bottom pattern

from tfplkit import canonical_orientation, classify_paths, enumerate_tfpl, tfpl_census
from tfplkit.dyck import degree

sigma, tau = "001011", "001101"
for pi, t in tfpl_census(sigma, tau).items():
    print(pi, t, "balanced" if degree(sigma) + degree(tau) == degree(pi) else "")

# %%
# Paths of one configuration
# --------------------------

f = enumerate_tfpl(sigma, tau, "010101")[0]
paths = classify_paths(f)
print(len(paths.left_right), "left-right,", len(paths.bottom), "bottom,", len(paths.closed), "closed")
print("bottom pairs:", paths.bottom_pairs(f.triangle))

# %%
# The canonical orientation sends open paths left to right and cycles
# clockwise; forgetting the arrows gives back the same configuration.

F = canonical_orientation(f)
print(F.is_valid(), F.undirected() == f)
