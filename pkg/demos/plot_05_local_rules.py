"""
===============================
From puzzles to TFPLs, locally
===============================

Each unit triangle of a puzzle becomes a small piece of an oriented TFPL.
The rule table is recovered by search from the local constraints and turns
out to be unique.
"""

# %%

from tfplkit import derive_rule_tables, phi, phi_inverse, phi_oriented
from tfplkit.puzzles import enumerate_puzzles
from tfplkit.tfpl import enumerate_tfpl

(table,) = derive_rule_tables()
for key, fragment in sorted(table.fragments.items()):
    print(key, fragment)

# %%
# Mapping a whole boundary class
# ------------------------------

s, t, p = "00011101", "00011011", "00110101"
puzzles = enumerate_puzzles(s, t, p)
images = [phi(q) for q in puzzles]
print(len(puzzles), set(images) == set(enumerate_tfpl(s, t, p)))
print(all(phi_inverse(f) == q for q, f in zip(puzzles, images)))

# %%
# The oriented image has no cycles.

print(phi_oriented(puzzles[0]).classify().closed)
