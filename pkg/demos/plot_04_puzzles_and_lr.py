"""
==========================================
Puzzles and Littlewood-Richardson numbers
==========================================

KT puzzles with boundary (sigma, tau, pi) are counted by c^{lambda(pi)}
of lambda(sigma) and lambda(tau). The LR side uses skew tableaux only.
"""

# %%

from tfplkit import enumerate_puzzles, lr_coefficient, puzzle_count, schur_product_expand, word_to_diagram
from tfplkit.tfpl import balanced_triples

print(schur_product_expand((2, 1), (2, 1)))

# %%
# Puzzle counts against the tableau rule, all balanced triples of size 4

mismatches = 0
for s, t, p in balanced_triples(4):
    c = lr_coefficient(word_to_diagram(p), word_to_diagram(s), word_to_diagram(t))
    mismatches += puzzle_count(s, t, p) != c
print("mismatches:", mismatches)

# %%
# A single puzzle, edge labels in the flat JSON order

(puzzle,) = enumerate_puzzles("00011101", "00011011", "00110101")
print(puzzle.to_json())
