"""
=========================================
Dyck words, diagrams and SSYT polynomials
=========================================

A Dyck word of size n doubles as a noncrossing matching of 2n points and
as a Ferrers diagram inside the staircase (n-1, ..., 1).
"""

# %%
# Words and their shapes
# ----------------------

from tfplkit import DyckWord, catalan, degree, enumerate_dyck, word_to_diagram, word_to_linkpattern
from tfplkit.dyck import conjugate, hook_product, ssyt_count_polynomial, ssyt_enumerate

for n in range(1, 7):
    print(n, len(enumerate_dyck(n)), catalan(n))

w = DyckWord("0010100111")
print("pairs:", sorted(word_to_linkpattern(w)))
print("diagram:", word_to_diagram(w), "degree:", degree(w))

# %%
# Conjugation reverses and complements the word, which transposes the shape.

for w in enumerate_dyck(3):
    print(w, word_to_diagram(w), "->", conjugate(w), word_to_diagram(conjugate(w)))

# %%
# Hook-content polynomial
# -----------------------
#
# The number of semistandard tableaux with entries at most N is a
# polynomial in N with leading coefficient 1/H.

shape = (2, 2, 1)
poly = ssyt_count_polynomial(shape)
print(poly, " H =", hook_product(shape))
for N in range(1, 6):
    print(N, poly(N), ssyt_enumerate(shape, N))
