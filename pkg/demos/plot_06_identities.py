"""
=======================
Exact summation checks
=======================

Weighted sums of TFPL counts and LR coefficients against 1/H, and the
formula expressing A_pi(m) through TFPL counts and SSYT polynomials.
"""

# %%

from tfplkit import enumerate_dyck, verify_api_formula, verify_identity_c, verify_identity_t, verify_identity_tc

for pi in enumerate_dyck(4):
    t, tc = verify_identity_t(pi), verify_identity_tc(pi)
    print(pi, t.lhs, t.passed, tc.passed)

print(verify_identity_c((2, 2, 1)).to_json())

# %%
# The same A_pi(m) comes out for every k.

for k in range(-2, 3):
    r = verify_api_formula("0101", 3, k)
    print(k, r.lhs, r.rhs)
