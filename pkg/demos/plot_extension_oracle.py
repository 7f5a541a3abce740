"""
Checking a product against brute force
======================================

Realise objects as matrices over F_2, enumerate every extension and see
that the generic one is the smallest.
"""

from nilops import canonical_rep, end_dim, enumerate_extensions, format_object, parse_object, star, verify_generic

y, x = parse_object("P0^1+P0^1+P1^1"), parse_object("P1^2")

# the operator is a nilpotent matrix, the subspace is the column space of f
rep = canonical_rep(x, p=2)
print(rep.phi)
print(rep.f)

# all isomorphism types of middle terms 0 -> X -> Z -> Y -> 0
for z in enumerate_extensions(y, x, p=2):
    tag = "  <- Y*X" if z == star(y, x) else ""
    print(f"{format_object(z):>16s}  dim End = {end_dim(z)}{tag}")

# the same checks in one call, over F_3 this time
print(verify_generic(y, x, p=3))
