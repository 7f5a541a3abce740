"""
The degeneration order on a small variety
=========================================

Compare objects with the dominance and hom orders, then export the Hasse
diagram of S_1^4 as Graphviz source.
"""

import numpy as np

from nilops import dom_leq, enumerate_s1, export_hasse, format_object, hom_leq, orbit_dim

objs = enumerate_s1(1, 4)
names = [format_object(o) for o in objs]

# the relation matrix: entry (i, j) is 1 when objs[i] degenerates to objs[j]
m = np.array([[int(bool(dom_leq(p, q))) for q in objs] for p in objs])
print(names)
print(m)

# both orders agree
assert all(bool(dom_leq(p, q)) == bool(hom_leq(p, q)) for p in objs for q in objs)

# a failed comparison explains itself
v = dom_leq(objs[-1], objs[0])
print(v.leq, v.witness)

# orbit dimensions shrink down the order
for o in objs:
    print(f"{format_object(o):>14s}  orbit dim {orbit_dim(o)}")

print(export_hasse(1, 4))
