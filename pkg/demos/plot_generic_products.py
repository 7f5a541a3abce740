"""
Generic extensions by hand
==========================

Build a few objects, multiply them and read the answer back as pickets
and as a tableau.
"""

from nilops import extension_witness, format_object, format_pickets, parse_object, render_tableau, star

# objects can be typed as a sum of pickets or as a pair of partitions
y = parse_object("P1^4+P0^3+P0^2+P1^2+P0^1+P0^1")
x = parse_object("[4,4,3]/[4,3,2]")
print("Y =", format_object(y), "=", format_pickets(y))
print("X =", format_object(x), "=", format_pickets(x))

# Y*X is the generic extension with Y on top and X underneath
z = star(y, x)
print("Y*X =", format_object(z), "=", format_pickets(z))
print(render_tableau(z))

# the product is not commutative
print("X*Y =", format_object(star(x, y)))

# every product comes with explicit short exact sequences
for row in extension_witness(y, x).rows:
    print(f"  {row.label:14s} {format_pickets(row.sub):>10s} -> "
          f"{format_pickets(row.middle):>16s} -> {format_pickets(row.quotient)}")

# LaTeX for the same tableau, ready for ytableau
print(render_tableau(z, "latex"))
