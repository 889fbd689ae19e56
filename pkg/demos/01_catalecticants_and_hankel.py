"""Catalecticant matrices: from a form to its rank profile.

A degree-d form f, stored with divided-power coefficients a_U, has for
each i a catalecticant matrix whose (U, V) entry is a_{U+V}.  For binary
forms these are the classical Hankel matrices: every antidiagonal is
constant.  Run me with `python demos/01_catalecticants_and_hankel.py`.
"""

from catkit import Form, build_cat, build_generic_cat, linear_power, rank

# The generic binary cubic: rows are first derivatives, columns the
# remaining second derivatives.  Symbols are indexed by exponent vectors.
gen = build_generic_cat(2, 3, 1)
print("generic Cat(1,2;2) symbols (a Hankel pattern):")
for row in gen.entries:
    print("   ", "  ".join(f"Z{w}" for w in row))

# A concrete quartic: x1^4 + x2^4 (divided coefficients are 4! = 24).
f = Form(2, 4, {(4, 0): 24, (0, 4): 24})
cat = build_cat(f, 2)
print("\nCat(2,2) of x1^4 + x2^4:")
for r in range(cat.body.rows):
    print("   ", [str(x) for x in cat.body.row(r)])
print("rank:", rank(cat.body))

# Powers of linear forms have rank-1 catalecticants in every degree.
p = linear_power([2, -3], 5)  # (2 x1 - 3 x2)^5
print("\nranks of Cat(i, 5-i) for (2 x1 - 3 x2)^5:",
      [rank(build_cat(p, i).body) for i in range(1, 5)])

# Adding a second power bumps every rank to 2 (and no further).
q = p + linear_power([1, 1], 5)
print("ranks for a sum of two fifth powers:     ",
      [rank(build_cat(q, i).body) for i in range(1, 5)])
