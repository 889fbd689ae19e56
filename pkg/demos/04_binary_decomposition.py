"""Exact Waring decomposition of binary forms, Sylvester style.

Find the smallest s with a nonzero apolar slice; its generator phi is
unique while 2s <= d+1.  If phi splits into distinct rational linear
factors, f is an exact sum of s powers.  A repeated factor of
multiplicity m contributes a block G * L^(d-m+1) instead (the generalized
additive decomposition).  Irrational factors leave a verifiable
certificate: the apolar form itself.
"""

from fractions import Fraction

from catkit import (
    Form,
    apolar_generator,
    convert_basis,
    linear_power,
    min_apolar_degree,
    verify_decomposition,
    waring_decompose,
)


def show(name, f):
    dec = waring_decompose(f)
    print(f"{name}: kind={dec.kind}")
    for g, l, e in dec.components:
        print(f"    G={dict(g.coeffs)}  L={tuple(map(str, l))}  exponent={e}")
    if dec.kind == "certificate":
        print(f"    apolar certificate: {dec.apolar_form}")
    print(f"    verified exactly: {verify_decomposition(dec, f)}")


# x1^3 + x2^3: apolar generator y1 y2, two distinct rational roots.
f = Form(2, 3, {(3, 0): 6, (0, 3): 6})
print("minimal apolar degree of x1^3 + x2^3:", min_apolar_degree(f))
print("generator:", apolar_generator(f))
show("x1^3 + x2^3", f)

# A denser rational example: 5 (x1 + 2 x2)^5 - 1/3 (x1 - x2)^5.
g = linear_power([1, 2], 5).scale(5) + linear_power([1, -1], 5).scale(Fraction(-1, 3))
show("5 (x1+2x2)^5 - 1/3 (x1-x2)^5", g)

# x1^2 x2: the apolar quadric is y2^2 (a double root), so the answer is a
# generalized additive decomposition G * x1^2 with G linear.
h = convert_basis(2, 3, {(2, 1): 1}, "monomial")
show("x1^2 x2", h)

# Annihilated by y1^2 - 2 y2^2: no rational roots, certificate only.
c = Form(2, 3, {(3, 0): 2, (1, 2): 1})
show("a form with irrational power sums", c)
