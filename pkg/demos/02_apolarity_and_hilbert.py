"""Apolarity: differential operators that kill a form, and what they reveal.

The dual ring acts on forms by differentiation.  The operators that
annihilate f form a graded ideal whose quotient has a symmetric Hilbert
sequence (1, h_1, ..., h_{d-1}, 1) with h_i the rank of the i-th
catalecticant.  The sequence is a complete isomorphism invariant of the
rank profile - it does not move under any invertible change of variables.
"""

from catkit import (
    Form,
    RPoly,
    SplitMix64,
    apolar_slice,
    contract,
    embed,
    hilbert_sequence,
    linear_power,
    random_unimodular,
    substitute,
)

# x1^3 + x2^3 is killed in degree 2 by y1 y2 (differentiate once by each).
f = Form(2, 3, {(3, 0): 6, (0, 3): 6})
print("apolar slice I_2 of x1^3 + x2^3:")
for phi in apolar_slice(f, 2).basis:
    print("   ", phi, "->", contract(phi, f))

# Pure powers have the thinnest possible Hilbert sequence: all ones.
p = embed(linear_power([1, 2], 6), 3)
print("\nH for a single 6th power in 3 variables:", tuple(hilbert_sequence(p)))

# The monomial x1^(s-1) x2^(d-s+1) realizes the plateau shape (1,2,...,s,...,2,1).
m = Form(2, 7, {(2, 5): 1})  # s = 3, d = 7 (divided coefficient 1 is fine)
print("H for x1^2 x2^5 (plateau at 3):        ", tuple(hilbert_sequence(m)))

# Substitution invariance: mix the variables with a unimodular matrix and
# the sequence cannot tell the difference.
rng = SplitMix64(2024)
mixed = substitute(embed(m, 4), random_unimodular(4, rng))
print("same form, hidden in 4 mixed variables:", tuple(hilbert_sequence(mixed)))
