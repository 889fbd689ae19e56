"""Deciding when a form is a sum of two powers, and which kind it is.

Two rank conditions characterize the closure of {L1^d + L2^d}: both the
first and the second catalecticant must have rank at most 2.  Points of
that locus are 0, a single power, an honest sum of two powers, or the
degeneration L1 * L2^(d-1); the three nonzero cases are separated by the
rank and by whether the degree-2 apolar generator is square-free.
"""

from catkit import (
    SampleSpec,
    classify_ps2,
    essential_vars,
    hilbert_sequence,
    member_gor_leq,
    member_ps2,
    sample,
    t2s_sequence,
)

ps2 = sample(SampleSpec(family="ps", n=3, d=5, seed=1, r=2))
tangent = sample(SampleSpec(family="tangent", n=3, d=5, seed=2))
ps3 = sample(SampleSpec(family="ps", n=3, d=5, seed=3, r=3))

for name, f in [("L1^5+L2^5", ps2), ("L1*L2^4", tangent), ("three powers", ps3)]:
    print(f"{name:14s} member_ps2 = {member_ps2(f)}")

print("\nclassification of the first two:")
print("  sum sample     ->", classify_ps2(ps2))
print("  tangent sample ->", classify_ps2(tangent))

# essential variables: the sum of two powers in 3 variables really lives in 2
r, M, g = essential_vars(ps2)
print(f"\nessential variables of the sum sample: {r} (reduced form has n={g.n})")

# the capped-Hilbert families nest: T_{2,2} points satisfy every larger cap
gor2 = sample(SampleSpec(family="gor", n=3, d=6, seed=4, s=2))
print("\nHilbert sequence of a gor(2) sample:", tuple(hilbert_sequence(gor2)))
print("T_{2,2} =", tuple(t2s_sequence(6, 2)))
print("member of gor(2), gor(3), gor(4):",
      [member_gor_leq(gor2, s) for s in (2, 3, 4)])
