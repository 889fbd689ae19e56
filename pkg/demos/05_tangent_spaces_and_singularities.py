"""Tangent spaces of rank loci, two ways, and where the singularities sit.

At a point of exact catalecticant rank r, the tangent space of the
rank-<=r locus is the perp of the product of apolar slices I_1 * I_{d-1};
independently, it is the kernel of the Jacobian of the defining minors.
The two computations share nothing and must agree.  The singular locus of
each family is the next-smaller family: powers inside sums-of-two, and
the T_{2,s-1} stratum inside the T_{2,s} cap.
"""

from catkit import (
    SampleSpec,
    dim_forms,
    dim_vr,
    emit_minors,
    embed,
    jacobian_rank,
    linear_power,
    sample,
    singular_test,
    tangent_dim_gor,
    tangent_dim_vr,
)

n, d, r = 3, 4, 2
f = sample(SampleSpec(family="ps", n=n, d=d, seed=11, r=r))

via_products = tangent_dim_vr(f, 1, r)
gens = emit_minors(n, d, 1, r + 1)
via_jacobian = dim_forms(n, d) - jacobian_rank(gens, f)
print(f"tangent dim at a rank-2 quartic: products={via_products} "
      f"jacobian={via_jacobian} formula={dim_vr(r, d, n)}")

# Smooth point of the chordal family: tangent dimension 2n.
rep = singular_test(f, "ps2")
print(f"\ngeneric sum of two powers: tangent={rep.tangent_dim} "
      f"variety={rep.variety_dim} singular={rep.singular}")

# A pure power is a singular point of the same family: the Jacobian of
# the size-3 minors vanishes identically there (order-2 vanishing).
p = embed(linear_power([1, 1], d), n)
rep = singular_test(p, "ps2")
print(f"pure power inside it:      tangent={rep.tangent_dim} "
      f"variety={rep.variety_dim} singular={rep.singular}")

# The capped-Hilbert family gor(3) is singular exactly along gor(2).
shallow = sample(SampleSpec(family="gor", n=3, d=6, seed=21, s=2))
deep = sample(SampleSpec(family="gor", n=3, d=6, seed=22, s=3))
for name, g in [("gor(2) point", shallow), ("gor(3) point", deep)]:
    rep = singular_test(g, "gor", s=3)
    print(f"{name} in gor(3):  tangent={rep.tangent_dim} "
          f"variety={rep.variety_dim} singular={rep.singular}")

# The fixed-Hilbert-sequence tangent space at a generic sum of two powers
# has dimension 2n, matching the dimension of the family itself.
print("\n(I^2)_d-perp dimension at the rank-2 quartic:", tangent_dim_gor(f))
