"""Membership predicates, classification, dimensions, singular loci."""

from fractions import Fraction
from math import comb

import pytest

from catkit.apolarity import hilbert_sequence
from catkit.forms import (
    Form,
    convert_basis,
    dim_forms,
    embed,
    linear_power,
    substitute,
)
from catkit.linalg import Matrix, determinant, inverse
from catkit.sampling import SampleSpec, SplitMix64, random_unimodular, sample
from catkit.varieties import (
    classify_ps2,
    decompose_form,
    dim_gor_leq,
    dim_ps2,
    dim_vr,
    en_term_rank,
    essential_vars,
    first_cat_rank,
    hilbert_cap,
    member_gor_leq,
    member_ps2,
    member_vr,
    singular_test,
    t2s_sequence,
)
from catkit.binary import verify_decomposition

F = Fraction


# --- member_vr / essential_vars ---------------------------------------------


def test_member_vr_two_powers():
    f = embed(Form(2, 4, {(4, 0): 24, (0, 4): 24}), 3)
    assert member_vr(f, 2)
    assert not member_vr(f, 1)


def test_member_vr_generic_dense():
    f = sample(SampleSpec(family="generic", n=3, d=4, seed=5))
    assert first_cat_rank(f) == 3
    assert not member_vr(f, 2)
    assert member_vr(f, 3)


def test_member_vr_zero_form():
    assert member_vr(Form.zero(3, 4), 1)


def test_essential_vars_collapsed_binomial():
    f = embed(linear_power([1, 1], 4), 3)
    r, m, g = essential_vars(f)
    assert r == 1
    assert g.n == 1 and set(g.coeffs) == {(4,)}
    assert determinant(m) != 0


def test_essential_vars_pure_power_identity():
    f = linear_power([1, 0], 5)
    r, m, g = essential_vars(f)
    assert r == 1
    assert m == Matrix.identity(2)
    assert g == Form(1, 5, {(5,): 120})


def test_essential_vars_generic_full_rank_identity_path():
    f = sample(SampleSpec(family="generic", n=3, d=4, seed=5))
    r, m, g = essential_vars(f)
    assert r == 3
    assert m == Matrix.identity(3)
    assert g == f


def test_essential_vars_round_trip():
    for seed in (1, 2, 3):
        f = sample(SampleSpec(family="gor", n=4, d=5, seed=seed, s=2))
        r, m, g = essential_vars(f)
        assert r == 2
        back = substitute(embed(g, 4), inverse(m))
        assert back == f


def test_essential_vars_uses_leading_variables():
    f = sample(SampleSpec(family="ps", n=4, d=4, seed=9, r=2))
    r, m, g = essential_vars(f)
    assert r == 2 and g.n == 2
    assert not g.is_zero


# --- member_ps2 / classify ---------------------------------------------------


def test_member_ps2_pair_of_powers():
    for n, d in [(3, 4), (4, 5)]:
        f = sample(SampleSpec(family="ps", n=n, d=d, seed=n + d, r=2))
        assert member_ps2(f)


def test_member_ps2_tangent_form():
    for d in (3, 4, 6):
        f = sample(SampleSpec(family="tangent", n=3, d=d, seed=d, r=None))
        assert member_ps2(f)


def test_member_ps2_three_powers_rejected():
    f = embed(
        linear_power([1, 0], 4), 3
    ) + embed(linear_power([0, 1], 4), 3) + linear_power([0, 0, 1], 4)
    assert first_cat_rank(f) == 3
    assert not member_ps2(f)


def test_member_ps2_degree_two_uses_rank():
    f = Form(3, 2, {(2, 0, 0): 2, (0, 2, 0): 2})
    assert member_ps2(f)
    g = Form(3, 2, {(2, 0, 0): 2, (0, 2, 0): 2, (0, 0, 2): 2})
    assert not member_ps2(g)
    with pytest.raises(ValueError):
        member_ps2(Form(3, 1, {(1, 0, 0): 1}))


def test_classify_zero():
    assert classify_ps2(Form.zero(3, 4)).tag == "zero"


def test_classify_power():
    f = embed(linear_power([2, 1], 5), 3)
    cls = classify_ps2(f)
    assert cls.tag == "power"
    assert cls.witnesses == ((2, 1, 0),)


def test_classify_sum_of_two():
    f = embed(Form(2, 4, {(4, 0): 24, (0, 4): 24}), 3)
    cls = classify_ps2(f)
    assert cls.tag == "sum_of_two"
    assert set(cls.witnesses) == {(1, 0, 0), (0, 1, 0)}


def test_classify_tangent_line():
    f = embed(convert_basis(2, 3, {(2, 1): 1}, "monomial"), 3)  # x1^2 x2
    cls = classify_ps2(f)
    assert cls.tag == "tangent_line"


def test_classify_requires_membership():
    f = sample(SampleSpec(family="generic", n=3, d=4, seed=5))
    with pytest.raises(ValueError):
        classify_ps2(f)


def test_classify_irrational_pair_gets_no_witnesses():
    # apolar quadric y1^2 - 2 y2^2 has no rational roots
    f = Form(2, 3, {(3, 0): 2, (1, 2): 1})
    cls = classify_ps2(f)
    assert cls.tag == "sum_of_two"
    assert cls.witnesses is None


def test_classify_matches_binary_pipeline_after_reduction():
    for seed in (1, 4, 9):
        f = sample(SampleSpec(family="ps", n=4, d=5, seed=seed, r=2))
        assert classify_ps2(f).tag == "sum_of_two"
        g = sample(SampleSpec(family="tangent", n=4, d=5, seed=seed))
        assert classify_ps2(g).tag == "tangent_line"


def test_decompose_form_embedded_round_trip():
    for seed in (2, 5):
        f = sample(SampleSpec(family="ps", n=3, d=5, seed=seed, r=2))
        dec = decompose_form(f)
        assert dec.kind == "waring"
        assert dec.embedding is not None
        assert verify_decomposition(dec, f)


def test_decompose_form_rejects_three_essential_vars():
    f = sample(SampleSpec(family="generic", n=3, d=4, seed=5))
    with pytest.raises(ValueError, match="essential variables"):
        decompose_form(f)


# --- member_gor_leq / sequences ----------------------------------------------


def test_member_gor_monomial_example():
    f = convert_basis(2, 5, {(2, 3): 1}, "monomial")  # x1^2 x2^3
    f = embed(f, 3)
    assert member_gor_leq(f, 3)
    assert hilbert_sequence(f).entries == (1, 2, 3, 3, 2, 1)
    assert t2s_sequence(5, 3).entries == (1, 2, 3, 3, 2, 1)


def test_member_gor_accepts_matching_stratum():
    for s in (2, 3):
        f = sample(SampleSpec(family="gor", n=3, d=6, seed=s, s=s))
        assert hilbert_sequence(f).entries == t2s_sequence(6, s).entries
        assert member_gor_leq(f, s)


def test_member_gor_nesting():
    # sequences capped by T_{2,s'} stay capped for every larger s
    f = sample(SampleSpec(family="gor", n=3, d=6, seed=7, s=2))
    for s in (2, 3, 4):
        assert member_gor_leq(f, s)


def test_member_gor_maximal_s_degenerates_to_member_vr():
    for d, s in [(4, 3), (5, 3), (6, 4)]:  # 2s in {d+1, d+2}
        for seed in (1, 2):
            f = sample(SampleSpec(family="generic", n=3, d=d, seed=seed))
            assert member_gor_leq(f, s) == member_vr(f, 2)
        g = sample(SampleSpec(family="ps", n=3, d=d, seed=3, r=2))
        assert member_gor_leq(g, s)


def test_member_gor_range_validation():
    f = embed(linear_power([1, 1], 4), 3)
    with pytest.raises(ValueError):
        member_gor_leq(f, 1)
    with pytest.raises(ValueError):
        member_gor_leq(f, 4)  # 2s = 8 > d+2 = 6


def test_t2s_patterns():
    assert t2s_sequence(5, 2).entries == (1, 2, 2, 2, 2, 1)
    assert t2s_sequence(6, 3).entries == (1, 2, 3, 3, 3, 2, 1)


def test_t2s_symmetry_random():
    for d in range(2, 11):
        for s in range(2, (d + 2) // 2 + 1):
            seq = t2s_sequence(d, s)
            assert seq.is_symmetric
            assert seq[0] == seq[d] == 1


def test_hilbert_cap_examples():
    assert hilbert_cap(2, 5, 3).entries == (1, 2, 2, 2, 2, 1)
    # r = n starts (1, n, ...)
    assert hilbert_cap(3, 6, 3).entries[:2] == (1, 3)
    for r, d, n in [(2, 5, 3), (3, 6, 4), (4, 7, 4)]:
        seq = hilbert_cap(r, d, n)
        assert seq.is_symmetric
        assert all(
            seq[i] == min(r, dim_forms(n, i), dim_forms(n, d - i))
            for i in range(d + 1)
        )


# --- dimensions / Eagon-Northcott combinatorics -------------------------------


def test_hilbert_cap_bounds_sampled_sequences():
    # every sum of r powers obeys the entrywise cap min(r, dim, dim)
    for r, n, d, seed in [(2, 3, 5, 1), (3, 4, 4, 2), (2, 4, 6, 3)]:
        f = sample(SampleSpec(family="ps", n=n, d=d, seed=seed, r=r))
        h = hilbert_sequence(f)
        cap = hilbert_cap(r, d, n)
        assert all(h[i] <= cap[i] for i in range(d + 1))


def test_dim_gor_leq_maximal_s_matches_rank_locus():
    # at maximal s the capped family is the whole rank-2 locus
    for d in range(4, 10):
        for s in ((d + 1) // 2, (d + 2) // 2):
            if 2 * s in (d + 1, d + 2) and s >= 2:
                for n in (3, 4):
                    assert dim_gor_leq(s, d, n) == dim_vr(2, d, n)
    assert dim_gor_leq(2, 4, 3) == dim_ps2(3)


def test_dim_vr_instances():
    assert dim_vr(2, 4, 3) == 7
    for d, n in [(3, 3), (5, 4), (4, 5)]:
        assert dim_vr(1, d, n) == n  # cone over the Veronese


def test_dim_vr_corank_one_codimension():
    # codim of the corank-1 locus is C(n+d-2, d-1) - n + 1
    for n in range(3, 6):
        for d in range(3, 9):
            codim = dim_forms(n, d) - dim_vr(n - 1, d, n)
            assert codim == comb(n + d - 2, d - 1) - n + 1


def test_en_term_rank_instances():
    assert en_term_rank(5, 2, 3) == 4  # C(4,3) * C(2,2)
    assert en_term_rank(5, 2, 4) == 3  # C(4,4) * C(3,2)


def test_en_term_rank_range():
    with pytest.raises(ValueError):
        en_term_rank(5, 2, 2)
    with pytest.raises(ValueError):
        en_term_rank(5, 2, 5)


def test_en_euler_identity_full_grid():
    for d in range(4, 13):
        for s in range(2, d // 2 + 1):
            a, e = d - s + 1, s + 1
            alternating = sum(
                (-1) ** (j - e) * en_term_rank(d, s, j) for j in range(e, a + 1)
            )
            assert 1 - alternating == 0


# --- singular tests ------------------------------------------------------------


def test_singular_power_point_in_ps2():
    f = embed(linear_power([1, 1], 4), 3)
    rep = singular_test(f, "ps2")
    assert rep.singular
    assert rep.tangent_dim == dim_forms(3, 4)  # Jacobian rank 0
    assert rep.variety_dim == dim_ps2(3) == 6


def test_smooth_generic_ps2_point():
    f = sample(SampleSpec(family="ps", n=3, d=5, seed=18, r=2))
    rep = singular_test(f, "ps2")
    assert not rep.singular
    assert rep.tangent_dim == 6


def test_singular_smaller_stratum_in_gor():
    f = sample(SampleSpec(family="gor", n=3, d=6, seed=21, s=2))
    assert hilbert_sequence(f).entries == t2s_sequence(6, 2).entries
    rep = singular_test(f, "gor", s=3)
    assert rep.singular
    g = sample(SampleSpec(family="gor", n=3, d=6, seed=22, s=3))
    rep2 = singular_test(g, "gor", s=3)
    assert not rep2.singular
    assert rep2.tangent_dim == rep2.variety_dim == dim_gor_leq(3, 6, 3)


def test_singular_vr_family():
    f = sample(SampleSpec(family="ps", n=3, d=4, seed=11, r=2))
    rep = singular_test(f, "vr", r=2)
    assert not rep.singular
    assert rep.tangent_dim == dim_vr(2, 4, 3)
    g = embed(linear_power([1, 2], 4), 3)
    rep2 = singular_test(g, "vr", r=2)
    assert rep2.singular


def test_singular_test_membership_enforced():
    f = sample(SampleSpec(family="generic", n=3, d=4, seed=5))
    with pytest.raises(ValueError):
        singular_test(f, "ps2")


# --- substitution invariance ---------------------------------------------------


def test_membership_invariant_under_substitution():
    rng = SplitMix64(5)
    f = sample(SampleSpec(family="ps", n=3, d=4, seed=6, r=2))
    for _ in range(3):
        g = substitute(f, random_unimodular(3, rng))
        assert member_ps2(g)
        assert member_vr(g, 2)
        assert member_gor_leq(g, 3)
