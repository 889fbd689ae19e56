"""Deterministic sampling: the generator, the families, the invariants."""

import pytest

from catkit.apolarity import hilbert_sequence
from catkit.forms import dim_forms
from catkit.linalg import determinant
from catkit.sampling import (
    SampleSpec,
    SplitMix64,
    random_unimodular,
    sample,
    sample_binary_gad,
    splitmix64,
)
from catkit.varieties import (
    first_cat_rank,
    member_gor_leq,
    member_ps2,
    t2s_sequence,
)


def test_splitmix64_reference_stream():
    # the published first outputs of the standard mix seeded with 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_uniform_range_and_determinism():
    rng = SplitMix64(123)
    draws = [rng.uniform(-10, 10) for _ in range(200)]
    assert all(-10 <= x <= 10 for x in draws)
    rng2 = SplitMix64(123)
    assert draws == [rng2.uniform(-10, 10) for _ in range(200)]


def test_identical_specs_identical_forms():
    for family, kw in [
        ("power", {}),
        ("ps", {"r": 2}),
        ("tangent", {}),
        ("gor", {"s": 2}),
        ("generic", {}),
    ]:
        spec = SampleSpec(family=family, n=3, d=4, seed=99, **kw)
        assert sample(spec) == sample(spec)


def test_different_seeds_differ():
    a = sample(SampleSpec(family="generic", n=3, d=4, seed=1))
    b = sample(SampleSpec(family="generic", n=3, d=4, seed=2))
    assert a != b


def test_power_family_has_rank_one():
    for seed in range(5):
        f = sample(SampleSpec(family="power", n=3, d=4, seed=seed))
        assert first_cat_rank(f) == 1


def test_ps_family_exact_rank():
    for r in (2, 3):
        for seed in range(4):
            f = sample(SampleSpec(family="ps", n=4, d=5, seed=seed, r=r))
            assert first_cat_rank(f) == r


def test_ps2_family_passes_membership():
    for seed in range(5):
        f = sample(SampleSpec(family="ps", n=3, d=5, seed=seed, r=2))
        assert member_ps2(f)


def test_ps3_family_fails_ps2_membership():
    for seed in range(5):
        f = sample(SampleSpec(family="ps", n=3, d=5, seed=seed, r=3))
        assert not member_ps2(f)


def test_tangent_family_membership():
    for seed in range(5):
        f = sample(SampleSpec(family="tangent", n=3, d=5, seed=seed))
        assert member_ps2(f)
        assert first_cat_rank(f) == 2


def test_gor_family_hits_stratum():
    for s in (2, 3):
        for seed in range(4):
            f = sample(SampleSpec(family="gor", n=3, d=6, seed=seed, s=s))
            assert member_gor_leq(f, s)
            assert hilbert_sequence(f).entries == t2s_sequence(6, s).entries


def test_gor_without_mix_stays_visibly_binary():
    f = sample(SampleSpec(family="gor", n=3, d=5, seed=4, s=2, mix=False))
    assert all(w[2] == 0 for w in f.coeffs)
    g = sample(SampleSpec(family="gor", n=3, d=5, seed=4, s=2, mix=True))
    assert any(w[2] != 0 for w in g.coeffs)


def test_generic_family_is_dense_enough():
    f = sample(SampleSpec(family="generic", n=3, d=4, seed=0))
    assert len(f.coeffs) > dim_forms(3, 4) // 2


def test_sample_binary_gad_block_structure():
    rng = SplitMix64(11)
    f = sample_binary_gad(rng, 7, (2, 1), 10)
    from catkit.binary import min_apolar_degree

    assert min_apolar_degree(f) == 3


def test_random_unimodular_determinant():
    rng = SplitMix64(3)
    for n in (2, 3, 4):
        for _ in range(5):
            m = random_unimodular(n, rng)
            assert determinant(m) in (-1, 1)


def test_bad_specs_rejected():
    with pytest.raises(ValueError):
        sample(SampleSpec(family="ps", n=3, d=4, seed=1))  # missing r
    with pytest.raises(ValueError):
        sample(SampleSpec(family="gor", n=3, d=4, seed=1, s=9))
    with pytest.raises(ValueError):
        sample(SampleSpec(family="nope", n=3, d=4, seed=1))
