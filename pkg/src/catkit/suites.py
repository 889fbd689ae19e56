"""Seeded property suites: every acceptance check as a runnable suite.

Each suite is a per-trial callable; trial i draws its randomness from a
splitmix64 stream seeded with splitmix64(seed XOR i), so any failure is
reproducible from the (suite, trial, seed) triple alone.  ``run_suite``
loops the trials (optionally across a thread pool capped by the
CATKIT_THREADS environment variable; results are merged in trial order
either way) and returns a report listing exact reproduction seeds.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb

from . import apolarity, binary, varieties
from .catalecticant import build_cat, build_generic_cat, emit_minors, evaluate_minor, jacobian_rank
from .forms import Form, dim_forms, embed, substitute
from .sampling import SampleSpec, SplitMix64, random_unimodular, sample, sample_binary_gad, splitmix64


class SuiteFailure(AssertionError):
    """A property violated by one trial; carries a human-readable reason."""


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    trials: int
    failures: tuple  # (trial index, trial seed, message)
    wall_time: float

    @property
    def ok(self) -> bool:
        return not self.failures


def _spec(family, n, d, rng, **kw):
    return SampleSpec(family=family, n=n, d=d, seed=rng.next_u64(), **kw)


def _check(cond, message):
    if not cond:
        raise SuiteFailure(message)


# --- individual suites -----------------------------------------------------


def _hankel_shape(rng: SplitMix64):
    for d in range(2, 11):
        for i in range(1, d):
            gen = build_generic_cat(2, d, i)
            for r, row in enumerate(gen.entries):
                for c, w in enumerate(row):
                    _check(
                        w == (d - r - c, r + c),
                        f"antidiagonal broken at d={d} i={i} ({r},{c})",
                    )
    layout = build_generic_cat(2, 3, 1).entries
    _check(
        layout == (((3, 0), (2, 1), (1, 2)), ((2, 1), (1, 2), (0, 3))),
        "degree-3 Hankel layout mismatch",
    )


def _transpose_identity(rng: SplitMix64):
    n = rng.uniform(2, 4)
    d = rng.uniform(2, 8)
    f = sample(_spec("generic", n, d, rng))
    for i in range(1, d):
        a = build_cat(f, i).body
        b = build_cat(f, d - i).body.transpose()
        _check(a == b, f"transpose identity failed at n={n} d={d} i={i}")


def _ps2_discrimination(rng: SplitMix64):
    for n, d in product((3, 4), range(4, 9)):
        f = sample(_spec("ps", n, d, rng, r=2))
        _check(varieties.member_ps2(f), f"ps(2) sample rejected at n={n} d={d}")
        tag = varieties.classify_ps2(f).tag
        _check(tag == "sum_of_two", f"ps(2) sample classified {tag} at n={n} d={d}")
        g = sample(_spec("tangent", n, d, rng))
        _check(varieties.member_ps2(g), f"tangent sample rejected at n={n} d={d}")
        tag = varieties.classify_ps2(g).tag
        _check(tag == "tangent_line", f"tangent sample classified {tag} at n={n} d={d}")
        h = sample(_spec("ps", n, d, rng, r=3))
        _check(not varieties.member_ps2(h), f"ps(3) sample accepted at n={n} d={d}")


def _hilbert_stratification(rng: SplitMix64):
    for n in (3, 4):
        for d in range(2, 11):
            for s in range(2, (d + 2) // 2 + 1):
                f = embed(Form(2, d, {(s - 1, d - s + 1): 1}), n)
                f = substitute(f, random_unimodular(n, rng))
                got = apolarity.hilbert_sequence(f)
                want = varieties.t2s_sequence(d, s)
                _check(
                    got.entries == want.entries,
                    f"Hilbert sequence {got.entries} != {want.entries} "
                    f"at n={n} d={d} s={s}",
                )


def _dimension_formula(rng: SplitMix64):
    for r, n, d in product((1, 2), (3, 4), range(3, 7)):
        f = sample(_spec("ps", n, d, rng, r=r))
        got = apolarity.tangent_dim_vr(f, 1, r)
        want = varieties.dim_vr(r, d, n)
        _check(got == want, f"tangent dim {got} != {want} at r={r} n={n} d={d}")


def _corank_one_slice(rng: SplitMix64):
    for n, d in product((3, 4), range(3, 7)):
        f = sample(_spec("ps", n, d, rng, r=n - 1))
        got = apolarity.product_slice(f, 1).dim
        want = comb(n + d - 2, d - 1) - n + 1
        _check(got == want, f"product slice dim {got} != {want} at n={n} d={d}")


_MINOR_CACHE = {}


def _minors(n, d, i, r):
    key = (n, d, i, r)
    if key not in _MINOR_CACHE:
        _MINOR_CACHE[key] = emit_minors(n, d, i, r)
    return _MINOR_CACHE[key]


def _chordal_generators(rng: SplitMix64):
    n = 3
    for d in (4, 5, 6):
        f = sample(_spec("ps", n, d, rng, r=2))
        for i in (1, 2):
            for p in _minors(n, d, i, 3):
                v = evaluate_minor(p, f)
                _check(
                    v == 0,
                    f"minor {p.rows}/{p.cols} of Cat({i},{d - i}) is {v} on a "
                    f"ps(2) sample at d={d}",
                )
        h = sample(_spec("ps", n, d, rng, r=3))
        witness = any(
            evaluate_minor(p, h) != 0
            for i in (1, 2)
            for p in _minors(n, d, i, 3)
        )
        _check(witness, f"all minors vanish on a ps(3) sample at d={d}")


def _singular_loci(rng: SplitMix64):
    n = 3
    for d in (4, 5):
        f = sample(_spec("ps", n, d, rng, r=2))
        rep = varieties.singular_test(f, "ps2")
        _check(
            rep.tangent_dim == 2 * n and not rep.singular,
            f"generic ps(2) point: tangent {rep.tangent_dim} != {2 * n} at d={d}",
        )
        g = sample(_spec("power", n, d, rng))
        rep = varieties.singular_test(g, "ps2")
        _check(
            rep.tangent_dim == dim_forms(n, d) and rep.singular,
            f"power point: tangent {rep.tangent_dim} != {dim_forms(n, d)} at d={d}",
        )


def _tangent_cross_oracle(rng: SplitMix64):
    n, r = 3, 2
    for d in (3, 4, 5):
        f = sample(_spec("ps", n, d, rng, r=r))
        via_products = apolarity.tangent_dim_vr(f, 1, r)
        via_jacobian = dim_forms(n, d) - jacobian_rank(_minors(n, d, 1, r + 1), f)
        _check(
            via_products == via_jacobian,
            f"tangent oracles disagree ({via_products} vs {via_jacobian}) at d={d}",
        )


def _binary_waring_roundtrip(rng: SplitMix64):
    d = rng.uniform(1, 9)
    s = rng.uniform(1, (d + 1) // 2)
    f = sample_binary_gad(rng, d, (1,) * s, 10)
    dec = binary.waring_decompose(f)
    _check(dec.kind == "waring", f"expected waring, got {dec.kind} at d={d} s={s}")
    _check(len(dec.components) == s, f"expected {s} components at d={d}")
    _check(binary.verify_decomposition(dec, f), f"re-expansion failed at d={d} s={s}")


def _binary_gad_roundtrip(rng: SplitMix64):
    d = rng.uniform(3, 9)
    smax = (d + 1) // 2
    m = rng.uniform(2, max(2, min(smax, 4)))
    rest = smax - m
    blocks = [m] + [1] * rng.uniform(0, min(rest, 2)) if rest > 0 else [m]
    f = sample_binary_gad(rng, d, tuple(blocks), 10)
    dec = binary.waring_decompose(f)
    _check(dec.kind == "gad", f"expected gad, got {dec.kind} at d={d} blocks={blocks}")
    _check(binary.verify_decomposition(dec, f), f"re-expansion failed at d={d}")


def _en_euler_identity(rng: SplitMix64):
    for d in range(4, 13):
        for s in range(2, d // 2 + 1):
            a, e = d - s + 1, s + 1
            total = sum(
                (-1) ** (j - e) * varieties.en_term_rank(d, s, j)
                for j in range(e, a + 1)
            )
            _check(total == 1, f"Euler identity gives {total} at d={d} s={s}")


def _export_roundtrip(rng: SplitMix64):
    import tempfile

    from .formio import export_generators, read_generators

    n = rng.uniform(2, 3)
    d = rng.uniform(2, 4)
    i = rng.uniform(1, d - 1)
    size = rng.uniform(1, min(3, dim_forms(n, i), dim_forms(n, d - i)))
    gens = emit_minors(n, d, i, size)
    with tempfile.NamedTemporaryFile("w", suffix=".gens", delete=False) as fh:
        path = fh.name
    try:
        export_generators(gens, path)
        back = read_generators(path)
    finally:
        os.unlink(path)
    _check(
        list(back.minors) == list(gens.minors) and back.provenance == gens.provenance,
        f"export did not round-trip at n={n} d={d} i={i} r={size}",
    )


SUITES = {
    "hankel-shape": _hankel_shape,
    "transpose-identity": _transpose_identity,
    "ps2-discrimination": _ps2_discrimination,
    "hilbert-stratification": _hilbert_stratification,
    "dimension-formula": _dimension_formula,
    "corank-one-slice": _corank_one_slice,
    "chordal-generators": _chordal_generators,
    "singular-loci": _singular_loci,
    "tangent-cross-oracle": _tangent_cross_oracle,
    "binary-waring-roundtrip": _binary_waring_roundtrip,
    "binary-gad-roundtrip": _binary_gad_roundtrip,
    "en-euler-identity": _en_euler_identity,
    "export-roundtrip": _export_roundtrip,
}


def _run_trial(fn, index: int, seed: int):
    trial_seed = splitmix64(seed ^ index)
    try:
        fn(SplitMix64(trial_seed))
    except SuiteFailure as exc:
        return (index, trial_seed, str(exc))
    return None


def run_suite(name: str, trials: int, seed: int) -> SuiteReport:
    """Run a named suite; failures carry exact reproduction seeds."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    fn = SUITES[name]
    start = time.perf_counter()
    workers = int(os.environ.get("CATKIT_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda i: _run_trial(fn, i, seed), range(trials))
            )
    else:
        results = [_run_trial(fn, i, seed) for i in range(trials)]
    failures = tuple(r for r in results if r is not None)
    return SuiteReport(
        suite=name,
        trials=trials,
        failures=failures,
        wall_time=time.perf_counter() - start,
    )
