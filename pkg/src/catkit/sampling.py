"""Seeded, fully deterministic samplers for the test families.

The generator is splitmix64 (the standard 64-bit mix with increment
0x9E3779B97F4A7C15); integer draws use rejection so they are exactly
uniform.  Identical specs produce byte-identical forms on every platform.

Families:
  power    -> L^d
  ps(r)    -> L_1^d + ... + L_r^d, pairwise nonproportional L's
  tangent  -> L_1 * L_2^(d-1), nonproportional L's
  gor(s)   -> a two-block binary generalized additive decomposition with
              block degrees summing to s, optionally pushed off the
              visible 2-variable locus by a unimodular substitution
  generic  -> dense random divided coefficients
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .binary import min_apolar_degree
from .forms import (
    Form,
    convert_basis,
    convolve,
    embed,
    enumerate_monomials,
    linear_power,
    substitute,
)
from .linalg import Matrix
from .varieties import first_cat_rank

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> int:
    """First output of the splitmix64 stream seeded with ``state``."""
    z = (state + _GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Stateful splitmix64 stream with exact uniform integer draws."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], rejection-sampled (no modulo bias)."""
        span = hi - lo + 1
        if span < 1:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            z = self.next_u64()
            if z < limit:
                return lo + z % span

    def coefficient(self, bound: int) -> int:
        return self.uniform(-bound, bound)


@dataclass(frozen=True)
class SampleSpec:
    """Deterministic description of one sampled form."""

    family: str  # "power" | "ps" | "tangent" | "gor" | "generic"
    n: int
    d: int
    seed: int
    coeff_bound: int = 10
    r: Optional[int] = None  # ps(r)
    s: Optional[int] = None  # gor(s)
    mix: bool = True  # gor only: apply a unimodular substitution for n > 2


def _random_linear(rng: SplitMix64, n: int, bound: int):
    while True:
        vec = tuple(rng.coefficient(bound) for _ in range(n))
        if any(vec):
            return vec


def _proportional(u, v) -> bool:
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def _distinct_linears(rng: SplitMix64, n: int, count: int, bound: int):
    out = []
    while len(out) < count:
        cand = _random_linear(rng, n, bound)
        if all(not _proportional(cand, seen) for seen in out):
            out.append(cand)
    return out


def random_unimodular(n: int, rng: SplitMix64, steps: int = 0) -> Matrix:
    """Random integer matrix of determinant +-1 (elementary row operations)."""
    if n == 1:
        return Matrix([[1]])
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if steps <= 0:
        steps = 3 * n
    for _ in range(steps):
        kind = rng.uniform(0, 3)
        i = rng.uniform(0, n - 1)
        j = rng.uniform(0, n - 1)
        if kind == 3:
            while j == i:
                j = rng.uniform(0, n - 1)
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            rows[i] = [-x for x in rows[i]]
        else:
            while j == i:
                j = rng.uniform(0, n - 1)
            k = rng.uniform(1, 2) * (1 if kind == 0 else -1)
            rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
    return Matrix(rows)


def _binary_poly(rng: SplitMix64, degree: int, bound: int):
    """Random nonzero monomial-coefficient dict on x1^t x2^(degree-t)."""
    while True:
        coeffs = {}
        for t in range(degree + 1):
            c = rng.coefficient(bound)
            if c:
                coeffs[(t, degree - t)] = Fraction(c)
        if coeffs:
            return coeffs


def _divisible_by_linear(coeffs: dict, linear) -> bool:
    """Does the binary linear form divide the binary monomial-dict poly?"""
    alpha, beta = linear
    # evaluate at the root [-beta : alpha]... the root of a*x1+b*x2 is
    # (x1, x2) = (b, -a) up to scale; divisibility <=> vanishing there.
    x1, x2 = beta, -alpha
    total = Fraction(0)
    for (t, u), c in coeffs.items():
        total += c * Fraction(x1) ** t * Fraction(x2) ** u
    return total == 0


def _sample_ps(rng: SplitMix64, n: int, d: int, r: int, bound: int) -> Form:
    for _ in range(64):
        linears = _distinct_linears(rng, n, r, bound)
        f = linear_power(linears[0], d)
        for vec in linears[1:]:
            f = f + linear_power(vec, d)
        if not f.is_zero and first_cat_rank(f) == r:
            return f
    raise ValueError(f"could not realize an exact rank-{r} sum of powers")


def sample_binary_gad(rng: SplitMix64, d: int, block_degrees, bound: int) -> Form:
    """Binary form sum_k G_k * L_k^(d - m_k + 1) with prescribed block sizes.

    The L_k are pairwise nonproportional, deg G_k = m_k - 1, and L_k never
    divides G_k, so the minimal apolar degree is exactly sum(block_degrees).
    """
    s = sum(block_degrees)
    if s < 1 or 2 * s > d + 2:
        raise ValueError("block degrees out of range")
    for _ in range(64):
        linears = _distinct_linears(rng, 2, len(block_degrees), bound)
        total = {}
        for mult, lvec in zip(block_degrees, linears):
            while True:
                g = _binary_poly(rng, mult - 1, bound)
                if not _divisible_by_linear(g, lvec):
                    break
            e = d - mult + 1
            power = linear_power(lvec, e).monomial_coeffs()
            piece = convolve(g, power)
            for w, c in piece.items():
                total[w] = total.get(w, Fraction(0)) + c
        f = convert_basis(2, d, total, "monomial")
        if not f.is_zero and min_apolar_degree(f) == s:
            return f
    raise ValueError("could not realize the requested additive decomposition")


def sample(spec: SampleSpec) -> Form:
    """Draw the form described by ``spec``; identical specs give identical forms."""
    if spec.n < 1 or spec.d < 1 or spec.coeff_bound < 1:
        raise ValueError("sample spec out of range")
    rng = SplitMix64(spec.seed)
    n, d, bound = spec.n, spec.d, spec.coeff_bound
    if spec.family == "power":
        return linear_power(_random_linear(rng, n, bound), d)
    if spec.family == "ps":
        if spec.r is None or spec.r < 1:
            raise ValueError("ps family needs r >= 1")
        return _sample_ps(rng, n, d, spec.r, bound)
    if spec.family == "tangent":
        if d < 2:
            raise ValueError("tangent family needs d >= 2")
        l1, l2 = _distinct_linears(rng, n, 2, bound)
        g = {}
        for i, c in enumerate(l1):
            if c:
                w = [0] * n
                w[i] = 1
                g[tuple(w)] = Fraction(c)
        piece = convolve(g, linear_power(l2, d - 1).monomial_coeffs())
        return convert_basis(n, d, piece, "monomial")
    if spec.family == "gor":
        s = spec.s
        if s is None or s < 2 or 2 * s > d + 2:
            raise ValueError("gor family needs 2 <= s with 2s <= d+2")
        d1 = rng.uniform(1, s - 1)
        f2 = sample_binary_gad(rng, d, (d1, s - d1), bound)
        f = embed(f2, n)
        if spec.mix and n > 2:
            f = substitute(f, random_unimodular(n, rng))
        return f
    if spec.family == "generic":
        while True:
            coeffs = {}
            for w in enumerate_monomials(n, d):
                c = rng.coefficient(bound)
                if c:
                    coeffs[w] = c
            if coeffs:
                return Form(n, d, coeffs)
    raise ValueError(f"unknown family {spec.family!r}")
