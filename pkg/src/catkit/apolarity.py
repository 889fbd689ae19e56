"""Apolar ideal slices, Hilbert sequences, and tangent-space dimensions.

For a nonzero form f the graded ideal I = Ann(f) collects every dual
polynomial phi with phi o f = 0; the quotient A_f = R/I is a graded
artinian Gorenstein algebra whose Hilbert sequence (h_0, ..., h_d) is read
off the catalecticant ranks, h_i = rk Cat_f(i, d-i), with h_0 = h_d = 1 and
the symmetry h_i = h_{d-i}.

Tangent-space dimensions of the rank loci come from the same data: at a
point of exact catalecticant rank r the tangent space of the rank-<=r
scheme is the perp of I_i * I_{d-i}, and the tangent space of the fixed-
Hilbert-sequence scheme is the perp of the degree-d part of I^2.  Both are
computed here as exact dimensions of product spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalecticant import _cat_body
from .forms import Form, RPoly, dim_forms, enumerate_monomials, multiply_r
from .linalg import EchelonSpan, _rank_rows, _rref_rows, kernel_basis, rank


@dataclass(frozen=True)
class GradedSubspace:
    """A basis of a linear subspace of R_j (dual polynomials of degree j)."""

    n: int
    degree: int
    basis: tuple  # tuple of RPoly, linearly independent

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class HilbertSequence:
    """The sequence (h_0, ..., h_d); also used for the cap sequences T."""

    entries: tuple

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_symmetric(self) -> bool:
        return self.entries == tuple(reversed(self.entries))


def _require_nonzero(f: Form):
    if f.is_zero:
        raise ValueError("apolar ideal undefined for 0")


def apolar_slice(f: Form, j: int) -> GradedSubspace:
    """Basis of I_j = {phi in R_j : phi o f = 0}.

    Computed as the kernel of the contraction map R_j -> S_{d-j}, i.e. of
    the catalecticant with columns indexed by degree j.  For j > d the
    slice is all of R_j and the full monomial basis is returned.
    """
    _require_nonzero(f)
    if j < 0:
        raise ValueError("negative degree")
    if j > f.d:
        basis = tuple(RPoly.monomial(f.n, v) for v in enumerate_monomials(f.n, j))
        return GradedSubspace(n=f.n, degree=j, basis=basis)
    vectors = kernel_basis(_cat_body(f, f.d - j))
    basis = tuple(RPoly.from_vector(f.n, j, v) for v in vectors)
    return GradedSubspace(n=f.n, degree=j, basis=basis)


def hilbert_sequence(f: Form) -> HilbertSequence:
    """H(A_f) = (1, h_1, ..., h_{d-1}, 1) with h_i = rk Cat_f(i, d-i)."""
    _require_nonzero(f)
    if f.d < 1:
        raise ValueError("Hilbert sequence needs degree >= 1")
    entries = [1]
    entries.extend(rank(_cat_body(f, i)) for i in range(1, f.d))
    entries.append(1)
    seq = HilbertSequence(tuple(entries))
    if not seq.is_symmetric:
        raise AssertionError(f"Hilbert sequence {seq.entries} is not symmetric")
    return seq


def _product_vectors(f: Form, i: int):
    """Coefficient vectors of all products I_i * I_{d-i} in R_d."""
    left = apolar_slice(f, i)
    right = left if 2 * i == f.d else apolar_slice(f, f.d - i)
    if not left.basis or not right.basis:
        return []
    vectors = []
    if left is right:
        # products commute; each unordered pair once
        for a in range(len(left.basis)):
            for b in range(a, len(right.basis)):
                vectors.append(multiply_r(left.basis[a], right.basis[b]).vector())
    else:
        for phi in left.basis:
            for psi in right.basis:
                vectors.append(multiply_r(phi, psi).vector())
    return vectors


def product_slice(f: Form, i: int) -> GradedSubspace:
    """Canonical basis of the span of I_i * I_{d-i} inside R_d."""
    _require_nonzero(f)
    if not 1 <= i <= f.d - 1:
        raise ValueError(f"slice index i={i} outside 1..{f.d - 1}")
    vectors = _product_vectors(f, i)
    if not vectors:
        return GradedSubspace(n=f.n, degree=f.d, basis=())
    _, reduced = _rref_rows(vectors)
    basis = tuple(RPoly.from_vector(f.n, f.d, v) for v in reduced)
    return GradedSubspace(n=f.n, degree=f.d, basis=basis)


def tangent_dim_vr(f: Form, i: int, r: int) -> int:
    """dim S_d - dim(I_i * I_{d-i}), valid on the exact-rank-r stratum.

    Raises unless rk Cat_f(i, d-i) equals r exactly; the identity with the
    tangent space of the rank locus holds only there.
    """
    _require_nonzero(f)
    actual = rank(_cat_body(f, i))
    if actual != r:
        raise ValueError(
            "tangent space formula applied off its exact-rank stratum: "
            f"rk Cat(i={i}) is {actual}, expected {r}"
        )
    return dim_forms(f.n, f.d) - product_span_dim(f, i)


def tangent_dim_gor(f: Form) -> int:
    """dim S_d minus the dimension of the degree-d part of I^2.

    (I^2)_d is the span of all I_i * I_{d-i} for 1 <= i <= d-1; the caller
    is responsible for any stratum condition on the Hilbert sequence.
    """
    _require_nonzero(f)
    span = EchelonSpan(dim_forms(f.n, f.d))
    for i in range(1, f.d):
        for vec in _product_vectors(f, i):
            span.insert(vec)
    return dim_forms(f.n, f.d) - span.rank


def product_span_dim(f: Form, i: int) -> int:
    """dim of the span of I_i * I_{d-i}, without materializing a basis."""
    _require_nonzero(f)
    vectors = _product_vectors(f, i)
    if not vectors:
        return 0
    return _rank_rows(vectors)
