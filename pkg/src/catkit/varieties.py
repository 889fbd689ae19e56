"""Membership, classification, and dimension bookkeeping for rank loci.

Three nested families of forms are decided here through catalecticant
ranks alone:

* the forms expressible in r variables after a linear change of
  coordinates (equivalently rk Cat_f(1, d-1) <= r),
* the closure of sums of two d-th powers (both rk Cat_f(1, d-1) <= 2 and
  rk Cat_f(2, d-2) <= 2), whose points are 0, L^d, L1^d + L2^d, or
  L1 * L2^(d-1),
* the forms whose Hilbert sequence is capped by the two-variable sequence
  T_{2,s} (rk Cat_f(1, d-1) <= 2 and rk Cat_f(s, d-s) <= s).

Alongside the predicates live the exact dimension formulas, the
Eagon-Northcott term-rank combinatorics for the resolutions of these loci,
and a Jacobian-based smooth/singular test against the expected dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from . import binary
from .apolarity import HilbertSequence
from .catalecticant import (
    GeneratorSet,
    _cat_body,
    emit_minors,
    jacobian_rank,
    merge_generator_sets,
)
from .forms import Form, RPoly, dim_forms, embed, enumerate_monomials
from .linalg import EchelonSpan, Matrix, inverse, kernel_basis, rank


def first_cat_rank(f: Form) -> int:
    """rk Cat_f(1, d-1): the number of essential variables of f."""
    return rank(_cat_body(f, min(1, f.d)))


def member_vr(f: Form, r: int) -> bool:
    """True iff rk Cat_f(1, d-1) <= r (the rank-r locus)."""
    if r < 1:
        raise ValueError("rank bound must be at least 1")
    if f.is_zero:
        return True
    return first_cat_rank(f) <= r


def essential_vars(f: Form):
    """Reduce f to its essential variables.

    Returns (r, M, g) with r = rk Cat_f(1, d-1), M an invertible n x n
    change of coordinates whose trailing columns span the kernel of
    Cat_f(d-1, 1), and g the form f(M x') written in the first r variables
    only (returned as a form in r variables).  Substituting g back through
    the inverse of M recovers f exactly.
    """
    if f.is_zero:
        raise ValueError("apolar ideal undefined for 0")
    n, d = f.n, f.d
    kernel = kernel_basis(_cat_body(f, d - 1))
    r = n - len(kernel)
    span = EchelonSpan(n)
    for vec in kernel:
        span.insert(vec)
    complement = []
    for i in range(n):
        if len(complement) == r:
            break
        e = [0] * n
        e[i] = 1
        if span.insert(e):
            complement.append(i)
    columns = []
    for i in complement:
        e = [0] * n
        e[i] = 1
        columns.append(e)
    columns.extend(list(v) for v in kernel)
    m = Matrix.from_columns(columns)
    coeffs = {}
    for w in enumerate_monomials(r, d):
        key = [0] * n
        for t, e in enumerate(w):
            key[complement[t]] = e
        c = f.coeffs.get(tuple(key))
        if c:
            coeffs[w] = c
    return r, m, Form(r, d, coeffs)


def member_ps2(f: Form) -> bool:
    """True iff both rk Cat_f(1, d-1) <= 2 and rk Cat_f(2, d-2) <= 2.

    For d = 2 this degenerates to the rank-2 condition on the symmetric
    matrix Cat_f(1, 1); d < 2 is rejected.
    """
    if f.d < 2:
        raise ValueError("membership needs degree >= 2")
    if f.is_zero:
        return True
    if f.d == 2:
        return member_vr(f, 2)
    return first_cat_rank(f) <= 2 and rank(_cat_body(f, 2)) <= 2


@dataclass(frozen=True)
class Ps2Class:
    """Classification of a point of the rank-2 chordal locus.

    ``witnesses`` holds primitive-integer coefficient vectors of the
    linear forms behind the tag when they exist over the rationals: (L,)
    for a pure power, (L1, L2) for a sum of two powers or a tangent-line
    form f = L1 * L2^(d-1).  The scalar weights are recoverable through
    the binary decomposition pipeline.
    """

    tag: str  # "zero" | "power" | "sum_of_two" | "tangent_line"
    witnesses: Optional[tuple] = None


def _primitive_vector(vec):
    return tuple(binary._primitive_ints([x for x in vec]))


def _embedding_matrix(m: Matrix) -> Matrix:
    """n x 2 matrix sending reduced 2-variable linear data back to x."""
    minv = inverse(m)
    return Matrix.from_columns([list(minv.row(0)), list(minv.row(1))])


def _map_linear(emb: Matrix, pair):
    return tuple(emb[i, 0] * pair[0] + emb[i, 1] * pair[1] for i in range(emb.rows))


def decompose_form(f: Form) -> binary.Decomposition:
    """Binary decomposition of any form with at most two essential variables.

    For n = 2 this is the direct binary pipeline; otherwise f is reduced
    through its essential variables, decomposed there, and returned with
    the n x 2 embedding matrix and the apolar form mapped back to the
    ambient dual variables.
    """
    if f.n == 2:
        return binary.waring_decompose(f)
    r, m, g = essential_vars(f)
    if r > 2:
        raise ValueError(f"form has {r} essential variables; need at most 2")
    g2 = embed(g, 2)
    dec = binary.waring_decompose(g2)
    emb = _embedding_matrix(m)
    apolar_nvar = None
    if dec.apolar_form is not None:
        u1 = RPoly.linear(list(m.column(0)))
        u2 = RPoly.linear(list(m.column(1)))
        acc = None
        for (a, b), c in dec.apolar_form.coeffs.items():
            term = RPoly(f.n, 0, {(0,) * f.n: c})
            for _ in range(a):
                term = term * u1
            for _ in range(b):
                term = term * u2
            acc = term if acc is None else acc + term
        apolar_nvar = acc
    return binary.Decomposition(
        kind=dec.kind,
        n=f.n,
        d=f.d,
        components=dec.components,
        apolar_form=apolar_nvar,
        embedding=emb,
        classification=dec.classification,
    )


def classify_ps2(f: Form) -> Ps2Class:
    """Sort a rank-<=2 form into zero / power / sum_of_two / tangent_line.

    Requires member_ps2(f); rational witnesses are attached whenever the
    degree-2 apolar generator of the reduced binary form splits over the
    rationals.
    """
    if f.is_zero:
        return Ps2Class(tag="zero")
    if not member_ps2(f):
        raise ValueError("form is not in the rank-2 chordal locus")
    r1 = first_cat_rank(f)
    if r1 == 1:
        dec = decompose_form(f)
        (g_poly, pair, _), = dec.components
        lvec = pair if dec.embedding is None else _map_linear(dec.embedding, pair)
        return Ps2Class(tag="power", witnesses=(_primitive_vector(lvec),))
    if f.d < 3:
        raise ValueError("rank-2 classification needs degree >= 3")
    dec = decompose_form(f)
    if dec.kind == "certificate":
        tag = "sum_of_two" if dec.classification == "squarefree" else "tangent_line"
        return Ps2Class(tag=tag)

    def to_ambient(pair):
        if dec.embedding is None:
            return pair
        return _map_linear(dec.embedding, pair)

    if dec.kind == "waring":
        wits = tuple(
            _primitive_vector(to_ambient(pair)) for _, pair, _ in dec.components
        )
        return Ps2Class(tag="sum_of_two", witnesses=wits)
    # gad with s = 2: a single block G * L^(d-1) with G linear
    (g_poly, pair, _), = dec.components
    ga = g_poly.coefficient((1, 0))
    gb = g_poly.coefficient((0, 1))
    l2 = to_ambient(pair)
    l1 = to_ambient((ga, gb))
    return Ps2Class(
        tag="tangent_line",
        witnesses=(_primitive_vector(l1), _primitive_vector(l2)),
    )


def member_gor_leq(f: Form, s: int) -> bool:
    """True iff rk Cat_f(1, d-1) <= 2 and rk Cat_f(s, d-s) <= s."""
    d = f.d
    if s < 2 or 2 * s > d + 2:
        raise ValueError(f"need 2 <= s with 2s <= d+2, got s={s}, d={d}")
    if f.is_zero:
        return True
    if first_cat_rank(f) > 2:
        return False
    return rank(_cat_body(f, s)) <= s


def t2s_sequence(d: int, s: int) -> HilbertSequence:
    """The sequence (1, 2, ..., s, s, ..., s, ..., 2, 1) of length d+1."""
    if s < 2 or 2 * s > d + 2:
        raise ValueError(f"need 2 <= s with 2s <= d+2, got s={s}, d={d}")
    return HilbertSequence(tuple(min(i + 1, s, d - i + 1) for i in range(d + 1)))


def hilbert_cap(r: int, d: int, n: int) -> HilbertSequence:
    """Entrywise cap min(r, dim R_i, dim R_{d-i}) on Hilbert sequences."""
    return HilbertSequence(
        tuple(min(r, dim_forms(n, i), dim_forms(n, d - i)) for i in range(d + 1))
    )


def dim_vr(r: int, d: int, n: int) -> int:
    """Dimension of the rank-r locus, C(r+d-1, d) + r(n-r), for r <= n-1."""
    return comb(r + d - 1, d) + r * (n - r)


def dim_ps2(n: int) -> int:
    """Dimension of the cone of sums of two d-th powers: 2n."""
    return 2 * n


def dim_gor_leq(s: int, d: int, n: int) -> int:
    """Dimension of the locus of forms with Hilbert sequence capped by T_{2,s}.

    Derived from its birational parameter space: a rank-2 subspace of the
    linear forms (2(n-2) parameters) plus the binary degree-d forms
    annihilated there by some degree-s dual form (d+1 minus the
    determinantal corank-one codimension max(0, d-2s+1)).
    """
    return 2 * (n - 2) + (d + 1) - max(0, d - 2 * s + 1)


def en_term_rank(d: int, s: int, j: int) -> int:
    """Rank C(a, j) * C(j-1, e-1) of the j-th resolution term.

    Here a = d-s+1 and e = s+1 are the ranks of the two bundles whose
    corank-one locus the Eagon-Northcott complex resolves; valid for
    e <= j <= a.
    """
    a = d - s + 1
    e = s + 1
    if not e <= j <= a:
        raise ValueError(f"term index j={j} outside {e}..{a}")
    return comb(a, j) * comb(j - 1, e - 1)


def _admissible_minors(n: int, d: int, i: int, size: int) -> Optional[GeneratorSet]:
    if not 1 <= i <= d - 1:
        return None
    if min(dim_forms(n, i), dim_forms(n, d - i)) < size:
        return None
    return emit_minors(n, d, i, size)


def family_generators(n: int, d: int, family: str, r=None, s=None) -> GeneratorSet:
    """The defining minor set of a family, for Jacobian computations.

    vr(r): minors of size r+1 of Cat(1, d-1).  ps2: size-3 minors of
    Cat(1, d-1) and Cat(2, d-2).  gor(s): size-3 minors of Cat(1, d-1)
    plus size-(s+1) minors of Cat(s, d-s).  Matrices too small to carry a
    minor of the requested size are skipped (their rank condition holds
    automatically).
    """
    if family == "vr":
        if r is None or not 1 <= r <= n - 1:
            raise ValueError("vr family needs 1 <= r <= n-1")
        gens = _admissible_minors(n, d, 1, r + 1)
        if gens is None:
            raise ValueError("rank condition is vacuous at this size")
        return gens
    if family == "ps2":
        parts = [
            g
            for g in (
                _admissible_minors(n, d, 1, 3),
                _admissible_minors(n, d, 2, 3),
            )
            if g is not None
        ]
        if not parts:
            raise ValueError("rank conditions are vacuous at this size")
        return merge_generator_sets(*parts)
    if family == "gor":
        if s is None or s < 2 or 2 * s > d + 2:
            raise ValueError("gor family needs 2 <= s with 2s <= d+2")
        parts = [
            g
            for g in (
                _admissible_minors(n, d, 1, 3),
                _admissible_minors(n, d, s, s + 1),
            )
            if g is not None
        ]
        if not parts:
            raise ValueError("rank conditions are vacuous at this size")
        return merge_generator_sets(*parts)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class SingularReport:
    """Scheme tangent dimension vs expected variety dimension at a point."""

    family: str
    tangent_dim: int
    variety_dim: int
    singular: bool
    r: Optional[int] = None
    s: Optional[int] = None


def singular_test(f: Form, family: str, r=None, s=None) -> SingularReport:
    """Jacobian tangent dimension against the family's dimension formula.

    The scheme tangent space at f is the kernel of the Jacobian of the
    family's defining minors; the point is flagged singular when its
    dimension exceeds the variety dimension.  Membership of f in the
    family is enforced first.
    """
    n, d = f.n, f.d
    if family == "vr":
        if not member_vr(f, r):
            raise ValueError("form is not in the requested rank locus")
        expected = dim_vr(r, d, n)
    elif family == "ps2":
        if not member_ps2(f):
            raise ValueError("form is not in the rank-2 chordal locus")
        expected = dim_ps2(n)
    elif family == "gor":
        if not member_gor_leq(f, s):
            raise ValueError("form violates the capped-Hilbert rank conditions")
        expected = dim_gor_leq(s, d, n)
    else:
        raise ValueError(f"unknown family {family!r}")
    gens = family_generators(n, d, family, r=r, s=s)
    tangent = dim_forms(n, d) - jacobian_rank(gens, f)
    return SingularReport(
        family=family,
        tangent_dim=tangent,
        variety_dim=expected,
        singular=tangent > expected,
        r=r,
        s=s,
    )
