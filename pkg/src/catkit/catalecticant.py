"""Catalecticant matrices of forms, their symbolic minors, and Jacobians.

The i-th catalecticant of a degree-d form f in n variables is the matrix of
the differentiation map R_{d-i} -> S_i in the monomial / divided-power
bases: rows are indexed by degree-i multi-indices U, columns by degree-
(d-i) multi-indices V, and the (U, V) entry is the divided coefficient
a_{U+V}.  Replacing a_W by an indeterminate Z_W gives the generic
catalecticant; its size-r minors are sparse polynomials in the Z_W and cut
out the rank loci studied by the rest of the package.

Minor polynomials are kept fully expanded: a term is a size-r multiset of
degree-d multi-indices (the Z-symbols, with repeats merged) together with
an integer coefficient.  Expansion is only offered for r <= 4; symbolic
determinant growth is factorial and nothing here needs more.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional

from .forms import Form, dim_forms, enumerate_monomials, monomial_index
from .linalg import Matrix, _rank_rows

_ZERO = Fraction(0)

MAX_MINOR_SIZE = 4


def _madd(u, v):
    return tuple(a + b for a, b in zip(u, v))


@dataclass(frozen=True)
class CatalecticantMatrix:
    """Numeric catalecticant with its row/column multi-index labels."""

    n: int
    d: int
    i: int
    row_index: tuple
    col_index: tuple
    body: Matrix


@dataclass(frozen=True)
class GenericCatalecticant:
    """Symbolic catalecticant: entry (U, V) is the symbol index U + V."""

    n: int
    d: int
    i: int
    row_index: tuple
    col_index: tuple
    entries: tuple  # tuple of rows; each entry a degree-d multi-index

    def symbol(self, r: int, c: int):
        return self.entries[r][c]


def _cat_body(f: Form, i: int) -> Matrix:
    """Matrix of the contraction map R_{d-i} -> S_i for 0 <= i <= d."""
    rows = enumerate_monomials(f.n, i)
    cols = enumerate_monomials(f.n, f.d - i)
    get = f.coeffs.get
    return Matrix([[get(_madd(u, v), _ZERO) for v in cols] for u in rows])


def build_cat(f: Form, i: int) -> CatalecticantMatrix:
    """The i-th catalecticant of f; requires 1 <= i <= d-1."""
    if not 1 <= i <= f.d - 1:
        raise ValueError(f"catalecticant index i={i} outside 1..{f.d - 1}")
    return CatalecticantMatrix(
        n=f.n,
        d=f.d,
        i=i,
        row_index=enumerate_monomials(f.n, i),
        col_index=enumerate_monomials(f.n, f.d - i),
        body=_cat_body(f, i),
    )


def build_generic_cat(n: int, d: int, i: int) -> GenericCatalecticant:
    """Symbolic catalecticant with entry symbols Z_{U+V}."""
    if not 1 <= i <= d - 1:
        raise ValueError(f"catalecticant index i={i} outside 1..{d - 1}")
    rows = enumerate_monomials(n, i)
    cols = enumerate_monomials(n, d - i)
    return GenericCatalecticant(
        n=n,
        d=d,
        i=i,
        row_index=rows,
        col_index=cols,
        entries=tuple(tuple(_madd(u, v) for v in cols) for u in rows),
    )


@dataclass(frozen=True, eq=False)
class MinorPolynomial:
    """Expanded minor of a generic catalecticant.

    ``terms`` maps a sorted tuple of degree-d multi-indices (a degree-
    ``size`` monomial in the Z_W, repeats kept) to its rational
    coefficient.  An identically-zero minor has an empty map; it is kept in
    its generator set so indices stay stable.
    """

    n: int
    d: int
    size: int
    terms: dict
    rows: Optional[tuple] = field(default=None, compare=False)
    cols: Optional[tuple] = field(default=None, compare=False)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MinorPolynomial)
            and (self.n, self.d, self.size) == (other.n, other.d, other.size)
            and self.terms == other.terms
        )


@dataclass(frozen=True)
class GeneratorSet:
    """Deterministically ordered list of minors with their provenance."""

    n: int
    d: int
    minors: tuple
    provenance: tuple  # tuples (i, d-i, r)

    def __iter__(self):
        return iter(self.minors)

    def __len__(self):
        return len(self.minors)

    def zero_flags(self):
        return tuple(p.is_zero for p in self.minors)


def _signed_permutations(r: int):
    out = []
    for perm in permutations(range(r)):
        inversions = sum(
            1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b]
        )
        out.append((perm, -1 if inversions % 2 else 1))
    return out


_PERM_CACHE = {r: _signed_permutations(r) for r in range(1, MAX_MINOR_SIZE + 1)}


def _expand_minor(symbols, row_subset, col_subset, n, d):
    r = len(row_subset)
    terms = {}
    for perm, sign in _PERM_CACHE[r]:
        key = tuple(
            sorted(symbols[row_subset[k]][col_subset[perm[k]]] for k in range(r))
        )
        c = terms.get(key, 0) + sign
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)
    return MinorPolynomial(
        n=n,
        d=d,
        size=r,
        terms={k: Fraction(c) for k, c in terms.items()},
        rows=row_subset,
        cols=col_subset,
    )


def emit_minors(n: int, d: int, i: int, r: int) -> GeneratorSet:
    """All size-r minors of the generic catalecticant, expanded.

    Minors are ordered lexicographically by (row subset, column subset).
    Identically-zero minors (the symbolic matrix has repeated entries) are
    kept as explicit zeros so generator indices are reproducible.
    """
    gen = build_generic_cat(n, d, i)
    nrows, ncols = len(gen.row_index), len(gen.col_index)
    if r < 1 or r > min(nrows, ncols):
        raise ValueError(f"minor size {r} outside 1..{min(nrows, ncols)}")
    if r > MAX_MINOR_SIZE:
        raise ValueError(f"symbolic minors limited to size <= {MAX_MINOR_SIZE}")
    minors = []
    for row_subset in combinations(range(nrows), r):
        for col_subset in combinations(range(ncols), r):
            minors.append(_expand_minor(gen.entries, row_subset, col_subset, n, d))
    return GeneratorSet(n=n, d=d, minors=tuple(minors), provenance=((i, d - i, r),))


def merge_generator_sets(*sets: GeneratorSet) -> GeneratorSet:
    """Concatenate generator sets over the same coefficient space."""
    first = sets[0]
    if any((g.n, g.d) != (first.n, first.d) for g in sets):
        raise ValueError("generator sets live in different spaces")
    minors = tuple(p for g in sets for p in g.minors)
    provenance = tuple(pv for g in sets for pv in g.provenance)
    return GeneratorSet(n=first.n, d=first.d, minors=minors, provenance=provenance)


def evaluate_minor(p: MinorPolynomial, f: Form) -> Fraction:
    """Substitute Z_W := a_W; equals the determinant of the numeric minor."""
    if (p.n, p.d) != (f.n, f.d):
        raise ValueError("minor and form live in different spaces")
    coeffs = f.coeffs
    if all(c.denominator == 1 for c in coeffs.values()):
        vals = {w: c.numerator for w, c in coeffs.items()}
        total = 0
        for key, c in p.terms.items():
            prod = c.numerator
            for w in key:
                v = vals.get(w)
                if not v:
                    prod = 0
                    break
                prod *= v
            total += prod
        return Fraction(total)
    total = _ZERO
    for key, c in p.terms.items():
        prod = c
        for w in key:
            v = coeffs.get(w)
            if not v:
                prod = _ZERO
                break
            prod *= v
        total += prod
    return total


def differentiate_minor(p: MinorPolynomial, w) -> MinorPolynomial:
    """Formal partial derivative with respect to the symbol Z_w."""
    w = tuple(w)
    if len(w) != p.n or sum(w) != p.d:
        raise ValueError(f"{w} is not a degree-{p.d} multi-index in {p.n} variables")
    terms = {}
    for key, c in p.terms.items():
        m = key.count(w)
        if m:
            pos = key.index(w)
            new_key = key[:pos] + key[pos + 1 :]
            terms[new_key] = terms.get(new_key, _ZERO) + m * c
    terms = {k: c for k, c in terms.items() if c}
    return MinorPolynomial(n=p.n, d=p.d, size=p.size - 1, terms=terms)


def _gradient_row(p: MinorPolynomial, values, index, width, integral: bool):
    """Evaluate all first partials of p at once; None if the gradient is 0."""
    row = [0] * width if integral else [_ZERO] * width
    nonzero = False
    for key, c in p.terms.items():
        vals = [values.get(w, 0) for w in key]
        r = len(vals)
        # prefix[t] * suffix[t] = product of vals without position t
        prefix = [1] * r
        for t in range(1, r):
            prefix[t] = prefix[t - 1] * vals[t - 1]
        suffix = 1
        cc = c.numerator if integral else c
        for t in range(r - 1, -1, -1):
            contrib = cc * prefix[t] * suffix
            if contrib:
                row[index[key[t]]] += contrib
                nonzero = True
            suffix *= vals[t]
    return row if nonzero else None


def jacobian_rank(gens: GeneratorSet, f: Form) -> int:
    """Rank of the |G| x dim(S_d) matrix of all first partials at f.

    The scheme tangent dimension cut out by G at f is dim(S_d) minus this
    rank.
    """
    if (gens.n, gens.d) != (f.n, f.d):
        raise ValueError("generator set and form live in different spaces")
    index = monomial_index(f.n, f.d)
    width = dim_forms(f.n, f.d)
    integral = all(c.denominator == 1 for c in f.coeffs.values())
    if integral:
        values = {w: c.numerator for w, c in f.coeffs.items()}
    else:
        values = f.coeffs
    rows = []
    for p in gens.minors:
        row = _gradient_row(p, values, index, width, integral)
        if row is not None:
            rows.append(row)
    if not rows:
        return 0
    return _rank_rows(rows)
