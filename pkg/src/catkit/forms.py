"""Homogeneous forms, dual polynomials, and the differentiation action.

Two polynomial rings live here.  ``Form`` holds a degree-d homogeneous
polynomial f in variables x_1..x_n with exact rational coefficients stored
in the *divided-power* basis X^(U) = x^U / U!.  ``RPoly`` holds a
homogeneous polynomial phi in the dual variables y_1..y_n in the ordinary
monomial basis Y^V = y^V.  The dual ring acts on forms by differentiation,

    phi o f = phi(d/dx_1, ..., d/dx_n) f,

and in divided coordinates this action is the coefficient-free shift rule
Y^V o X^(U) = X^(U-V) (zero unless U >= V componentwise).  That is why
divided powers are the canonical internal basis: contraction never touches
a factorial.  The ordinary monomial basis is supported only at the I/O
boundary (``convert_basis``).

Multi-indices are plain tuples of naturals.  All enumeration is in graded
lexicographic *descending* order, fixed once here; every matrix in the
package inherits its row/column indexing from this order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .linalg import Matrix

_ZERO = Fraction(0)


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def dim_forms(n: int, j: int) -> int:
    """Number of degree-j monomials in n variables: C(n-1+j, j)."""
    return comb(n - 1 + j, j)


@lru_cache(maxsize=None)
def enumerate_monomials(n: int, j: int):
    """All degree-j multi-indices of length n, lex descending.

    The first entry is (j, 0, ..., 0) and the last is (0, ..., 0, j).
    """
    if n < 1:
        raise ValueError("need at least one variable")
    if j < 0:
        raise ValueError("negative degree")
    if n == 1:
        return ((j,),)
    out = []
    for first in range(j, -1, -1):
        for rest in enumerate_monomials(n - 1, j - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, j: int):
    """Map multi-index -> position in enumerate_monomials(n, j)."""
    return {w: k for k, w in enumerate(enumerate_monomials(n, j))}


def multi_factorial(w) -> int:
    out = 1
    for e in w:
        out *= factorial(e)
    return out


def _clean(coeffs, n: int, degree: int):
    out = {}
    for w, c in coeffs.items():
        w = tuple(w)
        if len(w) != n:
            raise ValueError(f"multi-index {w} has length {len(w)}, expected {n}")
        if any(e < 0 for e in w) or sum(w) != degree:
            raise ValueError(f"multi-index {w} is not of degree {degree}")
        c = _q(c)
        if c:
            out[w] = c
    return out


class Form:
    """Homogeneous degree-d form in n variables, divided-power coefficients.

    ``coeffs`` maps degree-d multi-indices U to the coefficient a_U of
    X^(U); zero coefficients are never stored and the zero form is the
    empty map.  Degree 0 is admitted (full contractions produce scalars);
    operations that need d >= 1 enforce it themselves.
    """

    __slots__ = ("n", "d", "coeffs")

    def __init__(self, n: int, d: int, coeffs):
        if n < 1:
            raise ValueError("need at least one variable")
        if d < 0:
            raise ValueError("negative degree")
        self.n = n
        self.d = d
        self.coeffs = _clean(coeffs, n, d)

    @classmethod
    def zero(cls, n: int, d: int) -> "Form":
        return cls(n, d, {})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, w) -> Fraction:
        return self.coeffs.get(tuple(w), _ZERO)

    def monomial_coeffs(self):
        """Coefficients in the ordinary monomial basis x^U (divides by U!)."""
        return {w: c / multi_factorial(w) for w, c in self.coeffs.items()}

    def __add__(self, other: "Form") -> "Form":
        self._check_like(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, _ZERO) + c
        return Form(self.n, self.d, out)

    def __sub__(self, other: "Form") -> "Form":
        self._check_like(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, _ZERO) - c
        return Form(self.n, self.d, out)

    def __neg__(self) -> "Form":
        return Form(self.n, self.d, {w: -c for w, c in self.coeffs.items()})

    def scale(self, k) -> "Form":
        k = _q(k)
        return Form(self.n, self.d, {w: k * c for w, c in self.coeffs.items()})

    def _check_like(self, other):
        if not isinstance(other, Form) or (self.n, self.d) != (other.n, other.d):
            raise ValueError("forms live in different spaces")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Form)
            and (self.n, self.d) == (other.n, other.d)
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        items = sorted(self.coeffs.items(), reverse=True)
        body = " + ".join(f"{c}*X{w}" for w, c in items) or "0"
        return f"Form(n={self.n}, d={self.d}: {body})"


def convert_basis(n: int, d: int, coeffs, source: str) -> Form:
    """Build a Form from coefficients in the named basis.

    source="divided": coefficients are the a_U directly.
    source="monomial": ordinary monomial coefficients; a_U = c_U * U!.
    """
    if source == "divided":
        return Form(n, d, coeffs)
    if source == "monomial":
        return Form(
            n, d, {tuple(w): _q(c) * multi_factorial(w) for w, c in coeffs.items()}
        )
    raise ValueError(f"unknown basis {source!r}")


class RPoly:
    """Homogeneous degree-j polynomial in the dual variables y_1..y_n."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs):
        if n < 1:
            raise ValueError("need at least one variable")
        if degree < 0:
            raise ValueError("negative degree")
        self.n = n
        self.degree = degree
        self.coeffs = _clean(coeffs, n, degree)

    @classmethod
    def monomial(cls, n: int, v) -> "RPoly":
        v = tuple(v)
        return cls(n, sum(v), {v: 1})

    @classmethod
    def linear(cls, coefficients) -> "RPoly":
        """sum_i c_i y_i from a coefficient vector."""
        coefficients = list(coefficients)
        n = len(coefficients)
        out = {}
        for i, c in enumerate(coefficients):
            if c:
                e = [0] * n
                e[i] = 1
                out[tuple(e)] = c
        return cls(n, 1, out)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, v) -> Fraction:
        return self.coeffs.get(tuple(v), _ZERO)

    def vector(self):
        """Coefficient vector over enumerate_monomials(n, degree)."""
        return tuple(
            self.coeffs.get(v, _ZERO) for v in enumerate_monomials(self.n, self.degree)
        )

    @classmethod
    def from_vector(cls, n: int, degree: int, vec) -> "RPoly":
        basis = enumerate_monomials(n, degree)
        return cls(n, degree, {v: c for v, c in zip(basis, vec)})

    def __add__(self, other: "RPoly") -> "RPoly":
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError("polynomials live in different spaces")
        out = dict(self.coeffs)
        for v, c in other.coeffs.items():
            out[v] = out.get(v, _ZERO) + c
        return RPoly(self.n, self.degree, out)

    def __sub__(self, other: "RPoly") -> "RPoly":
        return self + other.scale(-1)

    def scale(self, k) -> "RPoly":
        k = _q(k)
        return RPoly(self.n, self.degree, {v: k * c for v, c in self.coeffs.items()})

    def __mul__(self, other: "RPoly") -> "RPoly":
        return multiply_r(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RPoly)
            and (self.n, self.degree) == (other.n, other.degree)
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        items = sorted(self.coeffs.items(), reverse=True)
        body = " + ".join(f"{c}*Y{v}" for v, c in items) or "0"
        return f"RPoly(n={self.n}, j={self.degree}: {body})"


def multiply_r(phi: RPoly, psi: RPoly) -> RPoly:
    """Exact product in the dual ring; degrees add."""
    if phi.n != psi.n:
        raise ValueError("polynomials live in different spaces")
    out = {}
    for v, c in phi.coeffs.items():
        for w, e in psi.coeffs.items():
            key = tuple(a + b for a, b in zip(v, w))
            out[key] = out.get(key, _ZERO) + c * e
    return RPoly(phi.n, phi.degree + psi.degree, out)


def contract(phi: RPoly, f: Form) -> Form:
    """The differentiation action phi o f, a form of degree d - j.

    On basis elements Y^V o X^(U) = X^(U-V) when U >= V componentwise and 0
    otherwise.  For j = d the result is a degree-0 form (the value of the
    perfect pairing).
    """
    if phi.n != f.n:
        raise ValueError("variable count mismatch")
    j = phi.degree
    if j > f.d:
        raise ValueError(f"cannot contract degree {f.d} by degree {j}")
    out = {}
    for v, c in phi.coeffs.items():
        for w, a in f.coeffs.items():
            u = tuple(e1 - e2 for e1, e2 in zip(w, v))
            if min(u) >= 0:
                out[u] = out.get(u, _ZERO) + c * a
    return Form(f.n, f.d - j, out)


def _contract_linear(vec, coeffs):
    """One differentiation step by sum_i vec[i] y_i on a coefficient dict."""
    out = {}
    for w, a in coeffs.items():
        for i, ci in enumerate(vec):
            if ci and w[i]:
                key = w[:i] + (w[i] - 1,) + w[i + 1 :]
                v = out.get(key)
                out[key] = ci * a if v is None else v + ci * a
    return {k: v for k, v in out.items() if v}


def substitute(f: Form, m: Matrix) -> Form:
    """The form f(M x') in m.cols new variables, computed exactly.

    ``m`` is read as the linear change x = M x', so it must have f.n rows.
    The divided coefficient of the result at W is (prod_j l_j^{W_j}) o f,
    where l_j = sum_i M[i,j] y_i is the dual image of the j-th new
    variable; the computation walks that product one differentiation at a
    time, which keeps everything in shrinking contraction space.
    """
    if m.rows != f.n:
        raise ValueError(f"substitution matrix needs {f.n} rows, got {m.rows}")
    nvars = m.cols
    if f.d == 0:
        return Form(nvars, 0, {(0,) * nvars: f.coeffs.get((0,) * f.n, _ZERO)})
    duals = [m.column(j) for j in range(nvars)]
    scalar_key = (0,) * f.n
    out = {}

    def rec(j, prefix, h):
        remaining = f.d - sum(prefix)
        if j == nvars - 1:
            for _ in range(remaining):
                h = _contract_linear(duals[j], h)
                if not h:
                    return
            out[prefix + (remaining,)] = h[scalar_key]
            return
        for w in range(remaining + 1):
            rec(j + 1, prefix + (w,), h)
            if w < remaining:
                h = _contract_linear(duals[j], h)
                if not h:
                    return

    rec(0, (), dict(f.coeffs))
    return Form(nvars, f.d, out)


def embed(f: Form, n: int) -> Form:
    """Reinterpret f in n >= f.n variables (new variables unused)."""
    if n < f.n:
        raise ValueError("cannot embed into fewer variables")
    pad = (0,) * (n - f.n)
    return Form(n, f.d, {w + pad: c for w, c in f.coeffs.items()})


def linear_power(coefficients, d: int) -> Form:
    """The d-th power of the linear form sum c_i x_i, as a Form.

    In divided coordinates (sum c_i x_i)^d has a_W = d! * c^W, so the
    expansion is a closed formula rather than a repeated product.
    """
    coefficients = [_q(c) for c in coefficients]
    n = len(coefficients)
    if d < 1:
        raise ValueError("power must be at least 1")
    scale = factorial(d)
    out = {}
    support = [i for i, c in enumerate(coefficients) if c]
    if not support:
        return Form.zero(n, d)
    for w in enumerate_monomials(n, d):
        prod = Fraction(scale)
        ok = True
        for i, e in enumerate(w):
            if e:
                c = coefficients[i]
                if not c:
                    ok = False
                    break
                prod *= c**e
        if ok:
            out[w] = prod
    return Form(n, d, out)


def convolve(p: dict, q: dict) -> dict:
    """Product of two monomial-coefficient dicts (plain convolution)."""
    out = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            key = tuple(a + b for a, b in zip(w1, w2))
            v = out.get(key)
            out[key] = c1 * c2 if v is None else v + c1 * c2
    return {k: v for k, v in out.items() if v}
