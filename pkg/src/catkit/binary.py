"""Binary forms: minimal apolar degree, root classification, decompositions.

For n = 2 everything is governed by the kernel of a Hankel matrix.  The
smallest s with a nonzero apolar slice I_s gives the minimal apolar
generator phi (unique up to scale while 2s <= d+1).  If phi splits into
distinct rational linear factors, f is an exact sum of s d-th powers of
rational linear forms; a repeated rational factor of multiplicity m trades
the power for a block G * L^(d-m+1) with deg G = m-1 (the generalized
additive decomposition).  When phi does not split over the rationals the
square-free test (gcd with the derivative, plus the y1-degree drop at
infinity) still classifies the orbit exactly, and the apolar form itself is
returned as a verifiable certificate.

No algebraic-number arithmetic anywhere: roots are found by the rational
root theorem on the primitive integral form of phi (divisor scan on the
leading and trailing coefficients, exact deflation), so decompositions are
emitted only over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, isqrt
from typing import Optional

from .apolarity import apolar_slice
from .forms import (
    Form,
    RPoly,
    contract,
    convert_basis,
    convolve,
    enumerate_monomials,
    multi_factorial,
)
from .linalg import Matrix, solve

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Decomposition:
    """A verified additive decomposition (or certificate) of a form.

    ``components`` holds (G, L, e) triples: G a bivariate coefficient
    polynomial in the reduced variables, L the pair of rational
    coefficients of a linear form, e the power it is raised to, so that
    f = sum G_k * L_k^{e_k}.  For kind "waring" every G is a constant and
    every e equals d.  ``apolar_form`` is the minimal apolar generator in
    the variables of the source form; for kind "certificate" it is the
    whole content of the result.  ``embedding`` maps reduced 2-variable
    linear data back to n variables (n x 2 matrix) when the decomposition
    was produced from a form with two essential variables.
    """

    kind: str  # "waring" | "gad" | "certificate"
    n: int
    d: int
    components: tuple
    apolar_form: Optional[RPoly]
    embedding: Optional[Matrix] = None
    classification: Optional[str] = None  # certificates: "squarefree" | "repeated"


def _require_binary(f: Form):
    if f.n != 2:
        raise ValueError("binary operations require exactly 2 variables")
    if f.is_zero:
        raise ValueError("apolar ideal undefined for 0")


def min_apolar_degree(f: Form) -> int:
    """Least s >= 1 with I_s != 0; at most d for a nonzero binary form."""
    _require_binary(f)
    for s in range(1, f.d + 1):
        if apolar_slice(f, s).dim >= 1:
            return s
    raise AssertionError("nonzero binary form with trivial apolar ideal")


def _primitive_ints(values):
    """Scale rationals to coprime integers, first nonzero entry positive."""
    den = 1
    for v in values:
        den = den // gcd(den, v.denominator) * v.denominator
    ints = [int(v * den) for v in values]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def apolar_generator(f: Form) -> RPoly:
    """The minimal apolar form, primitive integral, positive leading term.

    Only defined while 2s <= d+1, where the degree-s slice is a line.
    """
    _require_binary(f)
    s = min_apolar_degree(f)
    if 2 * s > f.d + 1:
        raise ValueError(
            f"ambiguous stratum: the degree-{s} apolar slice of a degree-{f.d} "
            "form is not one-dimensional"
        )
    slc = apolar_slice(f, s)
    if slc.dim != 1:
        raise AssertionError(f"expected a 1-dimensional slice, got {slc.dim}")
    vec = slc.basis[0].vector()
    return RPoly.from_vector(2, s, _primitive_ints(list(vec)))


def _dense_by_y1(phi: RPoly):
    """Coefficient list a[j] of y1^j y2^(s-j), j = 0..s."""
    s = phi.degree
    out = [_ZERO] * (s + 1)
    for (j, _), c in phi.coeffs.items():
        out[j] = c
    return out


def _poly_degree(coeffs) -> int:
    for j in range(len(coeffs) - 1, -1, -1):
        if coeffs[j]:
            return j
    return -1


def _poly_derivative(coeffs):
    return [j * coeffs[j] for j in range(1, len(coeffs))]


def _poly_mod(a, b):
    """Remainder of a by b over the rationals (b nonzero)."""
    a = list(a)
    db = _poly_degree(b)
    lead = b[db]
    while _poly_degree(a) >= db:
        da = _poly_degree(a)
        factor = a[da] / lead
        for k in range(db + 1):
            a[da - db + k] -= factor * b[k]
        a = a[:da]  # the leading term cancelled exactly
        if not a:
            break
    return a


def _poly_gcd_is_constant(a, b) -> bool:
    """True iff gcd(a, b) has degree 0 (a, b not both zero)."""
    a, b = list(a), list(b)
    while _poly_degree(b) >= 0:
        a, b = b, _poly_mod(a, b)
    return _poly_degree(a) == 0


def squarefree_classify(phi: RPoly) -> str:
    """"squarefree" or "repeated" for a nonzero binary form.

    Square-free iff the dehomogenization and its derivative are coprime
    and the root at infinity (the y1-degree drop) has multiplicity <= 1.
    """
    if phi.n != 2:
        raise ValueError("classification requires a binary form")
    if phi.is_zero:
        raise ValueError("cannot classify the zero form")
    s = phi.degree
    if s == 0:
        return "squarefree"
    dense = _dense_by_y1(phi)
    deg = _poly_degree(dense)
    if s - deg >= 2:
        return "repeated"
    p = dense[: deg + 1]
    if deg == 0:
        return "squarefree"  # pure power of y2 handled by the infinity test
    if _poly_gcd_is_constant(p, _poly_derivative(p)):
        return "squarefree"
    return "repeated"


def _divisors(m: int):
    m = abs(m)
    small, large = [], []
    k = 1
    while k <= isqrt(m):
        if m % k == 0:
            small.append(k)
            if k != m // k:
                large.append(m // k)
        k += 1
    return small + large[::-1]


def _deflate(coeffs, alpha: int, beta: int):
    """Divide by (beta*t - alpha) exactly; None if not a factor.

    ``coeffs`` are integers, gcd(alpha, beta) = 1, beta > 0.
    """
    deg = len(coeffs) - 1
    if deg < 1:
        return None
    out = [Fraction(0)] * deg
    rem = Fraction(0)
    # synthetic division: p(t) = (beta t - alpha) q(t) + rem
    carry = Fraction(coeffs[deg])
    for j in range(deg - 1, -1, -1):
        out[j] = carry / beta
        carry = coeffs[j] + out[j] * alpha
    if carry:
        return None
    if any(c.denominator != 1 for c in out):
        # a primitive factor of a primitive polynomial divides integrally
        return None
    return [int(c) for c in out]


def projective_roots(phi: RPoly):
    """Rational projective roots of a binary form, with multiplicities.

    Returns (roots, complete): ``roots`` is a list of ((alpha, beta), m)
    with coprime integers, beta >= 0, describing roots [alpha : beta] of
    phi; ``complete`` is True iff the multiplicities sum to deg(phi), i.e.
    phi splits into rational linear factors.
    """
    if phi.n != 2 or phi.is_zero:
        raise ValueError("need a nonzero binary form")
    s = phi.degree
    dense = _dense_by_y1(phi)
    deg = _poly_degree(dense)
    roots = []
    if s - deg > 0:
        roots.append(((1, 0), s - deg))
    work = _primitive_ints(dense[: deg + 1]) if deg >= 0 else []
    low = 0
    while low < len(work) and work[low] == 0:
        low += 1
    if low:
        roots.append(((0, 1), low))
        work = work[low:]
    # rational root scan on the remaining primitive integer polynomial
    while len(work) > 1:
        a0, alead = work[0], work[-1]
        found = None
        for p in _divisors(a0):
            for q in _divisors(alead):
                if gcd(p, q) != 1:
                    continue
                for alpha in (p, -p):
                    # p(alpha/q) = 0 <=> (q t - alpha) | p
                    quotient = _deflate(work, alpha, q)
                    if quotient is not None:
                        found = (alpha, q, quotient)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            break
        alpha, beta, quotient = found
        mult = 1
        while True:
            deeper = _deflate(quotient, alpha, beta)
            if deeper is None:
                break
            quotient = deeper
            mult += 1
        roots.append(((alpha, beta), mult))
        work = quotient
    complete = sum(m for _, m in roots) == s
    return roots, complete


def _power_dict_2(alpha: Fraction, beta: Fraction, e: int):
    """Monomial coefficients of (alpha*x1 + beta*x2)^e in 2 variables."""
    out = {}
    for k in range(e + 1):
        c = comb(e, k) * alpha**k * beta ** (e - k)
        if c:
            out[(k, e - k)] = c
    return out


def _block_basis_forms(root, mult: int, d: int):
    """Divided coefficient columns of x1^t x2^(m-1-t) * L^(d-m+1)."""
    alpha, beta = Fraction(root[0]), Fraction(root[1])
    e = d - mult + 1
    power = _power_dict_2(alpha, beta, e)
    columns = []
    for t in range(mult):
        mono = {(t, mult - 1 - t): Fraction(1)}
        prod = convolve(mono, power)
        form = convert_basis(2, d, prod, "monomial")
        columns.append(form)
    return columns


def waring_decompose(f: Form) -> Decomposition:
    """Decompose a binary form over the rationals, exactly.

    Square-free rational apolar generator: a Waring decomposition with s
    distinct linear forms.  Rational repeated roots: a generalized additive
    decomposition with blocks G_k * L_k^(d - m_k + 1).  Anything
    irrational: a certificate carrying the apolar form.  Coefficients are
    found by one exact linear solve against the divided coefficients of f.
    """
    _require_binary(f)
    phi = apolar_generator(f)  # also enforces the unique-generator stratum
    roots, complete = projective_roots(phi)
    if not complete:
        return Decomposition(
            kind="certificate",
            n=2,
            d=f.d,
            components=(),
            apolar_form=phi,
            classification=squarefree_classify(phi),
        )
    basis = enumerate_monomials(2, f.d)
    target = [f.coefficient(w) for w in basis]
    columns = []
    meta = []  # (G-monomial exponent pair, root, e) per column
    for root, mult in roots:
        e = f.d - mult + 1
        for t, col_form in enumerate(_block_basis_forms(root, mult, f.d)):
            columns.append([col_form.coefficient(w) for w in basis])
            meta.append(((t, mult - 1 - t), root, e))
    system = Matrix.from_columns(columns)
    solution = solve(system, target)
    if solution is None:
        raise AssertionError(
            "apolar block system inconsistent; this is an implementation bug"
        )
    components = []
    pos = 0
    for root, mult in roots:
        e = f.d - mult + 1
        g_coeffs = {}
        for _ in range(mult):
            exps, _, _ = meta[pos]
            if solution[pos]:
                g_coeffs[exps] = solution[pos]
            pos += 1
        g_poly = RPoly(2, mult - 1, g_coeffs)
        components.append((g_poly, (Fraction(root[0]), Fraction(root[1])), e))
    kind = "waring" if all(m == 1 for _, m in roots) else "gad"
    return Decomposition(
        kind=kind,
        n=2,
        d=f.d,
        components=tuple(components),
        apolar_form=phi,
    )


def _linear_power_dict(vec, e: int, n: int):
    """Monomial coefficients of (sum vec[i] x_i)^e in n variables."""
    out = {}
    fe = factorial(e)
    for w in enumerate_monomials(n, e):
        c = Fraction(fe, multi_factorial(w))
        ok = True
        for i, exp in enumerate(w):
            if exp:
                if not vec[i]:
                    ok = False
                    break
                c *= vec[i] ** exp
        if ok and c:
            out[w] = c
    return out


def _expand_component(g_poly: RPoly, lvec, e: int, n: int):
    """Monomial coefficients of G(z1, z2) * L^e mapped into n variables.

    ``lvec`` is the n-variable coefficient vector of L.  For n = 2 the
    reduced variables are the ambient ones (z_t = x_t).
    """
    power = _linear_power_dict(lvec, e, n) if e else {(0,) * n: Fraction(1)}
    if n == 2:
        g_dict = dict(g_poly.coeffs)
        return convolve(g_dict, power) if g_dict else {}
    raise ValueError("embedded expansion must go through the n-variable path")


def _expand_component_embedded(g_poly: RPoly, root, e: int, emb: Matrix):
    n = emb.rows
    z1 = [emb[i, 0] for i in range(n)]
    z2 = [emb[i, 1] for i in range(n)]
    lvec = [root[0] * z1[i] + root[1] * z2[i] for i in range(n)]
    power = _linear_power_dict(lvec, e, n) if e else {(0,) * n: Fraction(1)}
    total = {}
    for (t, u), c in g_poly.coeffs.items():
        piece = power
        if t:
            piece = convolve(piece, _linear_power_dict(z1, t, n))
        if u:
            piece = convolve(piece, _linear_power_dict(z2, u, n))
        for w, v in piece.items():
            total[w] = total.get(w, _ZERO) + c * v
    return {w: v for w, v in total.items() if v}


def verify_decomposition(dec: Decomposition, f: Form) -> bool:
    """Re-expand the decomposition exactly and compare coefficient maps.

    For kind "certificate" this checks only that the apolar form
    annihilates f.
    """
    if (dec.n, dec.d) != (f.n, f.d):
        raise ValueError("decomposition and form live in different spaces")
    if dec.kind == "certificate":
        if dec.apolar_form is None:
            return False
        return contract(dec.apolar_form, f).is_zero
    total = {}
    for g_poly, lpair, e in dec.components:
        if dec.embedding is None:
            piece = _expand_component(g_poly, [lpair[0], lpair[1]], e, f.n)
        else:
            piece = _expand_component_embedded(g_poly, lpair, e, dec.embedding)
        for w, v in piece.items():
            total[w] = total.get(w, _ZERO) + v
    return convert_basis(f.n, f.d, total, "monomial") == f
