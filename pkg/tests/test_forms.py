"""Forms, enumeration order, the shift rule, and exact substitution."""

from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catkit.forms import (
    Form,
    RPoly,
    contract,
    convert_basis,
    convolve,
    dim_forms,
    embed,
    enumerate_monomials,
    linear_power,
    multiply_r,
    substitute,
)
from catkit.linalg import Matrix

F = Fraction


def exhaustive_monomials(n, j):
    # independent oracle: filter the full exponent box, sort descending
    out = [w for w in product(range(j + 1), repeat=n) if sum(w) == j]
    return sorted(out, reverse=True)


def test_enumeration_binary_cubics():
    assert list(enumerate_monomials(2, 3)) == [(3, 0), (2, 1), (1, 2), (0, 3)]


def test_enumeration_linear_ternary():
    assert list(enumerate_monomials(3, 1)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_enumeration_length_is_binomial():
    assert len(enumerate_monomials(3, 2)) == 6 == comb(4, 2)


@pytest.mark.parametrize("n,j", [(1, 4), (2, 5), (3, 4), (4, 3)])
def test_enumeration_matches_exhaustive_oracle(n, j):
    assert list(enumerate_monomials(n, j)) == exhaustive_monomials(n, j)
    assert len(enumerate_monomials(n, j)) == dim_forms(n, j)


def test_enumeration_strictly_decreasing():
    for n, j in [(2, 6), (3, 5), (4, 4)]:
        mons = enumerate_monomials(n, j)
        assert all(a > b for a, b in zip(mons, mons[1:]))


def test_convert_monomial_cube():
    f = convert_basis(2, 3, {(3, 0): 1}, "monomial")
    assert f.coeffs == {(3, 0): F(6)}


def test_convert_monomial_mixed():
    f = convert_basis(2, 3, {(2, 1): 3}, "monomial")
    assert f.coeffs == {(2, 1): F(6)}


def test_convert_round_trip_random():
    coeffs = {(2, 1, 1): F(3, 7), (0, 4, 0): F(-2), (1, 1, 2): F(5)}
    f = Form(3, 4, coeffs)
    again = convert_basis(3, 4, f.monomial_coeffs(), "monomial")
    assert again == f


def test_contract_single_derivative():
    f = Form(2, 2, {(2, 0): 1})
    phi = RPoly(2, 1, {(1, 0): 1})
    assert contract(phi, f) == Form(2, 1, {(1, 0): 1})


def test_contract_full_pairing_diagonal():
    for w in enumerate_monomials(3, 4):
        f = Form(3, 4, {w: 1})
        phi = RPoly.monomial(3, w)
        assert contract(phi, f) == Form(3, 0, {(0, 0, 0): 1})


def test_contract_kills_power_sum():
    f = Form(2, 3, {(3, 0): 6, (0, 3): 6})  # x1^3 + x2^3
    phi = RPoly(2, 2, {(1, 1): 1})  # d/dx1 d/dx2
    assert contract(phi, f).is_zero


def test_contract_degree_overflow_rejected():
    with pytest.raises(ValueError):
        contract(RPoly(2, 3, {(3, 0): 1}), Form(2, 2, {(2, 0): 1}))


def test_shift_rule_exhaustive_small():
    n, d = 2, 4
    for j in range(d + 1):
        for v in enumerate_monomials(n, j):
            for u in enumerate_monomials(n, d):
                got = contract(RPoly.monomial(n, v), Form(n, d, {u: 1}))
                diff = tuple(a - b for a, b in zip(u, v))
                if min(diff) >= 0:
                    assert got == Form(n, d - j, {diff: 1})
                else:
                    assert got.is_zero


def rpolys(n, j):
    mons = list(enumerate_monomials(n, j))
    return st.lists(
        st.integers(min_value=-5, max_value=5), min_size=len(mons), max_size=len(mons)
    ).map(lambda cs: RPoly(n, j, dict(zip(mons, cs))))


def forms_strat(n, d):
    mons = list(enumerate_monomials(n, d))
    return st.lists(
        st.integers(min_value=-5, max_value=5), min_size=len(mons), max_size=len(mons)
    ).map(lambda cs: Form(n, d, dict(zip(mons, cs))))


@settings(max_examples=25, deadline=None)
@given(rpolys(2, 1), rpolys(2, 1), forms_strat(2, 3), forms_strat(2, 3))
def test_contract_bilinear(p1, p2, f1, f2):
    assert contract(p1 + p2, f1) == contract(p1, f1) + contract(p2, f1)
    assert contract(p1, f1 + f2) == contract(p1, f1) + contract(p1, f2)


def test_multiply_basic():
    y1 = RPoly(2, 1, {(1, 0): 1})
    y2 = RPoly(2, 1, {(0, 1): 1})
    assert multiply_r(y1, y2) == RPoly(2, 2, {(1, 1): 1})
    assert (y1 + y2) * (y1 - y2) == RPoly(2, 2, {(2, 0): 1, (0, 2): -1})


@settings(max_examples=25, deadline=None)
@given(rpolys(2, 2), rpolys(2, 3))
def test_multiply_matches_convolution_oracle(p, q):
    got = multiply_r(p, q)
    expect = {}
    for v, c in p.coeffs.items():
        for w, e in q.coeffs.items():
            key = tuple(a + b for a, b in zip(v, w))
            expect[key] = expect.get(key, F(0)) + c * e
    expect = {k: v for k, v in expect.items() if v}
    assert got.coeffs == expect


def naive_substitute(f, m):
    # independent oracle: monomial-basis expansion then reconversion
    nvars = m.cols
    lin = [
        {tuple(1 if t == j else 0 for t in range(nvars)): m[i, j] for j in range(nvars) if m[i, j]}
        for i in range(f.n)
    ]
    total = {}
    for w, c in f.monomial_coeffs().items():
        piece = {(0,) * nvars: F(1)}
        for i, e in enumerate(w):
            for _ in range(e):
                piece = convolve(piece, lin[i])
        for key, v in piece.items():
            total[key] = total.get(key, F(0)) + c * v
    return convert_basis(nvars, f.d, total, "monomial")


def test_substitute_identity():
    f = Form(3, 3, {(1, 1, 1): 5, (3, 0, 0): 2})
    assert substitute(f, Matrix.identity(3)) == f


def test_substitute_swap_relabels_power():
    f = linear_power([1, 0], 5)
    swapped = substitute(f, Matrix([[0, 1], [1, 0]]))
    assert swapped == linear_power([0, 1], 5)


def test_substitute_collapse_binomial_oracle():
    # (x1 + x2)^4 under x1 = x1', x2 = x1' gives 2^4 x1'^4
    f = linear_power([1, 1], 4)
    g = substitute(f, Matrix([[1], [1]]))
    assert g == Form(1, 4, {(4,): 16 * factorial(4)})
    assert g.monomial_coeffs() == {(4,): F(16)}


@settings(max_examples=20, deadline=None)
@given(forms_strat(3, 3))
def test_substitute_matches_monomial_oracle(f):
    m = Matrix([[1, 2, 0], [0, 1, -1], [1, 0, 1]])
    assert substitute(f, m) == naive_substitute(f, m)


@settings(max_examples=15, deadline=None)
@given(forms_strat(2, 4))
def test_substitute_rectangular_matches_oracle(f):
    m = Matrix([[1, -1, 2], [0, 1, 1]])  # 2 vars -> 3 vars
    assert substitute(f, m) == naive_substitute(f, m)


def test_substitute_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        substitute(Form(2, 2, {(2, 0): 1}), Matrix([[1], [0], [0]]))


@settings(max_examples=20, deadline=None)
@given(rpolys(3, 1), rpolys(3, 1), forms_strat(3, 3))
def test_contract_is_a_module_action(p, q, f):
    # (pq) o f = p o (q o f)
    assert contract(multiply_r(p, q), f) == contract(p, contract(q, f))


@settings(max_examples=15, deadline=None)
@given(forms_strat(3, 3))
def test_substitute_composes(f):
    a = Matrix([[1, 0, 1], [0, 1, 1], [1, -1, 0]])
    b = Matrix([[2, 1], [0, 1], [1, 0]])
    assert substitute(f, a * b) == substitute(substitute(f, a), b)


def test_linear_power_closed_form():
    f = linear_power([2, -1], 3)
    # a_W = 3! * 2^w1 * (-1)^w2
    assert f.coeffs == {
        (3, 0): F(48),
        (2, 1): F(-24),
        (1, 2): F(12),
        (0, 3): F(-6),
    }
    g = naive_substitute(Form(1, 3, {(3,): 6}), Matrix([[2, -1]]))
    assert g == f


def test_embed_pads_exponents():
    f = Form(2, 3, {(2, 1): 4})
    assert embed(f, 4) == Form(4, 3, {(2, 1, 0, 0): 4})


def test_zero_coefficients_dropped():
    f = Form(2, 2, {(2, 0): 0, (1, 1): 3})
    assert f.coeffs == {(1, 1): F(3)}
    assert Form.zero(2, 2).is_zero


def test_degree_validation():
    with pytest.raises(ValueError):
        Form(2, 3, {(1, 1): 1})
    with pytest.raises(ValueError):
        Form(2, 3, {(1, 1, 1): 1})
