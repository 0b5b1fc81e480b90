from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from arithinv import gfpoly
from arithinv.cyclo import CycNum, primes_above
from arithinv.polyring import (
    CycDomain,
    MonomialOrder,
    Poly,
    compose,
    elementary_symmetric,
    jacobian_det,
    leading_term,
    substitute_linear,
)
from strategies import homogeneous, polynomial

x, y, z = Poly.gens(3)


def test_basic_arithmetic():
    f = (x + y) ** 2
    assert f == x**2 + 2 * x * y + y**2
    assert f.degree() == 2 and f.is_homogeneous()
    assert (f - f).is_zero()
    assert (x + 1).degree() == 1 and not (x + 1).is_homogeneous()


def test_leading_terms_respect_order():
    f = x * y**2 + 3 * x**2 * z
    assert leading_term(f, MonomialOrder("lex", (0, 1, 2))) == ((2, 0, 1), 3)
    assert leading_term(f, MonomialOrder("lex", (1, 0, 2)))[0] == (1, 2, 0)
    assert leading_term(f, MonomialOrder("lex", (2, 1, 0)))[0] == (2, 0, 1)


def test_substitution_is_f_of_mx():
    f = x**2 * y + z
    m = [[1, 1, 0], [0, 1, 0], [0, 0, 2]]
    assert substitute_linear(m, f) == (x + y) ** 2 * y + 2 * z
    with pytest.raises(ValueError):
        substitute_linear([[1, 0, 0], [1, 0, 0], [0, 0, 1]], f)


def test_jacobian_of_elementary_symmetric_is_vandermonde():
    es = [elementary_symmetric(3, i) for i in (1, 2, 3)]
    vdm = (x - y) * (x - z) * (y - z)
    j = jacobian_det(es)
    assert j == vdm or j == -vdm


def test_residue_reduction():
    (I,) = primes_above(4, 2)
    i = CycNum.zeta(4)
    f = Poly(2, {(1, 0): 1 + i, (0, 1): 3}, CycDomain(4))
    r = f.reduce_mod(I)
    assert list(r.terms) == [(0, 1)]


def test_json_roundtrip():
    f = Poly(2, {(1, 1): CycNum(12, [1, 2], 3), (2, 0): 5}, CycDomain(12))
    assert Poly.from_json(f.to_json()) == f


@given(polynomial(3, 3), polynomial(3, 3), polynomial(3, 2))
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polynomial(2, 3), polynomial(2, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, u, v):
    pt = [u, v]
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@given(polynomial(2, 3), polynomial(2, 2))
def test_derivative_leibniz(a, b):
    for i in range(2):
        assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)


@settings(max_examples=50)
@given(homogeneous(2, 3), homogeneous(2, 2))
def test_substitution_composes(f, g):
    m1, m2 = [[1, 2], [0, 1]], [[0, 1], [-1, 3]]
    prod = [[sum(m1[i][k] * m2[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    # f(m1 m2 x) = (x -> f(m1 x)) evaluated at m2 x
    assert substitute_linear(prod, f) == substitute_linear(m2, substitute_linear(m1, f))
    assert substitute_linear(m1, f * g) == substitute_linear(m1, f) * substitute_linear(m1, g)


def test_compose():
    t1, t2 = Poly.gens(2)
    p = t1**2 - 3 * t2
    assert compose(p, [x + y, x * y]) == (x + y) ** 2 - 3 * x * y


# finite fields ---------------------------------------------------------------


@settings(max_examples=100)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=2, max_size=9))
def test_factorization_matches_sympy(p, coeffs):
    f = gfpoly.from_ints(coeffs + [1], p)
    sq = sympy.Poly(list(reversed(f)), sympy.Symbol("t"), modulus=p)
    if sympy.degree(sympy.gcd(sq, sq.diff()), sympy.Symbol("t")) > 0:
        return
    ours = sorted(tuple(gfpoly.monic(g, p)) for g in gfpoly.factor_squarefree(gfpoly.monic(f, p), p))
    theirs = sorted(
        tuple(int(c) % p for c in reversed(g.monic().all_coeffs())) for g, _ in sq.factor_list()[1]
    )
    assert ours == theirs
