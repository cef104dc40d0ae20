from fractions import Fraction

import pytest

from seshadri.errors import BudgetExceededError, ZeroPolynomialError
from seshadri.groebner import (
    Ideal,
    eliminate,
    groebner,
    in_ideal,
    normal_form,
    tangent_cone_ideal,
)
from seshadri.orders import BlockOrder, GREVLEX, LEX, GrevlexOrder, LexOrder
from seshadri.poly import Polynomial, graded_pieces, random_form
from conftest import bruteforce_homogeneous_membership, random_polynomial

x = Polynomial.variable(0, 2)
y = Polynomial.variable(1, 2)


def _vars(n):
    return [Polynomial.variable(i, n) for i in range(n)]


def test_order_properties(stream):
    # multiplicative total orders with 1 minimal
    for order in (GREVLEX, LEX, BlockOrder(1), GrevlexOrder((1, 0, 2)), LexOrder((2, 0, 1))):
        one = (0, 0, 0)
        for _ in range(60):
            a = tuple(stream.next_below(5) for _ in range(3))
            b = tuple(stream.next_below(5) for _ in range(3))
            w = tuple(stream.next_below(5) for _ in range(3))
            if a != one:
                assert order.key(a) > order.key(one)
            if order.key(a) > order.key(b):
                aw = tuple(i + j for i, j in zip(a, w))
                bw = tuple(i + j for i, j in zip(b, w))
                assert order.key(aw) > order.key(bw)
            # heap key mirrors the order exactly
            assert (order.key(a) > order.key(b)) == (order.heap_key(a) < order.heap_key(b))


def test_grevlex_textbook_sequence():
    # x^2 > xy > y^2 > x > y > 1 in two variables
    seq = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]
    keys = [GREVLEX.key(e) for e in seq]
    assert keys == sorted(keys, reverse=True)


def test_already_reduced_basis():
    basis = groebner(Ideal.of(x, y))
    assert {g.terms for g in basis.elements} == {x.terms, y.terms}


def test_spec_basis_example():
    # hand S-polynomial: y*(x^2+y^2) - x*(xy) = y^3
    basis = groebner(Ideal.of(x**2 + y**2, x * y))
    elements = {g.terms for g in basis.elements}
    assert elements == {(x**2 + y**2).terms, (x * y).terms, (y**3).terms}


def test_principal_ideal_content_stripped():
    f = (x + y) * Fraction(6, 4)
    basis = groebner(Ideal.of(f))
    assert basis.elements == (x + y,)


def test_normal_form_contract():
    basis = groebner(Ideal.of(x**2 + y**2, x * y))
    assert normal_form(x * y, basis).is_zero
    assert normal_form(y**3, basis).is_zero
    one = Polynomial.constant(1, 2)
    assert normal_form(one, basis) == one
    # no monomial of the remainder is divisible by a leading monomial
    r = normal_form((x + y) ** 4 + x, basis)
    for e, _ in r.terms:
        for lt in basis.leading_exponents:
            assert not all(a <= b for a, b in zip(lt, e))


def test_normal_form_idempotent(stream):
    basis = groebner(Ideal.of(x**2 - y, x * y - 1))
    for _ in range(30):
        f = random_polynomial(stream, 2, 5, fractional=True)
        r = normal_form(f, basis)
        assert normal_form(r, basis) == r


def test_normal_form_is_linear(stream):
    basis = groebner(Ideal.of(x**2 + y**2, x * y))
    for _ in range(20):
        f = random_polynomial(stream, 2, 4, fractional=True)
        g = random_polynomial(stream, 2, 4, fractional=True)
        assert normal_form(f + g, basis) == normal_form(f, basis) + normal_form(g, basis)


def test_membership_against_bruteforce(stream):
    # random small homogeneous ideals; oracle = truncated linear algebra
    xs = _vars(3)
    for trial in range(25):
        gens = []
        for _ in range(1 + stream.next_below(2)):
            deg = 1 + stream.next_below(3)
            gens.append(random_form(deg, 3, seed=stream.next_u64()))
        I = Ideal.of(*gens)
        basis = groebner(I)
        for _ in range(4):
            if stream.next_below(2):
                # certain member: random combination
                f = Polynomial.zero(3)
                for g in gens:
                    f = f + random_form(1 + stream.next_below(2), 3, seed=stream.next_u64()) * g
                f = [p for _, p in graded_pieces(f).pieces][0] if not f.is_zero else f
            else:
                f = random_form(1 + stream.next_below(5), 3, seed=stream.next_u64())
            if f.is_zero:
                continue
            assert normal_form(f, basis).is_zero == bruteforce_homogeneous_membership(f, gens)


def test_eliminate_examples():
    t, X, Y = _vars(3)
    par = eliminate(Ideal.of(X - t, Y - t * t), [0])
    assert len(par.generators) == 1
    g = par.generators[0]
    assert normal_form(Y - X**2, groebner(Ideal.of(g))).is_zero
    keep = eliminate(Ideal.of(Polynomial.variable(0, 2)), [1])
    assert keep.generators == (Polynomial.variable(0, 2),)
    unit = eliminate(Ideal.of(t * X - 1, Y), [0])
    assert unit.generators == (Y,)


def test_budget_error():
    gens = [random_form(3, 3, seed=i) for i in (1, 2, 3)]
    with pytest.raises(BudgetExceededError):
        groebner(Ideal.of(*gens), budget=5)


def test_zero_ideal_rejected():
    with pytest.raises(ZeroPolynomialError):
        Ideal.of(Polynomial.zero(2))


def test_groebner_cache_identity():
    I = Ideal.of(x**2 + y**2, x * y)
    assert groebner(I) is groebner(I)


def test_tangent_cone_examples():
    X, Y, Z = _vars(3)
    cusp = tangent_cone_ideal(Ideal.of(Y**2 - X**3))
    assert cusp.generators == (Y**2,)
    planar = tangent_cone_ideal(Ideal.of(Y**2 - X**3, Z))
    assert {g.terms for g in planar.generators} == {(Y**2).terms, Z.terms}
    twisted = tangent_cone_ideal(Ideal.of(Y - X**2, Z - X**3))
    assert {g.terms for g in twisted.generators} == {Y.terms, Z.terms}


def test_tangent_cone_needs_lowest_forms_of_combinations():
    # (x - y^2, x - z^3): the difference contributes y^2 beyond the
    # generators' own lowest forms
    X, Y, Z = _vars(3)
    cone = tangent_cone_ideal(Ideal.of(X - Y**2, X - Z**3))
    basis = groebner(Ideal.of(*cone.generators))
    assert normal_form(X, basis).is_zero
    assert normal_form(Y**2, basis).is_zero
    assert not normal_form(Y, basis).is_zero


def test_tangent_cone_principal_matches_lowest_piece(stream):
    for _ in range(25):
        f = random_polynomial(stream, 3, 4)
        f = f - Polynomial.constant(f.evaluate((0, 0, 0)), 3)
        if f.is_zero:
            continue
        cone = tangent_cone_ideal(Ideal.of(f))
        lowest = graded_pieces(f).pieces[0][1]
        assert len(cone.generators) == 1
        assert in_ideal(lowest, cone) and in_ideal(cone.generators[0], Ideal.of(lowest))
