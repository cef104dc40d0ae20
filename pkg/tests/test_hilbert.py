import pytest

from seshadri.errors import ParameterError
from seshadri.groebner import Ideal, groebner
from seshadri.hilbert import (
    hilbert_data,
    hilbert_numerator,
    minimalize_monomials,
    projective_zero_exists,
)
from seshadri.orders import GREVLEX, LEX
from seshadri.poly import Polynomial, random_form
from conftest import bruteforce_hilbert_function, series_counts as _series_counts


def _vars(n):
    return [Polynomial.variable(i, n) for i in range(n)]


def test_hypersurface_in_p3():
    for d in (2, 3, 5):
        f = random_form(d, 4, seed=d)
        hd = hilbert_data(Ideal.of(f))
        assert (hd.dimension, hd.degree) == (2, d)


def test_complete_intersection_bezout():
    q2 = random_form(2, 4, seed=21)
    q3 = random_form(3, 4, seed=22)
    hd = hilbert_data(Ideal.of(q2, q3))
    assert (hd.dimension, hd.degree) == (1, 6)


def test_twisted_cubic():
    X, Y, Z, W = _vars(4)
    I = Ideal.of(X * Z - Y * Y, Y * W - Z * Z, X * W - Y * Z)
    hd = hilbert_data(I)
    assert (hd.dimension, hd.degree) == (1, 3)
    # brute-force monomial counting through degree 6 agrees with the series
    leads = groebner(I).leading_exponents
    assert bruteforce_hilbert_function(leads, 4, 6) == _series_counts(hd.numerator, 4, 6)


def test_order_independence():
    X, Y, Z, W = _vars(4)
    I1 = Ideal.of(X * Z - Y * Y, Y * W - Z * Z, X * W - Y * Z)
    I2 = Ideal.of(X * Z - Y * Y, Y * W - Z * Z, X * W - Y * Z)
    a = hilbert_data(I1, GREVLEX)
    b = hilbert_data(I2, LEX)
    assert (a.dimension, a.degree) == (b.dimension, b.degree)


def test_empty_schemes():
    X, Y = _vars(2)
    assert hilbert_data(Ideal.of(X, Y)).dimension == -1
    assert hilbert_data(Ideal.of(X, Y)).degree is None
    one = Polynomial.constant(1, 2)
    assert hilbert_data(Ideal.of(one)).dimension == -1


def test_inhomogeneous_rejected():
    X, Y = _vars(2)
    with pytest.raises(ParameterError):
        hilbert_data(Ideal.of(X + 1))


def test_projective_zero_examples():
    X, Y = _vars(2)
    assert not projective_zero_exists(Ideal.of(X, Y))
    assert projective_zero_exists(Ideal.of(X))
    a, b, c = _vars(3)
    assert projective_zero_exists(Ideal.of(a**2 + b**2 + c**2, a**3 + b**3 + c**3))


def test_zero_test_matches_dimension(stream):
    for _ in range(20):
        gens = [random_form(1 + stream.next_below(3), 3, seed=stream.next_u64()) for _ in range(1 + stream.next_below(3))]
        I1 = Ideal.of(*gens)
        I2 = Ideal.of(*gens)
        assert projective_zero_exists(I1) == (hilbert_data(I2).dimension >= 0)


def test_numerator_against_bruteforce(stream):
    for _ in range(30):
        arity = 2 + stream.next_below(3)
        leads = []
        for _ in range(1 + stream.next_below(4)):
            e = tuple(stream.next_below(4) for _ in range(arity))
            if any(e):
                leads.append(e)
        if not leads:
            continue
        num = hilbert_numerator(leads, arity)
        assert bruteforce_hilbert_function(minimalize_monomials(leads), arity, 8) == _series_counts(
            num, arity, 8
        )


def test_bezout_for_random_coprime_forms(stream):
    for _ in range(10):
        d1 = 1 + stream.next_below(4)
        d2 = 1 + stream.next_below(4)
        f = random_form(d1, 4, seed=stream.next_u64())
        g = random_form(d2, 4, seed=stream.next_u64())
        hd = hilbert_data(Ideal.of(f, g))
        assert (hd.dimension, hd.degree) == (1, d1 * d2)
