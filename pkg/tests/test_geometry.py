import pytest

from seshadri.errors import (
    DimensionError,
    LinePresentError,
    NotSquarefreeError,
    PointNotOnVarietyError,
)
from seshadri.geometry import (
    check_mult_degree_bound,
    contains_line_through,
    contains_line_through_ideal,
    curve_multiplicity_at,
    multiplicity_at,
    pointed_hypersurface,
    singular_locus_dimension,
    smooth_at,
    tangent_cone_at,
)
from seshadri.groebner import Ideal
from seshadri.hilbert import hilbert_data
from seshadri.poly import Polynomial, order_at_origin, random_form


def _vars(n):
    return [Polynomial.variable(i, n) for i in range(n)]


X, Y, Z = _vars(3)


def test_multiplicity_examples():
    cusp = pointed_hypersurface(Y**2 - X**3, (0, 0, 0))
    assert multiplicity_at(cusp) == 2
    assert tangent_cone_at(cusp) == Y**2
    smooth = pointed_hypersurface(X + X**2 + Y * Z, (0, 0, 0))
    assert multiplicity_at(smooth) == 1


def test_multiplicity_off_origin():
    f = (X - 1) ** 2 + (Y - 2) ** 2 * (X - 1) - Z**3
    ph = pointed_hypersurface(f, (1, 2, 0))
    assert multiplicity_at(ph) == 2


def test_multiplicity_matches_cone_degree(stream):
    # two code paths: lowest-degree piece vs Hilbert degree of its ideal
    for seed in range(6):
        m = 1 + seed % 3
        f = random_form(m, 3, seed=seed * 3 + 1) + random_form(m + 2, 3, seed=seed * 3 + 2)
        ph = pointed_hypersurface(f, (0, 0, 0))
        cone = tangent_cone_at(ph)
        hd = hilbert_data(Ideal.of(cone))
        assert multiplicity_at(ph) == hd.degree == m


def test_cone_contains_lines():
    quadric_cone = pointed_hypersurface(X * Y - Z**2, (0, 0, 0))
    assert contains_line_through(quadric_cone).contains_line
    result = contains_line_through(quadric_cone)
    # invariant: flag mirrors the direction ideal having a projective zero
    from seshadri.hilbert import projective_zero_exists

    assert result.contains_line == projective_zero_exists(
        Ideal.of(*result.direction_ideal.generators)
    )


def test_generic_two_piece_germ_has_line():
    # two plane curves in the direction plane always intersect
    f = random_form(2, 3, seed=4) + random_form(3, 3, seed=5)
    ph = pointed_hypersurface(f, (0, 0, 0))
    assert contains_line_through(ph).contains_line


def test_line_check_linear_invariance(stream):
    f = random_form(2, 3, seed=11) + random_form(3, 3, seed=12) + random_form(4, 3, seed=13)
    ph = pointed_hypersurface(f, (0, 0, 0))
    base = contains_line_through(ph).contains_line
    mats = [
        ((1, 1, 0), (0, 1, 0), (2, 0, 1)),
        ((1, 0, 0), (3, 1, 0), (0, 0, 1)),
        ((0, 1, 0), (1, 0, 0), (1, 1, 1)),
    ]
    for mat in mats:
        images = [
            Polynomial.variable(0, 3) * mat[i][0]
            + Polynomial.variable(1, 3) * mat[i][1]
            + Polynomial.variable(2, 3) * mat[i][2]
            for i in range(3)
        ]
        g = f.compose(images)
        assert contains_line_through(pointed_hypersurface(g, (0, 0, 0))).contains_line == base


def test_homogeneous_germ_is_a_cone():
    # a cone always contains lines through its vertex (nonempty case)
    f = random_form(3, 3, seed=77)
    ph = pointed_hypersurface(f, (0, 0, 0))
    assert contains_line_through(ph).contains_line


def test_mult_degree_bound():
    f = random_form(2, 3, seed=21) + random_form(3, 3, seed=22) + random_form(4, 3, seed=23)
    ph = pointed_hypersurface(f, (0, 0, 0))
    check = check_mult_degree_bound(ph)
    assert check.passed and check.data == {"m": 2, "d": 4, "n": 2}
    cone = pointed_hypersurface(X * Y - Z**2, (0, 0, 0))
    with pytest.raises(LinePresentError):
        check_mult_degree_bound(cone)


def test_smooth_at():
    x2 = Polynomial.variable(0, 2)
    assert smooth_at(x2 + x2**2, (0, 0))
    assert not smooth_at(X**2 + Y**2 + Z**2, (0, 0, 0))
    with pytest.raises(PointNotOnVarietyError):
        smooth_at(X + 1, (0, 0, 0))


def test_singular_locus_dimension():
    # smooth quadric surface
    assert singular_locus_dimension(X**2 + Y**2 + Z + 1 - 1 + Z * 0 + Z) == -1
    # cone over a smooth plane curve: vertex only
    assert singular_locus_dimension(X**2 + Y**2 + Z**2) == 0
    with pytest.raises(NotSquarefreeError):
        singular_locus_dimension((X + Y) ** 2)


def test_curve_multiplicity_examples():
    # planar node embedded in 3-space
    node = Ideal.of(X * Y + X**3, Z)
    assert curve_multiplicity_at(node, (0, 0, 0)) == 2
    # monomial curve (t^3, t^4, t^5)
    mono = Ideal.of(X * Z - Y**2, X**3 - Y * Z, X**2 * Y - Z**2)
    assert curve_multiplicity_at(mono, (0, 0, 0)) == 3
    # smooth curve point
    line = Ideal.of(Y, Z)
    assert curve_multiplicity_at(line, (0, 0, 0)) == 1
    with pytest.raises(DimensionError):
        curve_multiplicity_at(Ideal.of(X), (0, 0, 0))


def test_monomial_curve_oracle():
    # oracle: the pullback of a generic linear form along t -> (t^3,t^4,t^5)
    # has t-order exactly 3
    t = Polynomial.variable(0, 1)
    for coeffs in ((1, 2, 5), (3, -1, 2), (7, 1, 1)):
        pull = t**3 * coeffs[0] + t**4 * coeffs[1] + t**5 * coeffs[2]
        assert order_at_origin(pull) == 3


def test_curve_multiplicity_matches_planar_order(stream):
    # plane curves embedded by an extra coordinate: multiplicity equals the
    # order at the origin of the plane equation
    for seed in range(5):
        f2 = random_form(1 + seed % 2, 2, seed=seed * 5 + 1) + random_form(
            3 + seed % 2, 2, seed=seed * 5 + 2
        )
        lifted = Polynomial.from_dict(3, {e + (0,): c for e, c in f2.terms})
        C = Ideal.of(lifted, Z)
        assert curve_multiplicity_at(C, (0, 0, 0)) == order_at_origin(f2)


def test_curve_multiplicity_positive_on_members(stream):
    C = Ideal.of(X * Y + X**3, Z)
    assert curve_multiplicity_at(C, (0, 0, 0)) >= 1
    with pytest.raises(PointNotOnVarietyError):
        curve_multiplicity_at(C, (1, 1, 1))


def test_contains_line_through_ideal():
    # the union of the axes in the plane z = 0 contains lines through 0
    axes = Ideal.of(X * Y, Z)
    assert contains_line_through_ideal(axes, (0, 0, 0)).contains_line
    ellipse = Ideal.of(X**2 + Y**2 - X, Z)
    assert not contains_line_through_ideal(ellipse, (0, 0, 0)).contains_line
