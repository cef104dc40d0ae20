"""Point-local invariants of hypersurfaces and curves.

Everything works in an affine chart after translating the base point to the
origin: multiplicity is the least degree of a homogeneous component, the
tangent cone of a hypersurface is that lowest component, and a line through
the point lies on the hypersurface exactly when its direction is a common
projective zero of all the components.  Line detection therefore happens
over the algebraic closure, not over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .checks import CheckResult
from .errors import (
    DimensionError,
    LinePresentError,
    NotSquarefreeError,
    PointNotOnVarietyError,
    ZeroPolynomialError,
)
from .groebner import Ideal, tangent_cone_ideal
from .hilbert import HilbertData, hilbert_data, projective_zero_exists
from .irreducibility import _trim, _udeg, _ugcd, _uderiv
from .poly import (
    GradedDecomposition,
    Polynomial,
    Scalar,
    graded_pieces,
    homogenize,
    jacobian,
    translate_to_origin,
)


@dataclass(frozen=True)
class PointedHypersurface:
    """A hypersurface germ: affine equation, base point on it, and the
    graded decomposition of the translated equation."""

    poly: Polynomial
    point: Tuple[Scalar, ...]
    local: GradedDecomposition

    @property
    def arity(self) -> int:
        return self.poly.arity

    @property
    def degree(self) -> int:
        return self.poly.total_degree()


def pointed_hypersurface(f: Polynomial, point: Sequence) -> PointedHypersurface:
    if f.is_zero:
        raise ZeroPolynomialError("hypersurface needs a nonzero equation")
    coords = tuple(f.field.coerce(v) for v in point)
    if f.evaluate(coords):
        raise PointNotOnVarietyError("point not on hypersurface")
    return PointedHypersurface(f, coords, graded_pieces(f, coords))


def multiplicity_at(X: PointedHypersurface) -> int:
    """Multiplicity of the hypersurface at its base point."""
    return X.local.min_degree


def tangent_cone_at(X: PointedHypersurface) -> Polynomial:
    """Lowest graded piece of the translated equation: the local equation
    of the tangent cone."""
    return X.local.pieces[0][1]


@dataclass(frozen=True)
class LineSearchResult:
    contains_line: bool
    direction_ideal: Ideal


def contains_line_through(X: PointedHypersurface, budget=None) -> LineSearchResult:
    """Does some line through the base point lie on the hypersurface?

    A direction vector works exactly when every graded component vanishes
    on it, so the candidate directions form the projective zero locus of
    the component ideal.
    """
    pieces = [g for _, g in X.local.pieces]
    ideal = Ideal.of(*pieces)
    return LineSearchResult(projective_zero_exists(ideal, budget), ideal)


def contains_line_through_ideal(C: Ideal, point: Sequence, budget=None) -> LineSearchResult:
    """Same test for an arbitrary ideal: directions must kill every graded
    component of every generator."""
    pieces = []
    for g in C.generators:
        local = graded_pieces(g, point)
        pieces.extend(piece for _, piece in local.pieces)
    ideal = Ideal.of(*pieces)
    return LineSearchResult(projective_zero_exists(ideal, budget), ideal)


def check_mult_degree_bound(
    X: PointedHypersurface,
    line: Optional[LineSearchResult] = None,
    budget=None,
) -> CheckResult:
    """With no line through the point, multiplicity is at most degree minus
    the dimension of the hypersurface."""
    if line is None:
        line = contains_line_through(X, budget)
    if line.contains_line:
        raise LinePresentError("line present, bound inapplicable")
    m = multiplicity_at(X)
    d = X.degree
    n = X.arity - 1
    return CheckResult.of("mult-degree-bound", m <= d - n, m=m, d=d, n=n)


def smooth_at(f: Polynomial, point: Sequence) -> bool:
    """True iff some partial derivative is nonzero at the point."""
    coords = tuple(f.field.coerce(v) for v in point)
    if f.evaluate(coords):
        raise PointNotOnVarietyError("point not on hypersurface")
    return any(g.evaluate(coords) for g in jacobian(f))


def _restriction_is_squarefree(f: Polynomial, shifts: Sequence[int], direction: Sequence[int]) -> Optional[bool]:
    """Restrict f to the affine line t -> direction*t + shifts and test the
    univariate restriction; None when the line was degenerate."""
    t = Polynomial.variable(0, 1, f.field)
    images = [t * a + f.field.coerce(b) for a, b in zip(direction, shifts)]
    u = f.compose(images)
    if u.total_degree() != f.total_degree():
        return None
    coeffs: list = []
    for e, c in u.terms:
        while len(coeffs) <= e[0]:
            coeffs.append(0)
        coeffs[e[0]] = c
    p = f.field.prime
    g = _ugcd(coeffs, _uderiv(coeffs, p), p)
    return _udeg(_trim(g)) == 0


def heuristic_squarefree(f: Polynomial) -> bool:
    """Cheap one-sided test: a full-degree squarefree line restriction
    proves squarefreeness; repeated failures are reported as an error."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    lines = [
        ((0,) * f.arity, tuple(range(1, f.arity + 1))),
        ((1,) * f.arity, tuple((i + 2) for i in range(f.arity))),
        ((2, 1) * (f.arity // 2 + 1), tuple((3 * i + 1) for i in range(f.arity))),
        ((0, 1) * (f.arity // 2 + 1), tuple((i * i + 1) for i in range(f.arity))),
    ]
    for shifts, direction in lines:
        verdict = _restriction_is_squarefree(f, shifts[: f.arity], direction[: f.arity])
        if verdict:
            return True
    return False


def singular_locus_dimension(f: Polynomial, budget=None) -> int:
    """Projective dimension of the singular locus of the projective closure
    of V(f): -1 means smooth, 0 finitely many singular points."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    if not heuristic_squarefree(f):
        raise NotSquarefreeError("equation does not look squarefree; singular locus would be spurious")
    F = homogenize(f)
    gens = [F] + list(jacobian(F))
    gens = [g for g in gens if not g.is_zero]
    return hilbert_data(Ideal.of(*gens), budget=budget).dimension


def projective_closure_data(C: Ideal, budget=None) -> HilbertData:
    """Hilbert data of the ideal generated by the homogenized generators.

    Degree and dimension only read the top-dimensional part, which is what
    the curve invariants need; junk that homogenization may add in lower
    dimension does not affect them.
    """
    return hilbert_data(Ideal.of(*(homogenize(g) for g in C.generators)), budget=budget)


def curve_multiplicity_at(C: Ideal, point: Sequence, budget=None) -> int:
    """Multiplicity of a curve at a point: the degree of its projectivized
    tangent cone."""
    coords = tuple(C.field.coerce(v) for v in point)
    for g in C.generators:
        if g.evaluate(coords):
            raise PointNotOnVarietyError("point not on the curve")
    closure = projective_closure_data(C, budget)
    if closure.dimension != 1:
        raise DimensionError(f"expected a curve, got projective dimension {closure.dimension}")
    local = Ideal.of(*(translate_to_origin(g, coords) for g in C.generators))
    cone = tangent_cone_ideal(local, budget)
    hd = hilbert_data(cone, budget=budget)
    if hd.dimension != 0:
        raise DimensionError(f"tangent cone has projective dimension {hd.dimension}, expected 0")
    assert hd.degree is not None
    return hd.degree
