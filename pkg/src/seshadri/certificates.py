"""Bound certificates, classifications and candidate-value enumerations.

A certificate never claims the infimum itself was computed: it pairs a
lower bound coming from a named geometric fact with (optionally) an
exhibited-curve upper bound, and only when the two coincide is the constant
pinned.  All values are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .checks import CheckResult
from .errors import (
    DimensionError,
    LinePresentError,
    NotSquarefreeError,
    ParameterError,
    PointNotOnVarietyError,
)
from .geometry import (
    LineSearchResult,
    PointedHypersurface,
    contains_line_through,
    curve_multiplicity_at,
    multiplicity_at,
    pointed_hypersurface,
    projective_closure_data,
    tangent_cone_at,
)
from .groebner import Ideal
from .hilbert import hilbert_data
from .irreducibility import absolutely_irreducible_factor_count
from .linalg import qq_rank
from .poly import Polynomial, homogenize, jacobian, translate_to_origin

LINE_PRESENT = "LINE_PRESENT"
NO_LINE_GT1 = "NO_LINE_GT1"
D_OVER_D_MINUS_1 = "D_OVER_D_MINUS_1"
TANGENT_DIM0_GE2 = "TANGENT_DIM0_GE2"

CERTIFICATE_KINDS = (LINE_PRESENT, NO_LINE_GT1, D_OVER_D_MINUS_1, TANGENT_DIM0_GE2)


@dataclass(frozen=True)
class SeshadriRatio:
    """Degree and point-multiplicity of an exhibited curve; the reduced
    ratio is an upper bound for the local constant."""

    degree: int
    multiplicity: int

    def __post_init__(self):
        if self.degree < 1 or self.multiplicity < 1:
            raise ParameterError("curve degree and multiplicity must be positive")

    @property
    def value(self) -> Fraction:
        return Fraction(self.degree, self.multiplicity)


@dataclass(frozen=True)
class BoundCertificate:
    kind: str
    lemma: str
    lower_bound: Fraction
    strict: bool  # True when the lower bound is strict (line-free case)
    witness: Optional[SeshadriRatio]
    epsilon: Optional[Fraction]
    params: Tuple[Tuple[str, int], ...]
    warnings: Tuple[str, ...] = ()

    def param_dict(self) -> Dict[str, int]:
        return dict(self.params)


def _pin(lower: Fraction, witness: Optional[SeshadriRatio]) -> Optional[Fraction]:
    if witness is not None and witness.value == lower:
        return lower
    return None


def seshadri_ratio(C: Ideal, point: Sequence, budget=None) -> SeshadriRatio:
    """Exact degree/multiplicity ratio of a curve through the point."""
    closure = projective_closure_data(C, budget)
    if closure.dimension != 1:
        raise DimensionError(f"expected a curve, got dimension {closure.dimension}")
    mult = curve_multiplicity_at(C, point, budget)
    assert closure.degree is not None
    return SeshadriRatio(closure.degree, mult)


def _reducibility_warning(f: Polynomial) -> Optional[str]:
    """Count factors of a fixed generic plane section; >1 suggests the
    surface is not integral.  Recorded, never fatal."""
    if f.arity != 3:
        return None
    x, y = Polynomial.variable(0, 2, f.field), Polynomial.variable(1, 2, f.field)
    for a, b, c in ((2, 3, 5), (1, -2, 7), (3, 1, 11)):
        section = f.compose([x, y, x * a + y * b + c])
        if section.total_degree() != f.total_degree():
            continue
        try:
            count = absolutely_irreducible_factor_count(section)
        except (NotSquarefreeError, ParameterError):
            continue
        if count > 1:
            return f"generic plane section splits into {count} factors; surface may be reducible"
        return None
    return None


def surface_slice_curve(X: PointedHypersurface) -> Ideal:
    """The slice of the surface by its own tangent cone, as an ideal in the
    chart centered at the base point."""
    local = X.local.recombined()
    return Ideal.of(local, tangent_cone_at(X))


def surface_bound_certificate(
    X: PointedHypersurface,
    slice_ratio: Optional[SeshadriRatio] = None,
    line: Optional[LineSearchResult] = None,
    compute_slice: bool = True,
    budget=None,
) -> BoundCertificate:
    """Certificate for a degree>=3 surface germ in 3 affine variables.

    A line through the point pins the constant to 1.  Otherwise the degree
    ratio d/(d-1) is a valid lower bound, and the tangent-cone slice curve
    is attached as an upper-bound witness whenever its ratio beats the
    multiplicity threshold (m+1)/m, below which the optimum is achieved by
    a slice component.
    """
    if X.arity != 3:
        raise ParameterError("surface certificates need a 3-variable affine chart")
    d = X.degree
    if d < 3:
        raise ParameterError("surface certificates need degree >= 3")
    m = multiplicity_at(X)
    warnings: List[str] = []
    w = _reducibility_warning(X.poly)
    if w:
        warnings.append(w)
    if line is None:
        line = contains_line_through(X, budget)
    params = (("d", d), ("m", m), ("n", 2))
    if line.contains_line:
        witness = SeshadriRatio(1, 1)
        return BoundCertificate(
            LINE_PRESENT,
            "line-through-point",
            Fraction(1),
            False,
            witness,
            Fraction(1),
            params,
            tuple(warnings),
        )
    lower = Fraction(d, d - 1)
    witness = slice_ratio
    if witness is None and compute_slice:
        try:
            witness = seshadri_ratio(surface_slice_curve(X), (0,) * 3, budget)
        except (DimensionError, PointNotOnVarietyError):
            witness = None
    if witness is not None and witness.value >= Fraction(m + 1, m):
        witness = None  # not below the threshold: no component argument
    return BoundCertificate(
        D_OVER_D_MINUS_1,
        "tangent-cone-slice",
        lower,
        False,
        witness,
        _pin(lower, witness),
        params,
        tuple(warnings),
    )


def no_line_certificate(d: int, m: int, n: int) -> BoundCertificate:
    """Fallback when only the line-freeness fact applies: strictly above 1."""
    return BoundCertificate(
        NO_LINE_GT1,
        "no-line-through-point",
        Fraction(1),
        True,
        None,
        None,
        (("d", d), ("m", m), ("n", n)),
    )


def line_present_certificate(d: int, m: int, n: int) -> BoundCertificate:
    """A line through the point is itself the optimal curve: pinned at 1."""
    return BoundCertificate(
        LINE_PRESENT,
        "line-through-point",
        Fraction(1),
        False,
        SeshadriRatio(1, 1),
        Fraction(1),
        (("d", d), ("m", m), ("n", n)),
    )


def _tangent_space_forms(X: Ideal, point: Sequence, budget=None) -> Tuple[List[Polynomial], int]:
    """Linear forms cutting the (affine) tangent space at a smooth point,
    and the dimension of the variety."""
    coords = tuple(X.field.coerce(v) for v in point)
    for g in X.generators:
        if g.evaluate(coords):
            raise PointNotOnVarietyError("point not on the variety")
    closure = hilbert_data(Ideal.of(*(homogenize(g) for g in X.generators)), budget=budget)
    dim = closure.dimension
    codim = X.arity - dim
    rows = []
    for g in X.generators:
        rows.append([h.evaluate(coords) for h in jacobian(g)])
    rank = qq_rank(rows) if X.field.prime is None else _modp_matrix_rank(rows, X.field.prime)
    if rank != codim:
        raise DimensionError("singular point: tangent space is not linear of the right codimension")
    # row-reduce to a basis of the row space, then build affine-linear forms
    basis_rows = _row_space_basis(rows, X.field)
    forms = []
    for row in basis_rows:
        form = Polynomial.zero(X.arity, X.field)
        for i, a in enumerate(row):
            if a:
                form = form + (Polynomial.variable(i, X.arity, X.field) - coords[i]) * a
        forms.append(form)
    return forms, dim


def _modp_matrix_rank(rows, p):
    import numpy as np

    from .linalg import modp_rank

    if not rows:
        return 0
    return modp_rank(np.array([[int(v) % p for v in r] for r in rows], dtype=np.int64), p)


def _row_space_basis(rows, field):
    mat = [[field.coerce(v) for v in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    basis = []
    rank = 0
    p = field.prime
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        if p is None:
            inv = 1 / mat[rank][col]
            mat[rank] = [v * inv for v in mat[rank]]
        else:
            inv = pow(int(mat[rank][col]), p - 2, p)
            mat[rank] = [v * inv % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                if p is None:
                    mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
                else:
                    mat[r] = [(a - factor * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return mat[:rank]


def classify_tangent_intersection(X: Ideal, point: Sequence, budget=None) -> int:
    """Projective dimension (clamped to {0,1,2}) of the intersection of the
    variety with its embedded tangent space at a smooth point."""
    forms, _ = _tangent_space_forms(X, point, budget)
    slice_gens = [homogenize(g) for g in list(X.generators) + forms]
    hd = hilbert_data(Ideal.of(*slice_gens), budget=budget)
    return max(0, min(2, hd.dimension))


def tangent_slice_ideal(X: Ideal, point: Sequence, budget=None) -> Ideal:
    forms, _ = _tangent_space_forms(X, point, budget)
    return Ideal.of(*(list(X.generators) + forms))


def threefold_bound_certificate(
    X: Ideal,
    point: Sequence,
    budget=None,
    slice_ratio: Optional[SeshadriRatio] = None,
) -> BoundCertificate:
    """Certificate for a threefold smooth at the point with no line through
    it.  Dispatches on the dimension of the tangent-space slice: dimension 0
    gives the lower bound 2, otherwise the degree ratio applies and a slice
    curve (dimension 2 case: the slice-surface's own cone curve) can pin it.
    """
    coords = tuple(X.field.coerce(v) for v in point)
    forms, dim = _tangent_space_forms(X, coords, budget)
    if dim != 3:
        raise DimensionError(f"expected a threefold, got dimension {dim}")
    closure = hilbert_data(Ideal.of(*(homogenize(g) for g in X.generators)), budget=budget)
    assert closure.degree is not None
    d = closure.degree
    if len(X.generators) == 1:
        line = contains_line_through_hypersurface(X.generators[0], coords, budget)
        if line:
            raise LinePresentError("line through the point: the constant is 1")
    kind_slice = classify_tangent_intersection(X, coords, budget)
    params = (("d", d), ("m", 1), ("n", 3))
    if kind_slice == 0:
        return BoundCertificate(
            TANGENT_DIM0_GE2, "tangent-slice-dimension-0", Fraction(2), False, None, None, params
        )
    lower = Fraction(d, d - 1)
    witness = slice_ratio
    if witness is None and kind_slice == 2 and len(X.generators) == 1:
        witness = _hypersurface_slice_witness(X.generators[0], coords, forms, budget)
    if witness is not None and witness.value < lower:
        witness = None  # inconsistent exhibit; refuse to pin below the bound
    return BoundCertificate(
        D_OVER_D_MINUS_1,
        "tangent-slice-surface",
        lower,
        False,
        witness,
        _pin(lower, witness),
        params,
    )


def contains_line_through_hypersurface(f: Polynomial, point: Sequence, budget=None) -> bool:
    X = pointed_hypersurface(f, point)
    return contains_line_through(X, budget).contains_line


def _hypersurface_slice_witness(
    f: Polynomial, point: Sequence, forms: Sequence[Polynomial], budget=None
) -> Optional[SeshadriRatio]:
    """Slice a hypersurface threefold by its tangent hyperplane, reduce to a
    3-variable surface chart, and take that surface's cone-curve ratio."""
    if len(forms) != 1:
        return None
    form = translate_to_origin(forms[0], point)  # linear form through 0
    local = translate_to_origin(f, point)
    # find a variable with nonzero coefficient in the form and solve it out
    lead = None
    for e, c in form.terms:
        if sum(e) == 1:
            idx = e.index(1)
            lead = (idx, c)
            break
    if lead is None:
        return None
    idx, c = lead
    n = f.arity
    images = []
    others = [i for i in range(n) if i != idx]
    p = f.field.prime
    c_inv = Fraction(1) / c if p is None else pow(int(c), p - 2, p)
    # x_idx = -(sum of the other linear terms)/c on the hyperplane
    expr = Polynomial.zero(n - 1, f.field)
    for e, coeff in form.terms:
        if sum(e) == 1 and e.index(1) != idx:
            pos = others.index(e.index(1))
            expr = expr - Polynomial.variable(pos, n - 1, f.field) * (coeff * c_inv)
    for i in range(n):
        if i == idx:
            images.append(expr)
        else:
            images.append(Polynomial.variable(others.index(i), n - 1, f.field))
    g = local.compose(images)
    if g.is_zero:
        return None
    try:
        surface = pointed_hypersurface(g, (0,) * (n - 1))
        cert = surface_bound_certificate(surface, budget=budget)
    except (ParameterError, PointNotOnVarietyError, DimensionError):
        return None
    return cert.witness


def enumerate_surface_candidates(d: int, m: int) -> List["CandidateValue"]:
    """All (a, b) with 3 <= a <= m*d and m*a/(m+1) < b <= a*(d-1)/d."""
    if d < 3:
        raise ParameterError("need d >= 3")
    if not 1 <= m <= d - 1:
        raise ParameterError("need 1 <= m <= d-1")
    out = []
    for a in range(3, m * d + 1):
        low = Fraction(m * a, m + 1)
        high = Fraction(a * (d - 1), d)
        b = low.numerator // low.denominator + 1
        while b <= high:
            if Fraction(b) > low:
                out.append(CandidateValue(a, b))
            b += 1
    out.sort(key=lambda cv: (cv.value, cv.a, cv.b))
    return out


def enumerate_threefold_candidates(d: int, case: str) -> List["CandidateValue"]:
    """Case "b": 3 <= a <= d with a/2 < b < a (both strict).
    Case "c": 3 <= a <= (d-2)*d with (d-2)a/(d-1) < b <= a(d-1)/d."""
    if d < 4:
        raise ParameterError("need d >= 4")
    case = case.lower()
    out = []
    if case == "b":
        for a in range(3, d + 1):
            for b in range(a // 2 + 1, a):
                if Fraction(b) > Fraction(a, 2):
                    out.append(CandidateValue(a, b))
    elif case == "c":
        for a in range(3, (d - 2) * d + 1):
            low = Fraction((d - 2) * a, d - 1)
            high = Fraction(a * (d - 1), d)
            b = low.numerator // low.denominator + 1
            while b <= high:
                if Fraction(b) > low:
                    out.append(CandidateValue(a, b))
                b += 1
    else:
        raise ParameterError("case must be 'b' or 'c'")
    out.sort(key=lambda cv: (cv.value, cv.a, cv.b))
    return out


@dataclass(frozen=True)
class CandidateValue:
    a: int
    b: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.a, self.b)


def cone_lemma_check(
    C: Ideal,
    cone: Polynomial,
    point: Sequence,
    budget=None,
    line: Optional[bool] = None,
) -> CheckResult:
    """Scalar content of the on-cone bound for a curve inside a cone over a
    plane curve with vertex at the point: the degree drop deg C - mult_p C
    must be a positive multiple of deg B, so in particular
    deg C - deg B >= mult_p C."""
    from .geometry import contains_line_through_ideal
    from .groebner import groebner, normal_form

    coords = tuple(C.field.coerce(v) for v in point)
    local_cone = translate_to_origin(cone, coords)
    if not local_cone.is_homogeneous():
        raise ParameterError("cone equation must be homogeneous around the vertex")
    local_curve = Ideal.of(*(translate_to_origin(g, coords) for g in C.generators))
    if not normal_form(local_cone, groebner(local_curve, budget=budget), budget).is_zero:
        raise ParameterError("curve is not contained in the cone")
    if line is None:
        line = contains_line_through_ideal(C, coords, budget).contains_line
    if line:
        raise LinePresentError("line through the vertex: bound inapplicable")
    deg_b = cone.total_degree()
    closure = projective_closure_data(C, budget)
    if closure.dimension != 1:
        raise DimensionError("expected a curve inside the cone")
    mult = curve_multiplicity_at(C, coords, budget)
    assert closure.degree is not None
    drop = closure.degree - mult
    ok = drop > 0 and drop % deg_b == 0 and closure.degree - deg_b >= mult
    return CheckResult.of(
        "on-cone-bound",
        ok,
        curve_degree=closure.degree,
        curve_multiplicity=mult,
        cone_degree=deg_b,
        degree_drop=drop,
        projection_degree=drop // deg_b if deg_b and drop % deg_b == 0 else None,
    )


def degree_mult_bound_check(
    X: PointedHypersurface, line: Optional[LineSearchResult] = None, budget=None
) -> CheckResult:
    """Degree minus one bounds the multiplicity once no line passes through
    the point."""
    if line is None:
        line = contains_line_through(X, budget)
    if line.contains_line:
        raise LinePresentError("line present, bound inapplicable")
    d = X.degree
    m = multiplicity_at(X)
    return CheckResult.of("degree-multiplicity-bound", d - 1 >= m, d=d, m=m)
