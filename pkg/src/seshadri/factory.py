"""Seeded construction and verification of the two singular example families.

Surface family: prescribe the tangent cone with a dense random degree-m form
and add dense random forms of degrees d-1 and d.  Threefold family: lift a
verified surface equation g to four variables and add x4 times a dense
random degree-(d-1) equation with nonzero constant term.  "General position"
is never assumed: every attempt re-verifies all named conditions and
resamples until they hold, so a VERIFIED report certifies exactly what it
computed.

The two Jacobian-ideal checks of the threefold run over a fixed large prime
field.  That is recorded per check; the conclusions are still one-sided
upper bounds on the rational dimension (Hilbert functions can only grow
under reduction), so the report marks them certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .checks import CheckResult
from .certificates import (
    BoundCertificate,
    SeshadriRatio,
    cone_lemma_check,
    surface_bound_certificate,
    threefold_bound_certificate,
)
from .errors import NotSquarefreeError, ParameterError
from .geometry import (
    PointedHypersurface,
    check_mult_degree_bound,
    contains_line_through,
    curve_multiplicity_at,
    pointed_hypersurface,
    projective_closure_data,
    singular_locus_dimension,
    smooth_at,
)
from .groebner import Ideal, groebner, normal_form
from .irreducibility import (
    absolutely_irreducible_factor_count,
    plane_projection_modp,
)
from .poly import Polynomial, dehomogenize, graded_pieces, order_at_origin, random_form
from .rng import derive_seed

FACTORY_PRIME = 2147483647

_SURFACE_TAG = 101
_PRIME_SURFACE_TAG = 202
_PROJECTION_TAG = 303


@dataclass(frozen=True)
class SurfaceExampleParams:
    d: int
    m: int
    seed: int = 1
    coeff_bound: int = 10
    max_attempts: int = 25

    def __post_init__(self):
        if self.d < 4:
            raise ParameterError("surface family needs d >= 4")
        if not 2 <= self.m <= self.d - 2:
            raise ParameterError("surface family needs 2 <= m <= d-2")
        if self.coeff_bound < 1:
            raise ParameterError("coeff_bound must be >= 1")
        if self.max_attempts < 1:
            raise ParameterError("max_attempts must be >= 1")


@dataclass(frozen=True)
class ThreefoldExampleParams:
    d: int
    m: int = 2
    seed: int = 1
    coeff_bound: int = 10
    max_attempts: int = 25

    def __post_init__(self):
        if self.d < 4:
            raise ParameterError("threefold family needs d >= 4")
        SurfaceExampleParams(self.d, self.m, self.seed, self.coeff_bound, self.max_attempts)


@dataclass
class ExampleReport:
    kind: str  # "surface" | "threefold"
    params: dict
    polynomial: Optional[Polynomial]
    attempts: int
    conditions: List[CheckResult]
    certificate: Optional[BoundCertificate]
    verified: bool
    embedded_surface: Optional["ExampleReport"] = None


def _lift(p: Polynomial, arity: int) -> Polynomial:
    pad = arity - p.arity
    return Polynomial.from_dict(arity, {e + (0,) * pad: c for e, c in p.terms}, p.field)


def _surface_attempt(
    d: int, m: int, seed: int, attempt: int, coeff_bound: int, budget, prime: int
) -> Tuple[Optional[PointedHypersurface], List[CheckResult], Optional[BoundCertificate]]:
    checks: List[CheckResult] = []
    fm = random_form(m, 3, derive_seed(seed, _SURFACE_TAG, attempt, 0), coeff_bound)
    fd1 = random_form(d - 1, 3, derive_seed(seed, _SURFACE_TAG, attempt, 1), coeff_bound)
    fd = random_form(d, 3, derive_seed(seed, _SURFACE_TAG, attempt, 2), coeff_bound)
    f = fm + fd1 + fd
    X = pointed_hypersurface(f, (0, 0, 0))

    mult = order_at_origin(f)
    checks.append(CheckResult.of("multiplicity", mult == m, value=mult, expected=m, field="QQ"))
    if not checks[-1].passed:
        return None, checks, None

    # the tangent cone must be the cone over an integral plane curve
    try:
        count = absolutely_irreducible_factor_count(dehomogenize(fm, 2, 1))
        checks.append(CheckResult.of("cone-irreducible", count == 1, factor_count=count, field="QQ"))
    except (NotSquarefreeError, ParameterError) as exc:
        checks.append(CheckResult.of("cone-irreducible", False, error=str(exc), field="QQ"))
    if not checks[-1].passed:
        return None, checks, None

    line = contains_line_through(X, budget)
    checks.append(
        CheckResult.of("no-line", not line.contains_line, contains_line=line.contains_line, field="QQ")
    )
    if not checks[-1].passed:
        return None, checks, None

    slice_curve = Ideal.of(f, fm)
    closure = projective_closure_data(slice_curve, budget)
    ok = closure.dimension == 1 and closure.degree == d * m
    checks.append(
        CheckResult.of(
            "slice-degree", ok, degree=closure.degree, dimension=closure.dimension, expected=d * m, field="QQ"
        )
    )
    if not ok:
        return None, checks, None

    slice_mult = curve_multiplicity_at(slice_curve, (0, 0, 0), budget)
    checks.append(
        CheckResult.of(
            "slice-multiplicity", slice_mult == (d - 1) * m, value=slice_mult, expected=(d - 1) * m, field="QQ"
        )
    )
    if not checks[-1].passed:
        return None, checks, None

    # Bertini surrogate: a generic plane projection of the slice curve must
    # be absolutely irreducible.  Computed over F_p; irreducibility mod p
    # with preserved degree lifts to characteristic 0.
    try:
        q, tries = plane_projection_modp(
            (f, fm), prime, derive_seed(seed, _PROJECTION_TAG, attempt)
        )
        pcount = absolutely_irreducible_factor_count(q)
        checks.append(
            CheckResult.of(
                "bertini-surrogate",
                pcount == 1 and q.total_degree() == d * m,
                factor_count=pcount,
                projection_degree=q.total_degree(),
                transforms_tried=tries,
                field=f"GF({prime})",
                certified="one-sided",
            )
        )
    except (NotSquarefreeError, ParameterError) as exc:
        checks.append(
            CheckResult.of("bertini-surrogate", False, error=str(exc), field=f"GF({prime})")
        )
    if not checks[-1].passed:
        return None, checks, None

    checks.append(check_mult_degree_bound(X, line, budget))
    if not checks[-1].passed:
        return None, checks, None
    checks.append(
        CheckResult.of("degree-multiplicity-bound", d - 1 >= mult, d=d, m=mult)
    )
    if not checks[-1].passed:
        return None, checks, None
    checks.append(cone_lemma_check(slice_curve, fm, (0, 0, 0), budget, line=False))
    if not checks[-1].passed:
        return None, checks, None

    ratio = SeshadriRatio(d * m, (d - 1) * m)
    cert = surface_bound_certificate(X, slice_ratio=ratio, line=line, budget=budget)
    pinned = cert.epsilon == Fraction(d, d - 1)
    checks.append(
        CheckResult.of(
            "epsilon-pinned",
            pinned,
            num=d,
            den=d - 1,
            witness_degree=ratio.degree,
            witness_multiplicity=ratio.multiplicity,
            field="QQ",
        )
    )
    if not pinned:
        return None, checks, None
    return X, checks, cert


def construct_surface_example(
    params: SurfaceExampleParams, budget=None, prime: int = FACTORY_PRIME
) -> Tuple[Optional[PointedHypersurface], ExampleReport]:
    """Sample and verify one member of the surface family.

    Resamples up to ``max_attempts`` times; the report carries the checks of
    the reported attempt (the first fully verified one, or the last failed
    one)."""
    last_checks: List[CheckResult] = []
    for attempt in range(1, params.max_attempts + 1):
        X, checks, cert = _surface_attempt(
            params.d, params.m, params.seed, attempt, params.coeff_bound, budget, prime
        )
        last_checks = checks
        if X is not None:
            report = ExampleReport(
                "surface",
                {
                    "d": params.d,
                    "m": params.m,
                    "seed": params.seed,
                    "coeff_bound": params.coeff_bound,
                    "max_attempts": params.max_attempts,
                },
                X.poly,
                attempt,
                checks,
                cert,
                True,
            )
            return X, report
    report = ExampleReport(
        "surface",
        {
            "d": params.d,
            "m": params.m,
            "seed": params.seed,
            "coeff_bound": params.coeff_bound,
            "max_attempts": params.max_attempts,
        },
        None,
        params.max_attempts,
        last_checks,
        None,
        False,
    )
    return None, report


def _threefold_attempt(
    g: Polynomial,
    surface_cert: BoundCertificate,
    d: int,
    seed: int,
    attempt: int,
    coeff_bound: int,
    budget,
    prime: int,
) -> Tuple[Optional[Polynomial], List[CheckResult], Optional[BoundCertificate]]:
    checks: List[CheckResult] = []
    gp = Polynomial.zero(3)
    for j in range(d):
        gp = gp + random_form(j, 3, derive_seed(seed, _PRIME_SURFACE_TAG, attempt, j), coeff_bound)
    g4 = _lift(g, 4)
    x4 = Polynomial.variable(3, 4)
    f = g4 + x4 * _lift(gp, 4)
    origin = (0, 0, 0, 0)

    const = gp.evaluate((0, 0, 0))
    checks.append(CheckResult.of("avoids-origin", bool(const), constant=str(const), field="QQ"))
    if not checks[-1].passed:
        return None, checks, None

    try:
        sd1 = singular_locus_dimension(gp.to_prime_field(prime), budget)
        checks.append(
            CheckResult.of(
                "prime-surface-smooth",
                sd1 == -1,
                dimension=sd1,
                field=f"GF({prime})",
                certified="one-sided",
            )
        )
    except NotSquarefreeError as exc:
        checks.append(CheckResult.of("prime-surface-smooth", False, error=str(exc)))
    if not checks[-1].passed:
        return None, checks, None

    checks.append(CheckResult.of("smooth-at-origin", smooth_at(f, origin), field="QQ"))
    if not checks[-1].passed:
        return None, checks, None

    try:
        sd = singular_locus_dimension(f.to_prime_field(prime), budget)
        checks.append(
            CheckResult.of(
                "finite-singular-locus",
                sd <= 0,
                dimension=sd,
                field=f"GF({prime})",
                certified="one-sided",
            )
        )
    except NotSquarefreeError as exc:
        checks.append(CheckResult.of("finite-singular-locus", False, error=str(exc)))
    if not checks[-1].passed:
        return None, checks, None

    X = pointed_hypersurface(f, origin)
    line = contains_line_through(X, budget)
    checks.append(
        CheckResult.of("no-line", not line.contains_line, contains_line=line.contains_line, field="QQ")
    )
    if not checks[-1].passed:
        return None, checks, None

    # tangent hyperplane must be {x4 = 0} and slicing by it must recover g
    linear = graded_pieces(f).component(1)
    hyperplane_ok = linear.terms == (x4 * const).terms
    slice_a = Ideal.of(f, x4)
    slice_b = Ideal.of(g4, x4)
    same = (
        normal_form(f, groebner(slice_b, budget=budget), budget).is_zero
        and normal_form(g4, groebner(slice_a, budget=budget), budget).is_zero
    )
    checks.append(
        CheckResult.of("tangent-slice", hyperplane_ok and same, hyperplane_is_x4=hyperplane_ok, slice_equals_surface=same, field="QQ")
    )
    if not checks[-1].passed:
        return None, checks, None

    cert = threefold_bound_certificate(Ideal.of(f), origin, budget, slice_ratio=surface_cert.witness)
    pinned = (
        cert.epsilon == Fraction(d, d - 1)
        and cert.epsilon == surface_cert.epsilon
        and cert.witness == surface_cert.witness
    )
    checks.append(
        CheckResult.of(
            "epsilon-pinned",
            pinned,
            num=d,
            den=d - 1,
            matches_surface_certificate=pinned,
            field="QQ",
        )
    )
    if not pinned:
        return None, checks, None
    return f, checks, cert


def construct_threefold_example(
    params: ThreefoldExampleParams, budget=None, prime: int = FACTORY_PRIME
) -> Tuple[Optional[Polynomial], ExampleReport]:
    """Sample and verify one member of the threefold family.

    Builds the embedded surface first (its report is attached), then
    resamples the auxiliary degree-(d-1) equation until the smoothness,
    line-freeness and slice conditions all hold."""
    surface_params = SurfaceExampleParams(
        params.d, params.m, params.seed, params.coeff_bound, params.max_attempts
    )
    X, surface_report = construct_surface_example(surface_params, budget, prime)
    base_params = {
        "d": params.d,
        "m": params.m,
        "seed": params.seed,
        "coeff_bound": params.coeff_bound,
        "max_attempts": params.max_attempts,
    }
    if X is None or surface_report.certificate is None:
        fail = CheckResult.of("surface-example-verified", False)
        return None, ExampleReport(
            "threefold", base_params, None, surface_report.attempts,
            [fail], None, False, surface_report,
        )
    g = X.poly
    last_checks: List[CheckResult] = []
    for attempt in range(1, params.max_attempts + 1):
        f, checks, cert = _threefold_attempt(
            g, surface_report.certificate, params.d, params.seed, attempt, params.coeff_bound, budget, prime
        )
        header = CheckResult.of("surface-example-verified", True, attempts=surface_report.attempts)
        last_checks = [header] + checks
        if f is not None:
            return f, ExampleReport(
                "threefold", base_params, f, attempt, last_checks, cert, True, surface_report
            )
    return None, ExampleReport(
        "threefold", base_params, None, params.max_attempts, last_checks, None, False, surface_report
    )
