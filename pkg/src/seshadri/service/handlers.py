"""Command implementations shared by the HTTP endpoints and the CLI.

Each handler takes a validated request model and returns the report dict in
the published JSON shape.  Success/failure is read off the report with
``report_ok``; usage problems raise ``ParseError``/``ParameterError`` and
blown step limits raise ``BudgetExceededError`` for the transport layer to
translate (HTTP status or exit code).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..certificates import (
    CandidateValue,
    enumerate_surface_candidates,
    enumerate_threefold_candidates,
    line_present_certificate,
    no_line_certificate,
    surface_bound_certificate,
    threefold_bound_certificate,
)
from ..checks import CheckResult
from ..errors import DimensionError, LinePresentError, ParameterError
from ..factory import (
    FACTORY_PRIME,
    ExampleReport,
    SurfaceExampleParams,
    ThreefoldExampleParams,
    construct_surface_example,
    construct_threefold_example,
)
from ..geometry import (
    contains_line_through,
    multiplicity_at,
    pointed_hypersurface,
    smooth_at,
    tangent_cone_at,
)
from ..groebner import Ideal
from ..parsing import (
    default_variables,
    format_polynomial,
    parse_point,
    parse_polynomial,
    read_polynomial_source,
)
from ..poly import Polynomial
from ..primality import is_prime
from ..reports import build_report, rational_pair
from .models import (
    AnalyzeRequest,
    CertifyRequest,
    EnumerateRequest,
    SurfaceRequest,
    ThreefoldRequest,
)


def _load_polynomial(req: AnalyzeRequest) -> Tuple[List[str], Polynomial]:
    text = req.polynomial
    first = next((line for line in text.splitlines() if line.strip()), "")
    if first.strip().lower().startswith("vars:"):
        return read_polynomial_source(text)
    if req.variables:
        names = list(req.variables)
        return names, parse_polynomial(text, variables=names)
    raise ParameterError("declare variables, or prepend a 'vars: ...' header line")


def _parse_point(req: AnalyzeRequest, arity: int):
    if isinstance(req.point, str):
        return parse_point(req.point, arity)
    return parse_point(",".join(req.point), arity)


def _validated_modulus(modulus: Optional[int]) -> Optional[int]:
    if modulus is None:
        return None
    if modulus < 3 or not is_prime(modulus):
        raise ParameterError(f"--modulus must be an odd prime, got {modulus}")
    return modulus


def handle_analyze(req: AnalyzeRequest) -> Dict:
    names, f = _load_polynomial(req)
    point = _parse_point(req, f.arity)
    modulus = _validated_modulus(req.modulus)
    budget = req.budget
    params = {
        "variables": names,
        "polynomial": format_polynomial(f, names),
        "point": [rational_pair(c) for c in point],
        "modulus": modulus,
        "budget": budget,
    }
    checks: List[CheckResult] = []
    on_variety = not f.evaluate(point)
    checks.append(CheckResult.of("point-on-hypersurface", on_variety, field="QQ"))
    if not on_variety:
        return build_report("analyze", params, checks)

    X = pointed_hypersurface(f, point)
    m = multiplicity_at(X)
    d = X.degree
    n = f.arity - 1
    checks.append(CheckResult.of("multiplicity", True, value=m, d=d, n=n, field="QQ"))
    cone = tangent_cone_at(X)
    checks.append(
        CheckResult.of("tangent-cone", True, polynomial=format_polynomial(cone, names), degree=m, field="QQ")
    )
    checks.append(CheckResult.of("smoothness", True, smooth=smooth_at(f, point), field="QQ"))

    if modulus is None:
        line = contains_line_through(X, budget)
        has_line = line.contains_line
        line_field = "QQ"
        line_data = dict(contains_line=has_line, field=line_field)
    else:
        Xp = pointed_hypersurface(f.to_prime_field(modulus), tuple(point))
        has_line = contains_line_through(Xp, budget).contains_line
        line = None
        line_field = f"GF({modulus})"
        line_data = dict(contains_line=has_line, field=line_field, certified="probabilistic")
    checks.append(CheckResult("line-through-point", "pass", line_data))

    if has_line:
        checks.append(CheckResult.skipped("mult-degree-bound", reason="line through the point"))
        checks.append(CheckResult.skipped("degree-multiplicity-bound", reason="line through the point"))
    else:
        checks.append(CheckResult.of("mult-degree-bound", m <= d - n, m=m, d=d, n=n, field=line_field))
        checks.append(CheckResult.of("degree-multiplicity-bound", d - 1 >= m, d=d, m=m, field=line_field))

    certificate = None
    if modulus is not None:
        pass  # probabilistic line check: certificates need the rational path
    elif has_line:
        certificate = line_present_certificate(d, m, n)
    elif f.arity == 3 and d >= 3:
        certificate = surface_bound_certificate(X, line=line, budget=budget)
    elif f.arity == 4:
        try:
            certificate = threefold_bound_certificate(Ideal.of(f), point, budget)
        except LinePresentError:
            certificate = line_present_certificate(d, m, n)
        except (DimensionError, ParameterError):
            certificate = no_line_certificate(d, m, n)
    else:
        certificate = no_line_certificate(d, m, n)
    return build_report("analyze", params, checks, certificate)


def handle_certify(req: CertifyRequest) -> Dict:
    names, f = _load_polynomial(req)
    point = _parse_point(req, f.arity)
    budget = req.budget
    _validated_modulus(req.modulus)
    params = {
        "variables": names,
        "polynomial": format_polynomial(f, names),
        "point": [rational_pair(c) for c in point],
        "slice": req.slice,
        "budget": budget,
    }
    checks: List[CheckResult] = []
    if f.evaluate(point):
        checks.append(CheckResult.of("point-on-hypersurface", False, field="QQ"))
        return build_report("certify", params, checks)
    checks.append(CheckResult.of("point-on-hypersurface", True, field="QQ"))
    X = pointed_hypersurface(f, point)
    certificate = None
    if f.arity == 3:
        certificate = surface_bound_certificate(X, compute_slice=req.slice, budget=budget)
        checks.append(
            CheckResult.of(
                "certificate",
                True,
                kind=certificate.kind,
                pinned=certificate.epsilon is not None,
                field="QQ",
            )
        )
    elif f.arity == 4:
        try:
            certificate = threefold_bound_certificate(Ideal.of(f), point, budget)
            checks.append(
                CheckResult.of(
                    "certificate", True, kind=certificate.kind, pinned=certificate.epsilon is not None, field="QQ"
                )
            )
        except LinePresentError:
            certificate = line_present_certificate(X.degree, multiplicity_at(X), 3)
            checks.append(CheckResult.of("certificate", True, kind=certificate.kind, pinned=True, field="QQ"))
        except (DimensionError, ParameterError) as exc:
            line = contains_line_through(X, budget)
            if line.contains_line:
                certificate = line_present_certificate(X.degree, multiplicity_at(X), 3)
            else:
                certificate = no_line_certificate(X.degree, multiplicity_at(X), 3)
            checks.append(
                CheckResult.of("certificate", True, kind=certificate.kind, note=str(exc), field="QQ")
            )
    else:
        raise ParameterError("certify expects a surface (3 variables) or threefold (4 variables) chart")
    return build_report("certify", params, checks, certificate)


def _example_result(report: ExampleReport, names: List[str]) -> Dict:
    result = {
        "verified": report.verified,
        "attempts": report.attempts,
        "polynomial": None
        if report.polynomial is None
        else format_polynomial(report.polynomial, names),
        "epsilon": None
        if report.certificate is None or report.certificate.epsilon is None
        else rational_pair(report.certificate.epsilon),
    }
    return result


def handle_construct_surface(req: SurfaceRequest) -> Dict:
    params = SurfaceExampleParams(req.d, req.m, req.seed, req.coeff_bound, req.max_attempts)
    prime = _validated_modulus(req.modulus) or FACTORY_PRIME
    _, report = construct_surface_example(params, req.budget, prime)
    names = default_variables(3)
    return build_report(
        "construct-surface",
        dict(report.params),
        report.conditions,
        report.certificate,
        _example_result(report, names),
    )


def handle_construct_threefold(req: ThreefoldRequest) -> Dict:
    params = ThreefoldExampleParams(req.d, req.m, req.seed, req.coeff_bound, req.max_attempts)
    prime = _validated_modulus(req.modulus) or FACTORY_PRIME
    _, report = construct_threefold_example(params, req.budget, prime)
    names = default_variables(4)
    result = _example_result(report, names)
    if report.embedded_surface is not None:
        result["surface"] = _example_result(report.embedded_surface, default_variables(3))
    return build_report(
        "construct-threefold",
        dict(report.params),
        report.conditions,
        report.certificate,
        result,
    )


def _candidates_payload(values: List[CandidateValue]) -> List[Dict]:
    return [{"a": cv.a, "b": cv.b, "value": rational_pair(cv.value)} for cv in values]


def handle_enumerate(req: EnumerateRequest) -> Dict:
    if (req.surface_m is None) == (req.case is None):
        raise ParameterError("pass exactly one of surface_m (surface) or case (threefold)")
    if req.surface_m is not None:
        values = enumerate_surface_candidates(req.d, req.surface_m)
        kind = "surface"
        recheck = all(
            3 <= cv.a <= req.surface_m * req.d
            and Fraction(req.surface_m * cv.a, req.surface_m + 1) < Fraction(cv.b)
            and Fraction(cv.b) <= Fraction(cv.a * (req.d - 1), req.d)
            for cv in values
        )
        params = {"d": req.d, "surface_m": req.surface_m}
    else:
        values = enumerate_threefold_candidates(req.d, req.case)
        kind = f"threefold-{req.case}"
        if req.case == "b":
            recheck = all(
                3 <= cv.a <= req.d and 2 * cv.b > cv.a and cv.b < cv.a for cv in values
            )
        else:
            recheck = all(
                3 <= cv.a <= (req.d - 2) * req.d
                and Fraction((req.d - 2) * cv.a, req.d - 1) < Fraction(cv.b)
                and Fraction(cv.b) <= Fraction(cv.a * (req.d - 1), req.d)
                for cv in values
            )
        params = {"d": req.d, "case": req.case}
    checks = [
        CheckResult.of("enumeration", True, kind=kind, count=len(values)),
        CheckResult.of("inequality-recheck", recheck, count=len(values)),
    ]
    result = {"values": _candidates_payload(values), "count": len(values)}
    return build_report("enumerate", params, checks, None, result)
