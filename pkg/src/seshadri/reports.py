"""Run reports: the stable JSON shape shared by the service and the CLI.

Exact rationals serialize as ``{"num": ..., "den": ...}`` integer pairs and
no floating point value ever appears.  Reports are deterministic functions
of (command, parameters, seed): key order is fixed by construction and the
``elapsed_ms`` field is pinned to 0 in emitted JSON so that identical runs
are byte-identical; wall-clock timing is reported out of band (stderr, or
the text renderer).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .certificates import BoundCertificate, CERTIFICATE_KINDS
from .checks import CheckResult

VERSION = "0.1.0"

COMMANDS = ("analyze", "construct-surface", "construct-threefold", "enumerate", "certify")


def rational_pair(value) -> Dict[str, int]:
    q = Fraction(value)
    return {"num": q.numerator, "den": q.denominator}


def _sanitize(value: Any) -> Any:
    """Make check data JSON-safe without ever producing a float."""
    if isinstance(value, bool) or value is None or isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return rational_pair(value)
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_sanitize(v) for v in value]
    return str(value)


def check_to_dict(check: CheckResult) -> Dict[str, Any]:
    return {"name": check.name, "status": check.status, "data": _sanitize(check.data)}


def certificate_to_dict(cert: Optional[BoundCertificate]) -> Optional[Dict[str, Any]]:
    if cert is None:
        return None
    return {
        "kind": cert.kind,
        "lower_bound": rational_pair(cert.lower_bound),
        "witness": (
            None
            if cert.witness is None
            else {"degree": cert.witness.degree, "multiplicity": cert.witness.multiplicity}
        ),
        "epsilon": None if cert.epsilon is None else rational_pair(cert.epsilon),
        "lemma": cert.lemma,
        "strict_lower": cert.strict,
        "params": dict(cert.params),
        "warnings": list(cert.warnings),
    }


def build_report(
    command: str,
    params: Dict[str, Any],
    checks: List[CheckResult],
    certificate: Optional[BoundCertificate] = None,
    result: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    return {
        "command": command,
        "version": VERSION,
        "params": _sanitize(params),
        "checks": [check_to_dict(c) for c in checks],
        "certificate": certificate_to_dict(certificate),
        "result": _sanitize(result) if result is not None else None,
        "elapsed_ms": 0,
    }


def dumps_report(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def report_ok(report: Dict[str, Any]) -> bool:
    """True when no check failed (skipped checks do not count as failures)."""
    if any(c["status"] == "fail" for c in report["checks"]):
        return False
    result = report.get("result")
    if isinstance(result, dict) and result.get("verified") is False:
        return False
    return True


def render_text(report: Dict[str, Any], elapsed_ms: Optional[int] = None) -> str:
    """Human-oriented rendering; the only place real timing may appear."""
    lines = [f"command: {report['command']}   (v{report['version']})"]
    if report["params"]:
        fields = ", ".join(f"{k}={_fmt(v)}" for k, v in report["params"].items())
        lines.append(f"params: {fields}")
    for check in report["checks"]:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[check["status"]]
        data = ", ".join(f"{k}={_fmt(v)}" for k, v in check["data"].items())
        lines.append(f"  [{mark}] {check['name']}" + (f": {data}" if data else ""))
    cert = report["certificate"]
    if cert is not None:
        eps = _fmt(cert["epsilon"]) if cert["epsilon"] else "not pinned"
        wit = (
            f"curve degree {cert['witness']['degree']}, multiplicity {cert['witness']['multiplicity']}"
            if cert["witness"]
            else "none"
        )
        bound = _fmt(cert["lower_bound"]) + (" (strict)" if cert.get("strict_lower") else "")
        lines.append(f"certificate: {cert['kind']} via {cert['lemma']}")
        lines.append(f"  lower bound: {bound}   witness: {wit}   epsilon: {eps}")
        for w in cert.get("warnings", []):
            lines.append(f"  warning: {w}")
    result = report.get("result")
    if isinstance(result, dict):
        if "verified" in result:
            lines.append("result: " + ("VERIFIED" if result["verified"] else "NOT VERIFIED"))
        for key, value in result.items():
            if key == "verified":
                continue
            lines.append(f"  {key}: {_fmt(value)}")
    if elapsed_ms is not None:
        lines.append(f"elapsed: {elapsed_ms} ms")
    return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return f"{value['num']}/{value['den']}" if value["den"] != 1 else str(value["num"])
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


RATIONAL_SCHEMA = {
    "type": "object",
    "required": ["num", "den"],
    "properties": {"num": {"type": "integer"}, "den": {"type": "integer", "exclusiveMinimum": 0}},
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "version", "params", "checks", "certificate", "elapsed_ms"],
    "properties": {
        "command": {"type": "string", "enum": list(COMMANDS)},
        "version": {"type": "string"},
        "params": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "data"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"type": "string", "enum": ["pass", "fail", "skipped"]},
                    "data": {"type": "object"},
                },
            },
        },
        "certificate": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["kind", "lower_bound", "witness", "epsilon"],
                    "properties": {
                        "kind": {"type": "string", "enum": list(CERTIFICATE_KINDS)},
                        "lower_bound": RATIONAL_SCHEMA,
                        "witness": {
                            "oneOf": [
                                {"type": "null"},
                                {
                                    "type": "object",
                                    "required": ["degree", "multiplicity"],
                                    "properties": {
                                        "degree": {"type": "integer"},
                                        "multiplicity": {"type": "integer"},
                                    },
                                },
                            ]
                        },
                        "epsilon": {"oneOf": [{"type": "null"}, RATIONAL_SCHEMA]},
                    },
                },
            ]
        },
        "elapsed_ms": {"type": "integer"},
    },
}
