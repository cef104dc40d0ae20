"""Pydantic request/response models for the HTTP surface."""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field


class AnalyzeRequest(BaseModel):
    polynomial: str = Field(description="expression, or full file text with a 'vars:' header")
    variables: Optional[List[str]] = None
    point: Union[str, List[str]]
    modulus: Optional[int] = None
    budget: Optional[int] = None


class CertifyRequest(AnalyzeRequest):
    slice: bool = False


class SurfaceRequest(BaseModel):
    d: int
    m: int
    seed: int = 1
    coeff_bound: int = 10
    max_attempts: int = 25
    budget: Optional[int] = None
    modulus: Optional[int] = None


class ThreefoldRequest(BaseModel):
    d: int
    m: int = 2
    seed: int = 1
    coeff_bound: int = 10
    max_attempts: int = 25
    budget: Optional[int] = None
    modulus: Optional[int] = None


class EnumerateRequest(BaseModel):
    d: int
    surface_m: Optional[int] = None
    case: Optional[Literal["b", "c"]] = None


class RationalModel(BaseModel):
    num: int
    den: int


class WitnessModel(BaseModel):
    degree: int
    multiplicity: int


class CertificateModel(BaseModel):
    kind: str
    lower_bound: RationalModel
    witness: Optional[WitnessModel]
    epsilon: Optional[RationalModel]
    lemma: str
    strict_lower: bool
    params: Dict[str, int]
    warnings: List[str]


class CheckModel(BaseModel):
    name: str
    status: Literal["pass", "fail", "skipped"]
    data: Dict[str, Any]


class ReportModel(BaseModel):
    command: str
    version: str
    params: Dict[str, Any]
    checks: List[CheckModel]
    certificate: Optional[CertificateModel]
    result: Optional[Dict[str, Any]]
    elapsed_ms: int


class HealthModel(BaseModel):
    status: str
    version: str
