"""FastAPI application exposing the five commands as JSON endpoints."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import BudgetExceededError, ParameterError, ParseError, SeshadriError
from ..reports import VERSION
from . import handlers
from .models import (
    AnalyzeRequest,
    CertifyRequest,
    EnumerateRequest,
    HealthModel,
    ReportModel,
    SurfaceRequest,
    ThreefoldRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="seshadri",
        version=VERSION,
        description=(
            "Exact local-positivity certificates for hyperplane bundles: "
            "multiplicities, tangent cones, line detection, candidate-value "
            "enumeration and verified singular example families."
        ),
    )

    @app.exception_handler(ParseError)
    async def _parse_error(request: Request, exc: ParseError):
        return JSONResponse(status_code=422, content={"error": str(exc), "kind": "parse"})

    @app.exception_handler(ParameterError)
    async def _param_error(request: Request, exc: ParameterError):
        return JSONResponse(status_code=422, content={"error": str(exc), "kind": "usage"})

    @app.exception_handler(BudgetExceededError)
    async def _budget_error(request: Request, exc: BudgetExceededError):
        return JSONResponse(
            status_code=400, content={"error": str(exc), "kind": "budget", "steps": exc.steps}
        )

    @app.exception_handler(SeshadriError)
    async def _domain_error(request: Request, exc: SeshadriError):
        return JSONResponse(status_code=422, content={"error": str(exc), "kind": "domain"})

    @app.get("/healthz", response_model=HealthModel)
    def healthz() -> HealthModel:
        return HealthModel(status="ok", version=VERSION)

    @app.post("/v1/analyze", response_model=ReportModel)
    def analyze(req: AnalyzeRequest):
        return handlers.handle_analyze(req)

    @app.post("/v1/certify", response_model=ReportModel)
    def certify(req: CertifyRequest):
        return handlers.handle_certify(req)

    @app.post("/v1/construct/surface", response_model=ReportModel)
    def construct_surface(req: SurfaceRequest):
        return handlers.handle_construct_surface(req)

    @app.post("/v1/construct/threefold", response_model=ReportModel)
    def construct_threefold(req: ThreefoldRequest):
        return handlers.handle_construct_threefold(req)

    @app.post("/v1/enumerate", response_model=ReportModel)
    def enumerate_values(req: EnumerateRequest):
        return handlers.handle_enumerate(req)

    return app


app = create_app()
