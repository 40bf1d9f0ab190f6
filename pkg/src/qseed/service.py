"""FastAPI service exposing the toolkit: builds, analysis, verification and
sweeps as JSON endpoints.

The service is stateless; identical requests produce identical responses.
Run it with `uvicorn qseed.service:app` or drive it in-process through the
CLI, which mounts the app over an ASGI transport.
"""

from __future__ import annotations

from typing import Dict, List, Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .closedforms import UnsupportedFamilyError
from .exactmat import DimensionError
from .families import AssumptionError, Family, FamilySpec
from .minors import NotQCommutingError
from .reports import VERIFY_CHECKS, analyze_report, sweep_report, verify_check
from .seeds import ReductionShapeError
from .serialize import matrix_from_json, matrix_to_json, spec_from_json
from .families import build_H
from .seeds import build_lambda

app = FastAPI(
    title="qseed",
    version=__version__,
    description="Exact-arithmetic service for defining matrices, "
    "quasi-commutation matrices and quantum seeds of quantized matrix algebras.",
)

FamilyName = Literal["frt", "dd", "c1", "c2", "ext", "custom"]


class MatrixModel(BaseModel):
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    entries: List[str]


class SpecModel(BaseModel):
    kind: FamilyName
    n: int = Field(ge=1)
    r: int = Field(ge=1)
    A: Optional[MatrixModel] = None
    M: Optional[MatrixModel] = None

    def to_spec(self) -> FamilySpec:
        a = matrix_from_json(self.A.model_dump()) if self.A is not None else None
        m = matrix_from_json(self.M.model_dump()) if self.M is not None else None
        return FamilySpec(kind=Family(self.kind), n=self.n, r=self.r, A=a, M=m)


class BuildRequest(BaseModel):
    spec: SpecModel


class BuildResponse(BaseModel):
    matrix: MatrixModel


class AnalyzeRequest(BaseModel):
    spec: SpecModel
    m: List[int] = Field(default_factory=list, description="root orders for degrees")


class CenterGeneratorModel(BaseModel):
    exponents: List[int]
    label: str


class AnalyzeResponse(BaseModel):
    spec: dict
    corank: int
    det: Optional[str]
    blocks: Dict[str, int]
    degree: Dict[str, int]
    centerGenerators: Optional[List[CenterGeneratorModel]]


class VerifyRequest(BaseModel):
    spec: SpecModel
    cap: Optional[int] = Field(default=None, ge=1)


class VerifyResponse(BaseModel):
    check: str
    spec: dict
    status: Literal["pass", "fail"]
    failures: List[str]
    details: dict


class SweepRequest(BaseModel):
    families: List[FamilyName] = Field(default=["dd", "frt", "c1", "c2"])
    n: List[int] = Field(default=[2, 6], min_length=2, max_length=2)
    r: List[int] = Field(default=[2, 6], min_length=2, max_length=2)
    m: List[int] = Field(default_factory=list)
    workers: Optional[int] = Field(default=None, ge=1)


class SweepResponse(BaseModel):
    status: Literal["pass", "fail"]
    rows: List[dict]
    counterexample: Optional[dict]


_DOMAIN_ERRORS = (
    ValueError,
    DimensionError,
    AssumptionError,
    UnsupportedFamilyError,
    ReductionShapeError,
    NotQCommutingError,
)


def _spec_or_400(model: SpecModel) -> FamilySpec:
    try:
        return model.to_spec()
    except _DOMAIN_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/build/h", response_model=BuildResponse)
def build_h_endpoint(req: BuildRequest) -> BuildResponse:
    spec = _spec_or_400(req.spec)
    try:
        h = build_H(spec)
    except _DOMAIN_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return BuildResponse(matrix=MatrixModel(**matrix_to_json(h)))


@app.post("/build/lambda", response_model=BuildResponse)
def build_lambda_endpoint(req: BuildRequest) -> BuildResponse:
    spec = _spec_or_400(req.spec)
    try:
        lam = build_lambda(spec)
    except _DOMAIN_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return BuildResponse(matrix=MatrixModel(**matrix_to_json(lam)))


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze_endpoint(req: AnalyzeRequest) -> AnalyzeResponse:
    spec = _spec_or_400(req.spec)
    try:
        report = analyze_report(spec, req.m)
    except _DOMAIN_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return AnalyzeResponse(**report)


@app.post("/verify/{check}", response_model=VerifyResponse)
def verify_endpoint(check: str, req: VerifyRequest) -> VerifyResponse:
    if check not in VERIFY_CHECKS:
        raise HTTPException(
            status_code=400, detail=f"unknown check {check!r}; choose from {VERIFY_CHECKS}"
        )
    spec = _spec_or_400(req.spec)
    try:
        result = verify_check(check, spec, cap=req.cap)
    except _DOMAIN_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return VerifyResponse(**result)


@app.post("/sweep", response_model=SweepResponse)
def sweep_endpoint(req: SweepRequest) -> SweepResponse:
    if req.n[0] > req.n[1] or req.r[0] > req.r[1]:
        raise HTTPException(status_code=400, detail="empty sweep range")
    if "custom" in req.families:
        raise HTTPException(status_code=400, detail="custom specs cannot be swept")
    try:
        report = sweep_report(req.families, req.n, req.r, req.m, workers=req.workers)
    except _DOMAIN_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return SweepResponse(**report)
