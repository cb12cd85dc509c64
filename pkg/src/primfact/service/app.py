"""FastAPI service exposing the counting operations.

All endpoints are POST with a JSON body and return the same document shape
the CLI prints with --json, so the CLI can run against a server (--server)
or in-process with identical output.  Long-lived processes amortize the
cached tables (character tables, Weingarten solves, rank shuffles) across
queries.

Error mapping: UsageError -> 400, search budget -> 503, anything else -> 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import queries
from ..errors import BudgetExceededError, UsageError
from .schemas import (
    CorrelatorRequest,
    CountRequest,
    FullCycleRequest,
    HurwitzRequest,
    MinimalRequest,
    PhiRequest,
    QueryResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="primfact",
    description="Exact counts of primitive transposition factorizations",
)


@app.exception_handler(UsageError)
def usage_error(_: Request, exc: UsageError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(BudgetExceededError)
def budget_error(_: Request, exc: BudgetExceededError) -> JSONResponse:
    return JSONResponse(status_code=503, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/count", response_model=QueryResponse)
def count(req: CountRequest) -> QueryResponse:
    result = queries.run_count(req.perm, req.length, req.type, req.method)
    return QueryResponse(**result.to_dict())


@app.post("/minimal", response_model=QueryResponse)
def minimal(req: MinimalRequest) -> QueryResponse:
    result = queries.run_minimal(req.cycle_type, req.type)
    return QueryResponse(**result.to_dict())


@app.post("/full-cycle", response_model=QueryResponse)
def full_cycle(req: FullCycleRequest) -> QueryResponse:
    result = queries.run_full_cycle(req.n, req.genus, req.method)
    return QueryResponse(**result.to_dict())


@app.post("/hurwitz", response_model=QueryResponse)
def hurwitz(req: HurwitzRequest) -> QueryResponse:
    result = queries.run_hurwitz(req.cycle_type, req.genus)
    return QueryResponse(**result.to_dict())


@app.post("/phi", response_model=QueryResponse)
def phi(req: PhiRequest) -> QueryResponse:
    result = queries.run_phi(req.cycle_type, req.order, req.closed_form)
    return QueryResponse(**result.to_dict())


@app.post("/correlator", response_model=QueryResponse)
def correlator(req: CorrelatorRequest) -> QueryResponse:
    result = queries.run_correlator(req.perm, req.dim, req.method)
    return QueryResponse(**result.to_dict())


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    report = queries.run_verify(req.suite, req.max_n, req.jobs)
    return VerifyResponse(**queries.verify_report_dict(report))
