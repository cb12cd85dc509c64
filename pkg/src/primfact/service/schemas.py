"""Pydantic request/response models for the HTTP service.

Values are exact strings (integers in decimal, rationals as "p/q"); series
come back as arrays of such strings.  Nothing is ever a float.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field


class QueryResponse(BaseModel):
    query: dict
    value: Union[str, list[str]]
    method: str
    elapsed_ms: int


class CountRequest(BaseModel):
    perm: str = Field(description='cycle notation "(1 2 3)" or image list "2,3,1"')
    length: Optional[int] = None
    type: Optional[str] = Field(default=None, description='partition text like "2,1"')
    method: Literal["auto", "brute", "jm", "character"] = "auto"


class MinimalRequest(BaseModel):
    cycle_type: str = Field(description="non-reduced cycle type, e.g. '6,4'")
    type: Optional[str] = None


class FullCycleRequest(BaseModel):
    n: int
    genus: int = 0
    method: Literal["cf", "sinh", "brute"] = "cf"


class HurwitzRequest(BaseModel):
    cycle_type: str
    genus: Optional[int] = None


class PhiRequest(BaseModel):
    cycle_type: str
    order: int = 0
    closed_form: bool = False


class CorrelatorRequest(BaseModel):
    perm: str
    dim: int
    method: Literal["gram", "character"] = "gram"


class VerifyRequest(BaseModel):
    suite: Literal["all", "minimal", "jm", "character", "matrix"] = "all"
    max_n: int = 4
    jobs: int = 1


class CaseResultModel(BaseModel):
    key: str
    passed: bool
    detail: str
    elapsed_ms: int


class VerifyResponse(BaseModel):
    suite: str
    max_n: int
    passed: bool
    cases: list[CaseResultModel]
