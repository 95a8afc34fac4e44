"""Pydantic request/response models for the HTTP service."""

from typing import Literal

from pydantic import BaseModel, Field


class ProfileRequest(BaseModel):
    fds: str


class ProfileResponse(BaseModel):
    profile: str


class RealizeRequest(BaseModel):
    profile: str
    dot: bool = False


class RealizeResponse(BaseModel):
    fds: str | None = None
    dot: str | None = None


class TableRequest(BaseModel):
    max_size: int = Field(ge=0, le=10)


class TableResponse(BaseModel):
    headers: list[str]
    rows: list[list[str]]
    text: str


class FactorRequest(BaseModel):
    profile: str


class FactorResponse(BaseModel):
    irreducible: bool
    factorisations: list[list[str]]


class DivisorsResponse(BaseModel):
    divisors: list[str]


class IrreducibleResponse(BaseModel):
    irreducible: bool


class SolveRequest(BaseModel):
    system: str
    mode: Literal["first", "all", "count"] = "all"
    max_candidates: int | None = None
    threads: int = Field(default=1, ge=1)


class SolveResponse(BaseModel):
    count: int
    solutions: list[dict[str, str]]
    text: str


class SatRequest(BaseModel):
    cnf: str
    single: bool = False
    mode: Literal["first", "all", "count"] = "all"
    max_candidates: int | None = None
    threads: int = Field(default=1, ge=1)


class SatResponse(BaseModel):
    count: int
    solutions: list[dict[str, str]]
    booleans: list[dict[int, bool] | None]
    system: str
    text: str


class CensusRequest(BaseModel):
    n: int = Field(ge=1)
    cap: int = Field(default=20, ge=1)


class CensusRow(BaseModel):
    n: int
    total: int
    reducible: int
    bound: float
    ratio: str
    ratio_float: float


class CensusResponse(BaseModel):
    rows: list[CensusRow]
    table: str
    machine: str
