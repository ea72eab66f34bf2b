"""Request/response models for the fusion service."""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Family = Literal["A", "B", "C", "D", "E", "F", "G"]
Method = Literal["auto", "weight", "partition", "epattern", "fold", "oracle"]


class DiagramIn(BaseModel):
    family: Family
    rank: int
    plus: list[int] = Field(default_factory=list)
    minus: list[int] = Field(default_factory=list)


class FuseRequest(BaseModel):
    diagram: DiagramIn
    method: Method = "auto"
    relaxed_pattern4: bool = False


class FuseResponse(BaseModel):
    j: list[int]
    canonical_j: Optional[list[int]]
    method: str
    partition: Optional[list[int]]
    levi_type: str
    notes: list[str] = Field(default_factory=list)


class PartitionRequest(BaseModel):
    diagram: DiagramIn


class PartitionResponse(BaseModel):
    partition: list[int]
    digraph_size: int
    arcs: list[list[int]]


class ConjugacyRequest(BaseModel):
    family: Family
    rank: int
    j: list[int]
    j_prime: list[int]
    orbit_oracle: bool = False


class ConjugacyResponse(BaseModel):
    conjugate: bool
    canonical_j: list[int]
    canonical_j_prime: list[int]
    orbit_oracle_used: bool


class EnumerateRequest(BaseModel):
    family: Family
    rank: int


class EnumerateRecord(BaseModel):
    plus: list[int]
    minus: list[int]
    j: list[int]
    canonical_j: Optional[list[int]]
    levi_type: str


class EnumerateResponse(BaseModel):
    family: Family
    rank: int
    records: list[EnumerateRecord]


class VerifyRequest(BaseModel):
    family: Family
    rank: int
    methods: Optional[list[str]] = None
    sparse: bool = False
    branch_ties: bool = False
    relaxed_pattern4: bool = False
    workers: int = 1


class MismatchRecord(BaseModel):
    plus: list[int]
    minus: list[int]
    detail: str


class VerifyResponse(BaseModel):
    family: Family
    rank: int
    methods: list[str]
    sparse: bool
    branch_ties: bool
    inputs_checked: int
    mismatches: list[MismatchRecord]
    detection_gaps: list[dict]
    ambiguous_signatures: int
    per_method: dict
    elapsed_seconds: float
    ok: bool


class ErrorBody(BaseModel):
    error: str
    detail: str
