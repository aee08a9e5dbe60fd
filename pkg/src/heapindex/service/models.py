"""Request/response bodies; index blobs and texts travel base64-encoded."""

from __future__ import annotations

from pydantic import BaseModel


class HealthResponse(BaseModel):
    status: str
    version: str


class BuildRequest(BaseModel):
    text_b64: str
    variant: str = "heap"
    max_pattern: int | None = None


class BuildResponse(BaseModel):
    index_b64: str
    stats: dict


class QueryRequest(BaseModel):
    index_b64: str
    pattern: str


class QueryResponse(BaseModel):
    found: bool
    count: int
    positions: list[int]


class EditRequest(BaseModel):
    index_b64: str
    script: str


class EditResponse(BaseModel):
    index_b64: str
    outputs: list[str]
    stats: dict


class VerifyRequest(BaseModel):
    index_b64: str
    text_b64: str | None = None


class VerifyResponse(BaseModel):
    ok: bool
    checks: list[str]
    stats: dict


class BenchRequest(BaseModel):
    names: list[str]
    texts_b64: list[str]
    variants: list[str] | None = None
    max_pattern: int = 8
    patterns_per_text: int = 4


class BenchResponse(BaseModel):
    tsv: str
