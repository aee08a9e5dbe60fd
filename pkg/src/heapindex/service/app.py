"""Stateless index service: every call carries its own text or index blob."""

from __future__ import annotations

import base64
import binascii

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..bench import bench_tsv, run_bench
from ..editscript import apply_edit_script
from ..storage import (IndexFormatError, VARIANTS, build_index, dump_index,
                       index_stats, load_index, query_index, verify_index)
from .models import (BenchRequest, BenchResponse, BuildRequest, BuildResponse,
                     EditRequest, EditResponse, HealthResponse, QueryRequest,
                     QueryResponse, VerifyRequest, VerifyResponse)


def _bad(code: str, message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": code, "message": message})


def _decode(b64: str, what: str) -> bytes:
    try:
        return base64.b64decode(b64.encode("ascii"), validate=True)
    except (binascii.Error, ValueError) as exc:
        raise _bad("usage", f"{what} is not valid base64: {exc}") from exc


def _encode(blob: bytes) -> str:
    return base64.b64encode(blob).decode("ascii")


def _load(b64: str):
    try:
        return load_index(_decode(b64, "index_b64"))
    except IndexFormatError as exc:
        raise _bad("corrupt", str(exc)) from exc


def create_app() -> FastAPI:
    app = FastAPI(title="heapindex", version=__version__)

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/build", response_model=BuildResponse)
    def build(req: BuildRequest) -> BuildResponse:
        data = _decode(req.text_b64, "text_b64")
        try:
            idx = build_index(data, req.variant, req.max_pattern)
        except ValueError as exc:
            raise _bad("usage", str(exc)) from exc
        return BuildResponse(index_b64=_encode(dump_index(idx)),
                             stats=index_stats(idx))

    @app.post("/query", response_model=QueryResponse)
    def query(req: QueryRequest) -> QueryResponse:
        idx = _load(req.index_b64)
        try:
            hits = query_index(idx, req.pattern)
        except ValueError as exc:
            raise _bad("usage", str(exc)) from exc
        return QueryResponse(found=bool(hits), count=len(hits), positions=hits)

    @app.post("/edit", response_model=EditResponse)
    def edit(req: EditRequest) -> EditResponse:
        idx = _load(req.index_b64)
        if idx.variant != "dynamic":
            raise _bad("usage", f"edit scripts need a dynamic index, got {idx.variant}")
        try:
            outputs = apply_edit_script(idx.dyn, req.script)
        except ValueError as exc:
            raise _bad("usage", str(exc)) from exc
        return EditResponse(index_b64=_encode(dump_index(idx)), outputs=outputs,
                            stats=index_stats(idx))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        idx = _load(req.index_b64)
        checks: list[str] = []
        ok = True
        if req.text_b64 is not None:
            want = tuple(_decode(req.text_b64, "text_b64")) + (0,)
            got = (tuple(ord(c) for c in idx.dyn.current_string())
                   if idx.variant == "dynamic" else tuple(idx.text.codes))
            if got == want:
                checks.append("stored text matches the original")
            else:
                ok = False
                checks.append("stored text differs from the original")
        if ok:
            try:
                checks.extend(verify_index(idx))
            except IndexFormatError as exc:
                ok = False
                checks.append(str(exc))
        return VerifyResponse(ok=ok, checks=checks, stats=index_stats(idx))

    @app.post("/bench", response_model=BenchResponse)
    def bench(req: BenchRequest) -> BenchResponse:
        if len(req.names) != len(req.texts_b64):
            raise _bad("usage", "names and texts_b64 must align")
        variants = req.variants or list(VARIANTS)
        unknown = [v for v in variants if v not in VARIANTS]
        if unknown:
            raise _bad("usage", f"unknown variants {unknown}")
        entries = [(name, _decode(b64, f"texts_b64[{k}]"))
                   for k, (name, b64) in enumerate(zip(req.names, req.texts_b64))]
        try:
            rows = run_bench(entries, variants, req.max_pattern,
                             req.patterns_per_text)
        except ValueError as exc:
            raise _bad("usage", str(exc)) from exc
        return BenchResponse(tsv=bench_tsv(rows))

    return app
