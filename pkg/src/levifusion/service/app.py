"""FastAPI application wrapping the fusion package.

Run with ``levifusion serve`` or ``uvicorn levifusion.service.app:app``.
Keeping one process alive amortizes the type-E signature tables across
requests (they are also cached on disk under FUSION_CACHE_DIR).
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (CapabilityError, InputError, LeviFusionError,
                      StabilityError, UnsupportedFamilyError)
from . import handlers, schemas

app = FastAPI(
    title="levifusion",
    version=__version__,
    description="Fusion of labeled Dynkin diagrams onto Weyl-conjugacy "
                "classes of Levi subsets.",
)

_CLIENT_ERRORS = (InputError, UnsupportedFamilyError, CapabilityError,
                  StabilityError)


@app.exception_handler(LeviFusionError)
async def _package_error(request: Request, exc: LeviFusionError):
    status = 422 if isinstance(exc, _CLIENT_ERRORS) else 500
    body = schemas.ErrorBody(error=type(exc).__name__, detail=str(exc))
    return JSONResponse(status_code=status, content=body.model_dump())


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/fuse", response_model=schemas.FuseResponse)
def fuse(req: schemas.FuseRequest):
    return handlers.handle_fuse(req)


@app.post("/partition", response_model=schemas.PartitionResponse)
def partition(req: schemas.PartitionRequest):
    return handlers.handle_partition(req)


@app.post("/conjugacy", response_model=schemas.ConjugacyResponse)
def conjugacy(req: schemas.ConjugacyRequest):
    return handlers.handle_conjugacy(req)


@app.post("/enumerate", response_model=schemas.EnumerateResponse)
def enumerate_(req: schemas.EnumerateRequest):
    return handlers.handle_enumerate(req)


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest):
    return handlers.handle_verify(req)
