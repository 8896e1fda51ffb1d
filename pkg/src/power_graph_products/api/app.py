"""
FastAPI application exposing power graph construction, products and checks.
"""
from typing import List

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..core.config import settings
from ..core.exceptions import PowerGraphError
from ..models.report import VerificationReport
from ..models.requests import (
    BuildRequest,
    ErrorResponse,
    GraphResponse,
    IsoRequest,
    IsoResponse,
    ProductRequest,
    VerifyAllRequest,
    VerifyTheoremRequest,
)
from ..services.toolkit_service import ToolkitService
from ..utils.file_manager import FileManager

app = FastAPI(
    title=settings.app.API_TITLE,
    description=settings.app.API_DESCRIPTION,
    version=settings.app.API_VERSION,
)

# cayley: atoms only resolve inside API_CAYLEY_DIR, and are refused when it is unset
toolkit = ToolkitService(
    file_manager=FileManager(cayley_dir=settings.groups.api_cayley_dir, restrict_cayley=True),
)


@app.get("/")
def root():
    """Root endpoint with API information"""
    return {
        "message": settings.app.API_TITLE,
        "version": settings.app.API_VERSION,
        "docs": "/docs",
        "endpoints": {
            "build": "POST /build",
            "product": "POST /product",
            "verify_theorem": "POST /verify/theorem",
            "verify_all": "POST /verify/all",
            "iso": "POST /iso",
        },
    }


@app.get("/health")
def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "service": "power-graph-products"}


@app.post("/build", response_model=GraphResponse)
def build(request: BuildRequest):
    """
    Power graph of a group expression.

    - **spec**: group expression such as `C2xC2`, `D4`, `S3xC2`
    - **format**: `dot`, `edgelist` or `json`
    """
    graph, content, dump = toolkit.build(request.spec, request.format, dump_weights=request.dump_weights)
    return GraphResponse(
        format=request.format,
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        content=content,
        weights=dump,
    )


@app.post("/product", response_model=GraphResponse)
def product(request: ProductRequest):
    """Product of two power graphs; `generalized` uses the exponent-progression weights."""
    graph, content, dump = toolkit.product(
        request.kind, request.left, request.right, request.format, dump_weights=request.dump_weights
    )
    return GraphResponse(
        format=request.format,
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        content=content,
        weights=dump,
    )


@app.post("/verify/theorem", response_model=VerificationReport)
def verify_theorem(request: VerifyTheoremRequest):
    return toolkit.verify_theorem(request.left, request.right)


@app.post("/verify/all", response_model=List[VerificationReport])
def verify_all(request: VerifyAllRequest):
    return toolkit.verify_all(max_order=request.max_order, seed=request.seed)


@app.post("/iso", response_model=IsoResponse)
def iso(request: IsoRequest):
    witness = toolkit.iso(request.left.to_graph(), request.right.to_graph())
    return IsoResponse(isomorphic=witness is not None, witness=witness)


@app.exception_handler(PowerGraphError)
async def power_graph_exception_handler(request: Request, exc: PowerGraphError):
    """Library errors are client errors: bad expressions, tables or sizes."""
    return JSONResponse(
        status_code=400,
        content=ErrorResponse(
            error=exc.message,
            detail=exc.details,
            error_code=type(exc).__name__,
        ).model_dump(),
    )
