"""
Pydantic models for HTTP requests and responses.
"""
from typing import List, Optional

from pydantic import BaseModel, Field

from ..core.config import settings
from ..utils.export import GraphDocument
from .report import ExportFormat, ProductKind


class BuildRequest(BaseModel):
    """Request model for power graph construction."""

    spec: str = Field(description="Group expression, e.g. C2xC2")
    format: ExportFormat = Field(ExportFormat.EDGELIST, description="Output format")
    dump_weights: bool = Field(False, description="Include the weight table dump")


class ProductRequest(BaseModel):
    """Request model for a product of two power graphs."""

    kind: ProductKind = Field(description="direct, cartesian, normal or generalized")
    left: str = Field(description="Left group expression")
    right: str = Field(description="Right group expression")
    format: ExportFormat = Field(ExportFormat.EDGELIST, description="Output format")
    dump_weights: bool = Field(False, description="Include the factor weight dumps")


class GraphResponse(BaseModel):
    """Response model for a serialized graph."""

    format: ExportFormat
    vertex_count: int
    edge_count: int
    content: str = Field(description="Graph in the requested format")
    weights: Optional[str] = Field(None, description="Weight dump when requested")


class VerifyTheoremRequest(BaseModel):
    left: str
    right: str


class VerifyAllRequest(BaseModel):
    max_order: int = Field(
        settings.verification.max_order,
        ge=1,
        le=settings.verification.MAX_ORDER_CAP,
        description="Largest product order swept",
    )
    seed: int = Field(settings.verification.seed, ge=0, description="Seed for random graphs")


class IsoRequest(BaseModel):
    left: GraphDocument
    right: GraphDocument


class IsoResponse(BaseModel):
    isomorphic: bool
    witness: Optional[List[int]] = Field(None, description="pi with left u~v iff right pi(u)~pi(v)")


class ErrorResponse(BaseModel):
    """Response model for error cases."""

    error: str = Field(description="Error message")
    detail: Optional[str] = Field(None, description="Detailed error information")
    error_code: Optional[str] = Field(None, description="Error code for programmatic handling")
