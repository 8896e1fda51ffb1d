"""
Models for product kinds, export formats and verification reports.
"""
from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_validator


class ProductKind(str, Enum):
    """Graph products. ``cartesian`` is the box product, ``normal`` the strong product."""
    DIRECT = "direct"
    CARTESIAN = "cartesian"
    NORMAL = "normal"
    GENERALIZED = "generalized"


class WeightKind(str, Enum):
    """Constant-by-case generalizations exhibiting the classical products."""
    DIRECT = "direct"
    CARTESIAN_LEFT = "cartesian-left"
    CARTESIAN_RIGHT = "cartesian-right"
    NORMAL = "normal"


class ExportFormat(str, Enum):
    """Graph serialization formats."""
    DOT = "dot"
    EDGELIST = "edgelist"
    JSON = "json"


class InstanceResult(BaseModel):
    """Outcome of one claim on one group pair or graph pair."""

    instance: str = Field(description="Group specs or graph description tested")
    passed: bool = Field(description="Whether the claim held")
    details: Dict[str, Union[int, str, bool]] = Field(default_factory=dict, description="Edge counts and similar facts")
    counterexample: List[str] = Field(default_factory=list, description="Evidence dump for failures")

    @model_validator(mode="after")
    def failure_has_counterexample(self):
        """A failing instance must carry a nonempty counterexample."""
        if not self.passed and not self.counterexample:
            raise ValueError(f"Failing instance {self.instance!r} has no counterexample")
        return self


class VerificationReport(BaseModel):
    """All instances checked for one claim."""

    claim: str = Field(description="Claim identifier")
    instances: List[InstanceResult] = Field(default_factory=list)
    skipped: Optional[str] = Field(None, description="Reason the claim was not exercised")
    informational: bool = Field(False, description="Failures are recorded but do not fail the run")
    wall_time: float = Field(0.0, ge=0.0, description="Seconds spent on this claim")

    @property
    def failures(self) -> List[InstanceResult]:
        return [result for result in self.instances if not result.passed]

    @property
    def passed(self) -> bool:
        return self.informational or not self.failures


class GroupStats(BaseModel):
    """Summary of a group and its power graph."""

    spec: str
    order: int
    abelian: bool
    order_histogram: Dict[int, int] = Field(description="Element order -> number of elements")
    edge_count: int
    min_degree: int
    max_degree: int
    universal_vertices: int
    complete: bool
