"""
Graph serialization: DOT, sorted edge lists and a JSON document format.
"""
from typing import List, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..core.exceptions import GraphParseError
from ..models.graph import SimpleGraph
from ..models.report import ExportFormat


class GraphDocument(BaseModel):
    """JSON form of a graph: labels plus sorted index pairs with i < j."""

    vertices: List[str] = Field(default_factory=list, description="Vertex labels")
    edges: List[Tuple[int, int]] = Field(default_factory=list, description="Index pairs")

    @model_validator(mode="after")
    def edges_in_range(self):
        """Every edge joins two distinct existing vertices."""
        n = len(self.vertices)
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) references a missing vertex")
            if u == v:
                raise ValueError(f"Edge ({u}, {v}) is a self-loop")
        return self

    @classmethod
    def from_graph(cls, graph: SimpleGraph) -> "GraphDocument":
        return cls(vertices=list(graph.labels), edges=graph.edges())

    def to_graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(len(self.vertices), self.edges, self.vertices)


def _quote(label: str) -> str:
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def to_dot(graph: SimpleGraph) -> str:
    """DOT text; isolated vertices are listed before the edges."""
    lines = ["graph {"]
    degrees = graph.degrees()
    for v in range(graph.vertex_count):
        if degrees[v] == 0:
            lines.append(f"  {_quote(graph.labels[v])};")
    for u, v in graph.edges():
        lines.append(f"  {_quote(graph.labels[u])} -- {_quote(graph.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edgelist(graph: SimpleGraph) -> str:
    """One ``label_u,label_v`` line per edge, lines sorted lexicographically."""
    lines = sorted(f"{graph.labels[u]},{graph.labels[v]}" for u, v in graph.edges())
    return "".join(line + "\n" for line in lines)


def to_json(graph: SimpleGraph) -> str:
    return GraphDocument.from_graph(graph).model_dump_json()


def export_graph(graph: SimpleGraph, fmt: Union[ExportFormat, str]) -> str:
    fmt = ExportFormat(fmt)
    if fmt is ExportFormat.DOT:
        return to_dot(graph)
    if fmt is ExportFormat.EDGELIST:
        return to_edgelist(graph)
    return to_json(graph)


def parse_graph_json(text: str) -> SimpleGraph:
    """Inverse of :func:`to_json`."""
    try:
        document = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphParseError("Invalid graph JSON", details=str(e))
    return document.to_graph()
