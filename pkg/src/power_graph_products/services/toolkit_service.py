"""
Toolkit service: the operations behind the command line and HTTP surfaces.
"""
from collections import Counter
from typing import List, Optional, Tuple, Union

from ..core.config import settings
from ..core.logging import get_logger
from ..models.graph import SimpleGraph
from ..models.report import ExportFormat, GroupStats, ProductKind, VerificationReport
from ..utils.export import export_graph
from ..utils.file_manager import FileManager
from .graph_service import GraphService
from .group_service import GroupService
from .power_graph_service import PowerGraphBundle, PowerGraphService
from .product_service import ProductService
from .verification_service import VerificationService

logger = get_logger(__name__)

Rendered = Tuple[SimpleGraph, str, Optional[str]]


class ToolkitService:
    """Builds power graphs and products from group expressions and runs checks."""

    def __init__(self, default_format: Optional[str] = None, file_manager: Optional[FileManager] = None):
        self.default_format = ExportFormat(default_format or settings.graphs.DEFAULT_FORMAT)
        self.file_manager = file_manager or FileManager()
        self.group_service = GroupService(self.file_manager)
        self.power_graphs = PowerGraphService()
        self.products = ProductService()
        self.graphs = GraphService()
        self.verification = VerificationService(
            self.group_service, self.power_graphs, self.products, self.graphs
        )

    def _format(self, fmt: Optional[Union[ExportFormat, str]]) -> ExportFormat:
        return ExportFormat(fmt) if fmt else self.default_format

    def bundle(self, spec: str) -> PowerGraphBundle:
        bundle = self.power_graphs.bundle(self.group_service.from_spec(spec))
        logger.info("%s: order %d, %d power graph edges", spec, bundle.group.order, bundle.graph.edge_count)
        return bundle

    def build(self, spec: str, fmt: Optional[str] = None, dump_weights: bool = False) -> Rendered:
        """Power graph of ``spec``: the graph, its export and, on request, the weights dump."""
        bundle = self.bundle(spec)
        dump = bundle.weights.dump(bundle.group.labels) if dump_weights else None
        return bundle.graph, export_graph(bundle.graph, self._format(fmt)), dump

    def product(
        self,
        kind: Union[ProductKind, str],
        left_spec: str,
        right_spec: str,
        fmt: Optional[str] = None,
        dump_weights: bool = False,
    ) -> Rendered:
        """Product of two power graphs; ``generalized`` uses the exponent-progression weights."""
        kind = ProductKind(kind)
        left, right = self.bundle(left_spec), self.bundle(right_spec)
        if kind is ProductKind.GENERALIZED:
            graph = self.products.generalized(left.graph, left.weights, right.graph, right.weights)
        else:
            graph = self.products.classical(kind, left.graph, right.graph)
        dump = None
        if dump_weights:
            dump = "\n".join(
                part for part in (
                    f"# {left_spec}",
                    left.weights.dump(left.group.labels),
                    f"# {right_spec}",
                    right.weights.dump(right.group.labels),
                ) if part
            )
        return graph, export_graph(graph, self._format(fmt)), dump

    def verify_theorem(self, left_spec: str, right_spec: str) -> VerificationReport:
        return self.verification.verify_power_product(
            self.group_service.from_spec(left_spec),
            self.group_service.from_spec(right_spec),
            spec1=left_spec,
            spec2=right_spec,
        )

    def verify_all(
        self,
        max_order: Optional[int] = None,
        seed: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> List[VerificationReport]:
        return self.verification.verify_all(max_order=max_order, seed=seed, workers=workers)

    def load_graph(self, path) -> SimpleGraph:
        return self.file_manager.load_graph_json(path)

    def iso(self, left: SimpleGraph, right: SimpleGraph) -> Optional[List[int]]:
        """Witness permutation if the graphs are isomorphic, else None."""
        witness = self.graphs.find_isomorphism(left, right)
        logger.info("Isomorphism test on %d vertices: %s", left.vertex_count, "found" if witness is not None else "none")
        return witness

    def stats(self, spec: str) -> GroupStats:
        bundle = self.bundle(spec)
        group, graph = bundle.group, bundle.graph
        degrees = graph.degrees()
        n = graph.vertex_count
        histogram = Counter(int(order) for order in group.element_orders)
        return GroupStats(
            spec=spec,
            order=group.order,
            abelian=group.is_abelian(),
            order_histogram=dict(sorted(histogram.items())),
            edge_count=graph.edge_count,
            min_degree=int(degrees.min()),
            max_degree=int(degrees.max()),
            universal_vertices=len(self.graphs.universal_vertices(graph)),
            complete=graph.edge_count == n * (n - 1) // 2,
        )
