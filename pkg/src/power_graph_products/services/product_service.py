"""
Graph products on a shared vertex encoding: (i, j) is vertex i*|V(b)| + j.

``cartesian`` is the box product and ``normal`` the strong product; the
generalized product reads only the weights, never the factors' edges.
"""
from typing import Union

import numpy as np

from ..core.config import settings
from ..core.exceptions import SizeCapError
from ..core.logging import get_logger
from ..models.generalization import Generalization
from ..models.graph import SimpleGraph
from ..models.report import ProductKind, WeightKind
from ..utils.progressions import intersect_positively_table
from .group_service import pair_labels

logger = get_logger(__name__)

# (arc weight, diagonal weight) per constant-by-case generalization
_CLASSICAL_WEIGHTS = {
    WeightKind.DIRECT: ((1, 1), (0, 0)),
    WeightKind.CARTESIAN_LEFT: ((1, 0), (1, 1)),
    WeightKind.CARTESIAN_RIGHT: ((2, 0), (1, 1)),
    WeightKind.NORMAL: ((1, 0), (1, 1)),
}

_CLASSICAL_PAIRS = {
    ProductKind.DIRECT: (WeightKind.DIRECT, WeightKind.DIRECT),
    ProductKind.CARTESIAN: (WeightKind.CARTESIAN_LEFT, WeightKind.CARTESIAN_RIGHT),
    ProductKind.NORMAL: (WeightKind.NORMAL, WeightKind.NORMAL),
}


def _kron(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.kron(x.astype(np.uint8), y.astype(np.uint8)).astype(bool)


class ProductService:
    """Direct, cartesian, normal and generalized products of simple graphs."""

    def _check_size(self, a: SimpleGraph, b: SimpleGraph) -> int:
        size = a.vertex_count * b.vertex_count
        if size > settings.graphs.max_product_vertices:
            raise SizeCapError(
                f"Product of {a.vertex_count} and {b.vertex_count} vertices exceeds the cap of "
                f"{settings.graphs.max_product_vertices}"
            )
        return size

    def _product(self, a: SimpleGraph, b: SimpleGraph, adjacency: np.ndarray) -> SimpleGraph:
        adjacency = adjacency.astype(bool)
        np.fill_diagonal(adjacency, False)
        graph = SimpleGraph(adjacency, pair_labels(a.labels, b.labels))
        logger.debug("Product of %d and %d vertices: %d edges", a.vertex_count, b.vertex_count, graph.edge_count)
        return graph

    def direct(self, a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
        """(g1, g2) ~ (h1, h2) iff g1 ~ h1 and g2 ~ h2."""
        self._check_size(a, b)
        return self._product(a, b, _kron(a.adjacency, b.adjacency))

    def cartesian(self, a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
        """Move along exactly one coordinate while the other stays fixed."""
        self._check_size(a, b)
        eye_a = np.eye(a.vertex_count, dtype=bool)
        eye_b = np.eye(b.vertex_count, dtype=bool)
        return self._product(a, b, _kron(a.adjacency, eye_b) | _kron(eye_a, b.adjacency))

    def normal(self, a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
        """Union of the direct and cartesian adjacencies."""
        self._check_size(a, b)
        eye_a = np.eye(a.vertex_count, dtype=bool)
        eye_b = np.eye(b.vertex_count, dtype=bool)
        adjacency = (
            _kron(a.adjacency, b.adjacency)
            | _kron(a.adjacency, eye_b)
            | _kron(eye_a, b.adjacency)
        )
        return self._product(a, b, adjacency)

    def generalized(
        self,
        a: SimpleGraph,
        wa: Generalization,
        b: SimpleGraph,
        wb: Generalization,
    ) -> SimpleGraph:
        """
        Distinct (g1, g2), (h1, h2) are adjacent iff AP(wa(g1, h1)) and
        AP(wb(g2, h2)) share a positive term, or AP(wa(h1, g1)) and
        AP(wb(h2, g2)) do.
        """
        if wa.vertex_count != a.vertex_count or wb.vertex_count != b.vertex_count:
            raise ValueError("Each generalization must cover its graph's vertices")
        self._check_size(a, b)
        n, m = a.vertex_count, b.vertex_count
        # hits[i, k, j, l]: wa(i, k) and wb(j, l) share a positive term
        hits = intersect_positively_table(
            wa.starts[:, :, None, None],
            wa.steps[:, :, None, None],
            wb.starts[None, None, :, :],
            wb.steps[None, None, :, :],
        )
        forward = hits.transpose(0, 2, 1, 3).reshape(n * m, n * m)
        return self._product(a, b, forward | forward.T)

    def classical_weights(self, kind: Union[WeightKind, str], graph: SimpleGraph) -> Generalization:
        """
        Constant-by-case generalizations under which the generalized product
        reproduces a classical one. As (arc weight, diagonal weight):

        - direct: (1, 1), (0, 0)
        - cartesian-left: (1, 0), (1, 1)
        - cartesian-right: (2, 0), (1, 1)
        - normal: (1, 0), (1, 1)

        Distinct non-adjacent pairs get the sentinel (0, 0).
        """
        arc_weight, diagonal_weight = _CLASSICAL_WEIGHTS[WeightKind(kind)]
        arcs = graph.adjacency
        diagonal = np.eye(graph.vertex_count, dtype=bool)
        starts = np.where(arcs, arc_weight[0], np.where(diagonal, diagonal_weight[0], 0))
        steps = np.where(arcs, arc_weight[1], np.where(diagonal, diagonal_weight[1], 0))
        return Generalization(starts, steps)

    def classical(self, kind: Union[ProductKind, str], a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
        """Dispatch to the direct, cartesian or normal product."""
        kind = ProductKind(kind)
        if kind is ProductKind.DIRECT:
            return self.direct(a, b)
        if kind is ProductKind.CARTESIAN:
            return self.cartesian(a, b)
        if kind is ProductKind.NORMAL:
            return self.normal(a, b)
        raise ValueError("The generalized product needs a generalization per factor")

    def classical_as_generalized(self, kind: Union[ProductKind, str], a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
        """The generalized product with the weights that reproduce ``kind``."""
        left, right = _CLASSICAL_PAIRS[ProductKind(kind)]
        return self.generalized(a, self.classical_weights(left, a), b, self.classical_weights(right, b))
