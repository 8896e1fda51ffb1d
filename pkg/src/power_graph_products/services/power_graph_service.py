"""
Power graph service: the power relation of a finite group and its weights.
"""
from typing import FrozenSet, Optional, Set

import numpy as np

from ..core.logging import get_logger
from ..models.generalization import Generalization
from ..models.graph import SimpleGraph
from ..models.group import FiniteGroup
from ..models.progression import APPair

logger = get_logger(__name__)


class PowerGraphBundle:
    """A group with its power graph and the exponent-progression weights.

    The graph is derived from the weights, so a != b are adjacent exactly
    when W(a, b) or W(b, a) is not the sentinel.
    """

    def __init__(self, group: FiniteGroup, weights: Generalization, graph: SimpleGraph):
        self.group = group
        self.weights = weights
        self.graph = graph

    def __repr__(self) -> str:
        return f"PowerGraphBundle(group={self.group.name!r}, edges={self.graph.edge_count})"


class PowerGraphService:
    def bundle(self, group: FiniteGroup) -> PowerGraphBundle:
        weights = self.power_weights(group)
        return PowerGraphBundle(group, weights, self.graph_from_weights(weights, group.labels))

    def power_weights(self, group: FiniteGroup) -> Generalization:
        """W(a, b) = (t, o(a)) for the least t >= 1 with a^t = b, else (0, 0)."""
        n = group.order
        elements = np.arange(n)
        orders = group.element_orders
        starts = np.zeros((n, n), dtype=np.int64)
        steps = np.zeros((n, n), dtype=np.int64)
        current = elements.copy()  # a^t for every a
        for t in range(1, int(orders.max()) + 1):
            # a^1..a^o(a) are pairwise distinct, so each (a, a^t) is set once
            rows = elements[orders >= t]
            starts[rows, current[rows]] = t
            steps[rows, current[rows]] = orders[rows]
            current = group.table[current, elements]
        return Generalization(starts, steps)

    def directed_power_graph(self, group: FiniteGroup) -> np.ndarray:
        """Arc matrix: arcs[a, b] iff b = a^m for some m >= 1 and a != b."""
        arcs = self.power_weights(group).starts > 0
        np.fill_diagonal(arcs, False)
        return arcs

    def graph_from_weights(self, weights: Generalization, labels=None) -> SimpleGraph:
        arcs = weights.starts > 0
        adjacency = arcs | arcs.T
        np.fill_diagonal(adjacency, False)
        return SimpleGraph(adjacency, labels)

    def power_graph(self, group: FiniteGroup) -> SimpleGraph:
        """P(G): distinct a, b adjacent iff one is a positive power of the other."""
        graph = self.graph_from_weights(self.power_weights(group), group.labels)
        logger.debug("Power graph of %s: %d vertices, %d edges", group.name, graph.vertex_count, graph.edge_count)
        return graph

    def exponent_progression(self, group: FiniteGroup, a: int, b: int) -> Optional[APPair]:
        """AP(t, o(a)) of exponents m with a^m = b, or None when b is not in <a>."""
        t = group.smallest_exponent(a, b)
        if t is None:
            return None
        return APPair(start=t, step=group.element_order(a))

    def exponent_set_window(self, group: FiniteGroup, a: int, b: int, bound: int) -> Set[int]:
        """{m in [1, bound] : a^m = b}, by direct iteration."""
        order = group.element_order(a)
        if not 1 <= bound <= 10 * order:
            raise ValueError(f"Window bound must be in [1, {10 * order}], got {bound}")
        found = set()
        current = a
        for m in range(1, bound + 1):
            if current == b:
                found.add(m)
            current = group.mul(current, a)
        return found

    def cyclic_subgroup(self, group: FiniteGroup, a: int) -> FrozenSet[int]:
        return frozenset(group.powers(a))
