"""
Graph comparison service: labeled equality, isomorphism and degree queries.

Isomorphism is decided by joint colour refinement of both graphs followed
by backtracking over colour-preserving maps. Instances are small (see
``settings.graphs.iso_max_vertices``) and power graphs have very uneven
degrees, so refinement leaves little to search.
"""
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import settings
from ..core.exceptions import TooLargeError
from ..core.logging import get_logger
from ..models.graph import SimpleGraph

logger = get_logger(__name__)

Edges = List[Tuple[int, int]]


def _signatures(colors: Sequence[int], neighbors: Sequence[Sequence[int]]) -> List[tuple]:
    return [
        (colors[v], tuple(sorted(colors[u] for u in neighbors[v])))
        for v in range(len(colors))
    ]


class GraphService:
    def equal_labeled(self, a: SimpleGraph, b: SimpleGraph) -> bool:
        """Same vertex count and identical adjacency under the identity map."""
        return a.vertex_count == b.vertex_count and bool((a.adjacency == b.adjacency).all())

    def edge_difference(self, a: SimpleGraph, b: SimpleGraph) -> Tuple[Edges, Edges]:
        """Edges only in ``a`` and edges only in ``b`` (same vertex count assumed)."""
        left, right = set(a.edges()), set(b.edges())
        return sorted(left - right), sorted(right - left)

    def has_universal_vertex(self, graph: SimpleGraph) -> bool:
        """Some vertex is adjacent to all others; vacuous for a single vertex."""
        n = graph.vertex_count
        if n == 0:
            return False
        return bool((graph.degrees() == n - 1).any())

    def universal_vertices(self, graph: SimpleGraph) -> List[int]:
        return [int(v) for v in np.flatnonzero(graph.degrees() == graph.vertex_count - 1)]

    def refine_colors(self, a: SimpleGraph, b: SimpleGraph) -> Tuple[List[int], List[int]]:
        """
        Jointly refine degree colourings of ``a`` and ``b`` until stable.

        A vertex's new colour is its old colour plus the multiset of its
        neighbours' colours. Colour ids are shared between the two graphs, so
        equal ids mean equal refinement histories.
        """
        neighbors_a = [a.neighbors(v) for v in range(a.vertex_count)]
        neighbors_b = [b.neighbors(v) for v in range(b.vertex_count)]
        colors_a = [len(nbrs) for nbrs in neighbors_a]
        colors_b = [len(nbrs) for nbrs in neighbors_b]
        class_count = len(set(colors_a) | set(colors_b))

        while True:
            signatures_a = _signatures(colors_a, neighbors_a)
            signatures_b = _signatures(colors_b, neighbors_b)
            palette = {sig: k for k, sig in enumerate(sorted(set(signatures_a) | set(signatures_b)))}
            colors_a = [palette[sig] for sig in signatures_a]
            colors_b = [palette[sig] for sig in signatures_b]
            if len(palette) == class_count:
                return colors_a, colors_b
            class_count = len(palette)

    def find_isomorphism(self, a: SimpleGraph, b: SimpleGraph) -> Optional[List[int]]:
        """
        Return a witness ``pi`` with a.adjacent(u, v) == b.adjacent(pi[u], pi[v]),
        or None when the graphs are not isomorphic.

        Raises:
            TooLargeError: either graph exceeds the isomorphism vertex cap
        """
        cap = settings.graphs.iso_max_vertices
        for graph in (a, b):
            if graph.vertex_count > cap:
                raise TooLargeError(f"Isomorphism testing is capped at {cap} vertices, got {graph.vertex_count}")

        if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
            return None
        if sorted(a.degrees().tolist()) != sorted(b.degrees().tolist()):
            return None

        colors_a, colors_b = self.refine_colors(a, b)
        if Counter(colors_a) != Counter(colors_b):
            return None

        n = a.vertex_count
        candidates: Dict[int, List[int]] = {}
        for v, color in enumerate(colors_b):
            candidates.setdefault(color, []).append(v)
        class_size = Counter(colors_a)
        order = sorted(range(n), key=lambda v: (class_size[colors_a[v]], colors_a[v], v))

        mapping = np.full(n, -1, dtype=np.int64)
        used = np.zeros(n, dtype=bool)
        adjacency_a, adjacency_b = a.adjacency, b.adjacency

        def extend(depth: int) -> bool:
            if depth == n:
                return True
            u = order[depth]
            placed = np.asarray(order[:depth], dtype=np.int64)
            for c in candidates[colors_a[u]]:
                if used[c]:
                    continue
                if not np.array_equal(adjacency_a[u, placed], adjacency_b[c, mapping[placed]]):
                    continue
                mapping[u] = c
                used[c] = True
                if extend(depth + 1):
                    return True
                mapping[u] = -1
                used[c] = False
            return False

        if not extend(0):
            return None
        logger.debug("Found isomorphism on %d vertices", n)
        return mapping.tolist()

    def are_isomorphic(self, a: SimpleGraph, b: SimpleGraph) -> bool:
        return self.find_isomorphism(a, b) is not None

    def is_valid_witness(self, a: SimpleGraph, b: SimpleGraph, witness: Sequence[int]) -> bool:
        """Check that ``witness`` is a bijection preserving adjacency."""
        n = a.vertex_count
        if n != b.vertex_count or sorted(witness) != list(range(n)):
            return False
        perm = np.asarray(witness, dtype=np.int64)
        return bool((a.adjacency == b.adjacency[np.ix_(perm, perm)]).all())
