"""
Simple undirected labeled graphs backed by a boolean adjacency matrix.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import GraphError


class SimpleGraph:
    """Undirected graph without loops on vertices 0..n-1.

    Labels are for display only; equality and isomorphism ignore them.
    """

    def __init__(self, adjacency: np.ndarray, labels: Optional[Sequence[str]] = None):
        adjacency = np.array(adjacency, dtype=bool)
        if adjacency.size == 0:
            adjacency = adjacency.reshape(0, 0)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise GraphError(f"Adjacency matrix must be square, got shape {adjacency.shape}")
        if adjacency.diagonal().any():
            loop = int(np.flatnonzero(adjacency.diagonal())[0])
            raise GraphError(f"Self-loop at vertex {loop}")
        if not (adjacency == adjacency.T).all():
            u, v = np.argwhere(adjacency != adjacency.T)[0]
            raise GraphError(f"Adjacency is not symmetric at ({u}, {v})")
        adjacency.setflags(write=False)
        self.adjacency = adjacency

        n = adjacency.shape[0]
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise GraphError(f"Expected {n} labels, got {len(labels)}")
        self.labels = tuple(labels)
        self.edge_count = int(adjacency.sum()) // 2

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "SimpleGraph":
        adjacency = np.zeros((vertex_count, vertex_count), dtype=bool)
        for u, v in edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            adjacency[u, v] = adjacency[v, u] = True
        return cls(adjacency, labels)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(~np.eye(n, dtype=bool))

    @classmethod
    def edgeless(cls, n: int) -> "SimpleGraph":
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def random(cls, rng: np.random.Generator, n: int, p: float = 0.5) -> "SimpleGraph":
        """G(n, p) random graph drawn from ``rng``."""
        upper = np.triu(rng.random((n, n)) < p, k=1)
        return cls(upper | upper.T)

    @property
    def vertex_count(self) -> int:
        return int(self.adjacency.shape[0])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def neighbors(self, v: int) -> List[int]:
        return [int(u) for u in np.flatnonzero(self.adjacency[v])]

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as index pairs (i, j) with i < j, in sorted order."""
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Move vertex v to position perm[v], carrying its label along."""
        perm = np.asarray(perm, dtype=np.int64)
        n = self.vertex_count
        if sorted(perm.tolist()) != list(range(n)):
            raise GraphError("Relabeling must be a permutation of the vertices")
        inverse = np.empty(n, dtype=np.int64)
        inverse[perm] = np.arange(n)
        adjacency = self.adjacency[np.ix_(inverse, inverse)]
        labels = [self.labels[i] for i in inverse]
        return SimpleGraph(adjacency, labels)

    def __repr__(self) -> str:
        return f"SimpleGraph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"
