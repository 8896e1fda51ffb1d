"""
Generalizations: total weight functions from ordered vertex pairs to APPair.
"""
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from .progression import APPair


class Generalization:
    """Dense n x n table of progression weights.

    Stored as two integer matrices (starts, steps); every ordered pair,
    including the diagonal, has a value, with (0, 0) as the default.
    """

    def __init__(self, starts: np.ndarray, steps: np.ndarray):
        starts = np.array(starts, dtype=np.int64)
        steps = np.array(steps, dtype=np.int64)
        if starts.ndim != 2 or starts.shape[0] != starts.shape[1]:
            raise ValueError(f"Weight table must be square, got shape {starts.shape}")
        if starts.shape != steps.shape:
            raise ValueError("Start and step tables must have the same shape")
        if (starts < 0).any() or (steps < 0).any():
            raise ValueError("Weights must be nonnegative")
        starts.setflags(write=False)
        steps.setflags(write=False)
        self.starts = starts
        self.steps = steps

    @classmethod
    def sentinel(cls, n: int) -> "Generalization":
        """All-(0,0) generalization on ``n`` vertices."""
        zeros = np.zeros((n, n), dtype=np.int64)
        return cls(zeros, zeros)

    @property
    def vertex_count(self) -> int:
        return self.starts.shape[0]

    def __call__(self, u: int, v: int) -> APPair:
        return APPair(start=int(self.starts[u, v]), step=int(self.steps[u, v]))

    def non_sentinel(self) -> Iterator[Tuple[int, int, APPair]]:
        """Yield ``(u, v, weight)`` for every non-sentinel ordered pair."""
        mask = (self.starts != 0) | (self.steps != 0)
        for u, v in zip(*np.nonzero(mask)):
            yield int(u), int(v), self(int(u), int(v))

    def dump(self, labels: Optional[Sequence[str]] = None) -> str:
        """Text dump, one ``u v : (t,d)`` line per non-sentinel pair."""
        lines = []
        for u, v, pair in self.non_sentinel():
            left = labels[u] if labels is not None else str(u)
            right = labels[v] if labels is not None else str(v)
            lines.append(f"{left} {right} : {pair}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"Generalization(vertex_count={self.vertex_count})"
