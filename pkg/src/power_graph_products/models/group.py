"""
Finite groups held as Cayley tables over dense element indices.
"""
from typing import List, Optional, Sequence

import numpy as np


class FiniteGroup:
    """
    A finite group on elements 0..n-1 with ``table[i, j] = i * j``.

    Instances are immutable: the table and the eagerly computed element
    orders are read-only arrays. Axiom checks live in
    ``utils.validation`` and run before untrusted tables get here.
    """

    def __init__(
        self,
        table: np.ndarray,
        identity: int,
        name: str = "group",
        labels: Optional[Sequence[str]] = None,
    ):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        self.table = table
        self.identity = int(identity)
        self.name = name
        n = table.shape[0]
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise ValueError(f"Expected {n} labels, got {len(labels)}")
        self.labels = tuple(labels)
        self.element_orders = self._compute_element_orders()

    def _compute_element_orders(self) -> np.ndarray:
        n = self.order
        elements = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        current = elements.copy()
        for k in range(1, n + 1):
            done = (current == self.identity) & (orders == 0)
            orders[done] = k
            if (orders > 0).all():
                break
            current = self.table[current, elements]
        orders.setflags(write=False)
        return orders

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label(self, a: int) -> str:
        return self.labels[a]

    def _check_element(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise IndexError(f"Element {a} is not in {self.name} (order {self.order})")

    def element_order(self, a: int) -> int:
        """Least k >= 1 with a^k = identity."""
        self._check_element(a)
        return int(self.element_orders[a])

    def power(self, a: int, k: int) -> int:
        """a^k for k >= 0, with k reduced modulo o(a) first."""
        self._check_element(a)
        if k < 0:
            raise ValueError("Exponent must be nonnegative")
        result = self.identity
        for _ in range(k % self.element_order(a)):
            result = int(self.table[result, a])
        return result

    def powers(self, a: int) -> List[int]:
        """[a^1, a^2, ..., a^o(a)]; the last entry is the identity."""
        self._check_element(a)
        result = []
        current = a
        for _ in range(self.element_order(a)):
            result.append(current)
            current = int(self.table[current, a])
        return result

    def smallest_exponent(self, a: int, b: int) -> Optional[int]:
        """Least t >= 1 with a^t = b, or None if b is outside <a>."""
        self._check_element(b)
        for t, x in enumerate(self.powers(a), start=1):
            if x == b:
                return t
        return None

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, order={self.order})"
