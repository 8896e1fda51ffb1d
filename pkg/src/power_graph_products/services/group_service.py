"""
Group construction service: built-in families, Cayley tables and direct products.
"""
from itertools import permutations
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..core.config import settings
from ..core.exceptions import InvalidOrderError, OrderOverflowError
from ..core.logging import get_logger
from ..models.group import FiniteGroup
from ..utils.file_manager import FileManager
from ..utils.group_spec import GroupAtom, parse_group_spec
from ..utils.validation import TableLike, as_table, validate_cayley_table

logger = get_logger(__name__)

# Units 1, i, j, k as 0..3; products as (sign, unit).
_QUATERNION_UNITS = {
    (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def encode_pair(i: int, j: int, right_order: int) -> int:
    """Index of (i, j) in a product whose right factor has ``right_order`` elements."""
    return i * right_order + j


def decode_pair(x: int, right_order: int) -> Tuple[int, int]:
    return divmod(x, right_order)


def pair_labels(left: Sequence[str], right: Sequence[str]) -> list:
    return [f"({a},{b})" for a in left for b in right]


class GroupService:
    """Builds finite groups from families, tables, files and group expressions."""

    def __init__(self, file_manager: Optional[FileManager] = None):
        self.file_manager = file_manager or FileManager()

    def _check_order(self, n: int) -> None:
        if n > settings.groups.max_order:
            raise OrderOverflowError(
                f"Group order {n} exceeds the cap of {settings.groups.max_order}"
            )

    def from_cayley_table(self, table: TableLike, name: str = "cayley") -> FiniteGroup:
        """Validate an untrusted table and build the group; the identity is auto-detected."""
        array = as_table(table)
        self._check_order(array.shape[0])
        identity = validate_cayley_table(array)
        logger.debug("Loaded %s of order %d with identity %d", name, array.shape[0], identity)
        return FiniteGroup(array, identity, name=name)

    def from_file(self, path: Union[str, Path]) -> FiniteGroup:
        """Read a Cayley table file and validate it."""
        return self.from_cayley_table(self.file_manager.load_cayley_table(path), name=f"cayley:{path}")

    def cyclic(self, n: int) -> FiniteGroup:
        """Z_n with i*j = (i + j) mod n."""
        if n < 1:
            raise InvalidOrderError(f"Cyclic group order must be at least 1, got {n}")
        self._check_order(n)
        elements = np.arange(n)
        table = np.add.outer(elements, elements) % n
        return FiniteGroup(table, 0, name=f"C{n}")

    def dihedral(self, n: int) -> FiniteGroup:
        """Symmetries of the n-gon, order 2n.

        Indices 0..n-1 are the rotations r^k, n..2n-1 the reflections s r^k.
        """
        if n < 1:
            raise InvalidOrderError(f"Dihedral parameter must be at least 1, got {n}")
        self._check_order(2 * n)
        table = np.empty((2 * n, 2 * n), dtype=np.int64)
        for x in range(2 * n):
            a, f = x % n, x // n
            for y in range(2 * n):
                b, g = y % n, y // n
                # (s^f r^a)(s^g r^b) = s^(f+g) r^((-1)^g a + b)
                rot = ((-a if g else a) + b) % n
                table[x, y] = rot + ((f + g) % 2) * n
        labels = [f"r{k}" for k in range(n)] + [f"s{k}" for k in range(n)]
        return FiniteGroup(table, 0, name=f"D{n}", labels=labels)

    def symmetric(self, n: int) -> FiniteGroup:
        """S_n on {0..n-1}; elements in lexicographic order, identity first."""
        if not 1 <= n <= settings.groups.MAX_SYMMETRIC_DEGREE:
            raise InvalidOrderError(
                f"Symmetric group degree must be in [1, {settings.groups.MAX_SYMMETRIC_DEGREE}], got {n}"
            )
        perms = list(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        size = len(perms)
        table = np.empty((size, size), dtype=np.int64)
        for i, p in enumerate(perms):
            for j, q in enumerate(perms):
                # apply q first, then p
                table[i, j] = index[tuple(p[q[k]] for k in range(n))]
        labels = ["".join(map(str, p)) for p in perms]
        return FiniteGroup(table, 0, name=f"S{n}", labels=labels)

    def quaternion8(self) -> FiniteGroup:
        """Q8 = {±1, ±i, ±j, ±k}; element 2*unit + (sign < 0)."""
        table = np.empty((8, 8), dtype=np.int64)
        for x in range(8):
            u, su = divmod(x, 2)
            for y in range(8):
                v, sv = divmod(y, 2)
                if u == 0:
                    sign, w = 1, v
                elif v == 0:
                    sign, w = 1, u
                else:
                    sign, w = _QUATERNION_UNITS[(u, v)]
                negative = (sign < 0) ^ bool(su) ^ bool(sv)
                table[x, y] = 2 * w + int(negative)
        labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        return FiniteGroup(table, 0, name="Q8", labels=labels)

    def direct_product(self, g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
        """Componentwise product; (i, j) is element i*|G2| + j."""
        n1, n2 = g1.order, g2.order
        self._check_order(n1 * n2)
        # table[(i,j),(k,l)] = (g1[i,k], g2[j,l])
        table = g1.table[:, None, :, None] * n2 + g2.table[None, :, None, :]
        table = table.reshape(n1 * n2, n1 * n2)
        identity = encode_pair(g1.identity, g2.identity, n2)
        logger.debug("Built %sx%s of order %d", g1.name, g2.name, n1 * n2)
        return FiniteGroup(
            table,
            identity,
            name=f"{g1.name}x{g2.name}",
            labels=pair_labels(g1.labels, g2.labels),
        )

    def from_atom(self, atom: GroupAtom) -> FiniteGroup:
        if atom.family == "C":
            return self.cyclic(atom.n)
        if atom.family == "D":
            return self.dihedral(atom.n)
        if atom.family == "S":
            return self.symmetric(atom.n)
        if atom.family == "Q8":
            return self.quaternion8()
        return self.from_file(atom.path)

    def from_spec(self, text: str) -> FiniteGroup:
        """Build the group named by a group expression such as ``C2xD4``."""
        spec = parse_group_spec(text)
        group = self.from_atom(spec.atoms[0])
        for atom in spec.atoms[1:]:
            group = self.direct_product(group, self.from_atom(atom))
        return group
