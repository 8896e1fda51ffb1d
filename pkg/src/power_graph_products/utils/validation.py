"""
Validation utilities for Cayley tables.

Checks run in a fixed order (closure, identity, Latin square, inverses,
associativity) and each failure names the first violating cell.
"""
from typing import Optional, Sequence, Union

import numpy as np

from ..core.config import settings
from ..core.exceptions import (
    GroupValidationError,
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
    NotClosedError,
    NotLatinSquareError,
)

TableLike = Union[np.ndarray, Sequence[Sequence[int]]]


def as_table(table: TableLike) -> np.ndarray:
    """Coerce ``table`` to a square integer array."""
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise GroupValidationError("Cayley table must be a square array of integers", details=str(e))
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise GroupValidationError(f"Cayley table must be a nonempty square array, got shape {array.shape}")
    return array


def check_closed(table: np.ndarray) -> None:
    n = table.shape[0]
    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        i, j = (int(x) for x in bad[0])
        raise NotClosedError(f"Entry {table[i, j]} at ({i}, {j}) is not an element index", cell=(i, j))


def find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    elements = np.arange(n)
    for e in range(n):
        if (table[e] == elements).all() and (table[:, e] == elements).all():
            return e
    raise NoIdentityError("No element acts as a two-sided identity")


def check_latin_square(table: np.ndarray) -> None:
    n = table.shape[0]
    for i in range(n):
        _first_repeat(table[i], lambda j: (i, j))
    for j in range(n):
        _first_repeat(table[:, j], lambda i: (i, j))


def _first_repeat(line: np.ndarray, cell_of) -> None:
    seen = set()
    for k, value in enumerate(line.tolist()):
        if value in seen:
            i, j = cell_of(k)
            raise NotLatinSquareError(f"Element {value} repeats at ({i}, {j})", cell=(i, j))
        seen.add(value)


def check_inverses(table: np.ndarray, identity: int) -> None:
    for a in range(table.shape[0]):
        right = np.flatnonzero(table[a] == identity)
        if not len(right) or table[right[0], a] != identity:
            raise NoInverseError(f"Element {a} has no two-sided inverse", cell=(a, int(right[0]) if len(right) else a))


def check_associative(
    table: np.ndarray,
    full_scan_max: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> None:
    """Exhaustive (ij)k = i(jk) scan for small tables, sampled triples above."""
    n = table.shape[0]
    full_scan_max = settings.groups.full_scan_max if full_scan_max is None else full_scan_max
    if n <= full_scan_max:
        left = table[table]  # left[i, j, k] = (i*j)*k
        right = table[np.arange(n)[:, None, None], table[None, :, :]]  # right[i, j, k] = i*(j*k)
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(settings.groups.SAMPLE_SEED if seed is None else seed)
        count = settings.groups.ASSOCIATIVITY_SAMPLES if samples is None else samples
        i, j, k = rng.integers(0, n, size=(3, count))
        mismatch = table[table[i, j], k] != table[i, table[j, k]]
        bad = np.stack([i, j, k], axis=1)[mismatch]
    if len(bad):
        i, j, k = (int(x) for x in bad[0])
        raise NotAssociativeError(f"Associativity fails for ({i}, {j}, {k})", cell=(i, j, k))


def validate_cayley_table(table: TableLike, full_scan_max: Optional[int] = None) -> int:
    """Run every group-axiom check on ``table`` and return the identity index."""
    array = as_table(table)
    check_closed(array)
    identity = find_identity(array)
    check_latin_square(array)
    check_inverses(array, identity)
    check_associative(array, full_scan_max=full_scan_max)
    return identity
