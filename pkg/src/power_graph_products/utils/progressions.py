"""
Arithmetic on progressions AP(a, d) over the nonnegative integers.

Only nonemptiness of AP(p) ∩ AP(q) ∩ {1, 2, ...} is ever needed, which
reduces to a gcd congruence; no least common element is computed.
"""
import math

import numpy as np

from ..models.progression import APPair


def ap_contains(p: APPair, m: int) -> bool:
    """Check whether ``m`` is a term of ``p``."""
    if m < p.start:
        return False
    if p.step == 0:
        return m == p.start
    return (m - p.start) % p.step == 0


def aps_intersect_positively(p: APPair, q: APPair) -> bool:
    """Check whether two progressions share a term m >= 1."""
    if p.step == 0 and q.step == 0:
        return p.start == q.start and p.start >= 1
    if p.step == 0:
        return p.start >= 1 and ap_contains(q, p.start)
    if q.step == 0:
        return q.start >= 1 and ap_contains(p, q.start)
    # Common terms, if any, form an unbounded progression, so one is >= 1.
    return (p.start - q.start) % math.gcd(p.step, q.step) == 0


def aps_intersect_oracle(p: APPair, q: APPair) -> bool:
    """Brute-force counterpart of :func:`aps_intersect_positively`.

    Any common term has a least one no larger than max(start) + lcm of the
    (nonzero) steps; enumeration runs to twice that span.
    """
    span = math.lcm(max(p.step, 1), max(q.step, 1))
    bound = max(p.start, q.start) + 2 * span
    left = _terms_up_to(p, bound)
    right = _terms_up_to(q, bound)
    return any(m >= 1 for m in left & right)


def _terms_up_to(p: APPair, bound: int) -> set:
    if p.step == 0:
        return {p.start} if p.start <= bound else set()
    return set(range(p.start, bound + 1, p.step))


def intersect_positively_table(
    starts_a: np.ndarray,
    steps_a: np.ndarray,
    starts_b: np.ndarray,
    steps_b: np.ndarray,
) -> np.ndarray:
    """Vectorised :func:`aps_intersect_positively` over broadcast arrays.

    Inputs broadcast against each other; the result has the broadcast shape.
    """
    a, d, b, e = np.broadcast_arrays(
        np.asarray(starts_a, dtype=np.int64),
        np.asarray(steps_a, dtype=np.int64),
        np.asarray(starts_b, dtype=np.int64),
        np.asarray(steps_b, dtype=np.int64),
    )
    d_zero = d == 0
    e_zero = e == 0

    both_constant = d_zero & e_zero & (a == b) & (a >= 1)

    # Singleton {a} against AP(b, e) with e > 0, and the mirror case.
    safe_e = np.where(e_zero, 1, e)
    safe_d = np.where(d_zero, 1, d)
    left_constant = d_zero & ~e_zero & (a >= 1) & (a >= b) & ((a - b) % safe_e == 0)
    right_constant = e_zero & ~d_zero & (b >= 1) & (b >= a) & ((b - a) % safe_d == 0)

    g = np.gcd(safe_d, safe_e)
    both_running = ~d_zero & ~e_zero & ((a - b) % g == 0)

    return both_constant | left_constant | right_constant | both_running
