"""Deutsch and Maassen-Uffink lower bounds for a qubit observable pair.

Both bounds depend on the pair only through the largest eigenvector overlap
``c = max_ij |<a_i|b_j>|``. For qubit axes at angle alpha the squared overlaps
are ``(1 +- cos alpha)/2``, so ``c = max(cos(alpha/2), sin(alpha/2))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BoundOrderingError, DomainError
from .geometry import UnitVector3, overlap_probability
from .solver import check_alpha, optimal_bound

ORDERING_SLACK = 1e-12


def deutsch_from_overlap(c: float) -> float:
    """``2 log(2 / (1 + c))`` for a maximal overlap ``c``."""
    if not (0.0 < c <= 1.0):
        raise DomainError(f"overlap must lie in (0, 1], got {c!r}")
    return 2.0 * math.log(2.0 / (1.0 + c))


def maassen_uffink_from_overlap(c: float) -> float:
    """``-2 log c`` for a maximal overlap ``c``."""
    if not (0.0 < c <= 1.0):
        raise DomainError(f"overlap must lie in (0, 1], got {c!r}")
    return -2.0 * math.log(c) + 0.0  # no -0.0 at c = 1


def max_overlap_from_axes(m: UnitVector3, n: UnitVector3) -> float:
    """max_ij |<a_i|b_j>| computed from the four Bloch-state overlaps."""
    probs = [
        overlap_probability(a, b)
        for a in (m, -m)
        for b in (n, -n)
    ]
    return math.sqrt(max(probs))


def max_overlap(alpha: float) -> float:
    alpha = check_alpha(alpha)
    return max(math.cos(0.5 * alpha), math.sin(0.5 * alpha))


def deutsch_bound(alpha: float) -> float:
    return deutsch_from_overlap(max_overlap(alpha))


def maassen_uffink_bound(alpha: float) -> float:
    return maassen_uffink_from_overlap(max_overlap(alpha))


@dataclass(frozen=True)
class BoundReport:
    alpha: float
    optimal: float
    maassen_uffink: float
    deutsch: float


def bound_report(alpha: float) -> BoundReport:
    """All three bounds at ``alpha``; raises if they are out of order."""
    alpha = check_alpha(alpha)
    rep = BoundReport(
        alpha=alpha,
        optimal=optimal_bound(alpha),
        maassen_uffink=maassen_uffink_bound(alpha),
        deutsch=deutsch_bound(alpha),
    )
    if (
        rep.maassen_uffink < rep.deutsch - ORDERING_SLACK
        or rep.optimal < rep.maassen_uffink - ORDERING_SLACK
    ):
        raise BoundOrderingError(f"bounds out of order: {rep}")
    return rep
