"""The fundamental poset of cyclic-group orbits and its column subposets.

A point ``(r, k)`` stands for the automorphism orbit of ``p^r`` in
``Z/p^k``.  Nothing here depends on the prime ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import BoundExceeded, RangeViolation
from .partitions import Partition

DEFAULT_CHAIN_BOUND = 12


class PosetPoint(NamedTuple):
    r: int
    k: int

    def label(self) -> str:
        if self.r == 0:
            base = "1"
        elif self.r == 1:
            base = "p"
        else:
            base = f"p^{self.r}"
        return f"({base}, {self.k})"


def make_point(r: int, k: int) -> PosetPoint:
    if not 0 <= r < k:
        raise RangeViolation(f"need 0 <= r < k, got r={r}, k={k}")
    return PosetPoint(r, k)


def geq(x: PosetPoint, y: PosetPoint) -> bool:
    """True iff the orbit ``x`` degenerates to ``y``."""
    return x.r <= y.r and x.k - x.r >= y.k - y.r


def column(k: int) -> list[PosetPoint]:
    return [PosetPoint(r, k) for r in range(k)]


def cover_relation(points) -> frozenset[tuple[PosetPoint, PosetPoint]]:
    """Transitive reduction of ``geq`` restricted to ``points``.

    Returns pairs ``(x, y)`` with ``x`` covering ``y``.
    """
    points = list(points)
    covers = set()
    for x in points:
        for y in points:
            if x == y or not geq(x, y):
                continue
            if not any(z != x and z != y and geq(x, z) and geq(z, y) for z in points):
                covers.add((x, y))
    return frozenset(covers)


@dataclass(frozen=True)
class SubposetP:
    """Induced subposet on the columns ``k`` occurring in ``lam``."""

    lam: Partition
    points: tuple[PosetPoint, ...]
    covers: frozenset

    def __contains__(self, x):
        return x in self.points

    def __len__(self):
        return len(self.points)

    def sorted_covers(self):
        return sorted(self.covers)


@lru_cache(maxsize=None)
def points_of(lam: Partition) -> SubposetP:
    # columns ordered by decreasing k, then increasing r (top to bottom)
    pts = tuple(p for k in reversed(lam.distinct_parts) for p in column(k))
    return SubposetP(lam, pts, cover_relation(pts))


def chain_poset(n: int) -> tuple[PosetPoint, ...]:
    """Points of the subposet on columns ``1..n``."""
    return tuple(p for k in range(n, 0, -1) for p in column(k))


def count_maximal_chains(n: int, bound: int = DEFAULT_CHAIN_BOUND) -> int:
    """Number of maximal chains from ``(0, n)`` down to ``(n-1, n)`` in the
    subposet on columns ``1..n``, by memoized descent along covers."""
    if n < 1:
        raise RangeViolation(f"n must be positive, got {n}")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds chain bound {bound}", bound=bound)
    pts = chain_poset(n)
    below: dict[PosetPoint, list[PosetPoint]] = {x: [] for x in pts}
    for x, y in cover_relation(pts):
        below[x].append(y)

    @lru_cache(maxsize=None)
    def paths(x):
        if not below[x]:
            return 1
        return sum(paths(y) for y in below[x])

    return paths(PosetPoint(0, n))
