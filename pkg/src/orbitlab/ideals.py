"""Order ideals of the column subposet, stored as minimal-valuation vectors.

An ideal is encoded by ``rvec = (r_1, ..., r_l)`` where ``r_i`` is the least
``s`` with ``(s, lam_i)`` in the ideal, and ``r_i = lam_i`` marks an empty
column.  A vector encodes an ideal iff

    r_i <= r_{i-1} <= r_i + (lam_{i-1} - lam_i)

for consecutive indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptyIdeal,
    ForeignPoint,
    LengthMismatch,
    NotAnIdeal,
    NotSubideal,
    PartitionMismatch,
    RangeViolation,
)
from .partitions import Partition
from .poset import PosetPoint, geq


def _check_rvec(lam: Partition, rvec: tuple[int, ...]) -> None:
    if len(rvec) != lam.length:
        raise LengthMismatch(f"rvec has {len(rvec)} entries, partition has {lam.length} parts")
    for i, (r, k) in enumerate(zip(rvec, lam.parts), start=1):
        if not 0 <= r <= k:
            raise RangeViolation(f"r_{i}={r} outside [0, {k}]")
    for i in range(1, len(rvec)):
        gap = lam.parts[i - 1] - lam.parts[i]
        if not rvec[i] <= rvec[i - 1] <= rvec[i] + gap:
            raise NotAnIdeal(
                f"index {i + 1}: need r_{i + 1} <= r_{i} <= r_{i + 1} + {gap}, "
                f"got r_{i}={rvec[i - 1]}, r_{i + 1}={rvec[i]}",
                index=i + 1,
            )


@dataclass(frozen=True)
class Ideal:
    lam: Partition
    rvec: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rvec", tuple(int(r) for r in self.rvec))
        _check_rvec(self.lam, self.rvec)

    def is_empty(self) -> bool:
        return self.rvec == self.lam.parts

    def column_start(self, k: int) -> int:
        """Least valuation present in column ``k`` (``k`` when empty)."""
        return self.rvec[self.lam.parts.index(k)]

    def points(self) -> frozenset[PosetPoint]:
        return frozenset(
            PosetPoint(s, k)
            for k in self.lam.distinct_parts
            for s in range(self.column_start(k), k)
        )

    def __contains__(self, x):
        return contains(self, x)

    def __le__(self, other):
        return is_subideal(self, other)

    def __str__(self):
        return "<" + ",".join(str(r) for r in self.rvec) + ">"


def ideal_from_rvec(lam: Partition, rvec: Iterable[int]) -> Ideal:
    return Ideal(lam, tuple(rvec))


def empty_ideal(lam: Partition) -> Ideal:
    return Ideal(lam, lam.parts)


def full_ideal(lam: Partition) -> Ideal:
    return Ideal(lam, (0,) * lam.length)


def lowest_in_column(g: PosetPoint, k: int) -> int:
    """Least ``s`` with ``g >= (s, k)``; returns ``k`` if the column misses."""
    s = max(g.r, k - g.k + g.r)
    return min(s, k)


def ideal_of_points(lam: Partition, generators: Iterable[PosetPoint]) -> Ideal:
    """Downward closure of ``generators`` inside the column subposet of ``lam``."""
    generators = [PosetPoint(*g) for g in generators]
    parts = set(lam.parts)
    for g in generators:
        if g.k not in parts or not 0 <= g.r < g.k:
            raise ForeignPoint(f"{g} is not a point of P_{lam}")
    rvec = tuple(min([k] + [lowest_in_column(g, k) for g in generators]) for k in lam.parts)
    return Ideal(lam, rvec)


def contains(ideal: Ideal, x: PosetPoint) -> bool:
    r, k = x
    if k not in ideal.lam.parts or r >= k:
        return False
    return r >= ideal.column_start(k)


def _same_lam(a: Ideal, b: Ideal) -> None:
    if a.lam != b.lam:
        raise PartitionMismatch(f"ideals of {a.lam} and {b.lam} cannot be compared")


def is_subideal(j: Ideal, i: Ideal) -> bool:
    """True iff ``j`` is contained in ``i``."""
    _same_lam(j, i)
    return all(rj >= ri for rj, ri in zip(j.rvec, i.rvec))


def union(i: Ideal, j: Ideal) -> Ideal:
    _same_lam(i, j)
    return Ideal(i.lam, tuple(map(min, i.rvec, j.rvec)))


def intersection(i: Ideal, j: Ideal) -> Ideal:
    _same_lam(i, j)
    return Ideal(i.lam, tuple(map(max, i.rvec, j.rvec)))


def _require_sub(j: Ideal, i: Ideal) -> None:
    if not is_subideal(j, i):
        raise NotSubideal(f"{j} is not contained in {i}")


def _rvecs_in_box(lam: Partition, lo: tuple[int, ...], hi: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # Valid rvecs with lo <= rvec <= hi componentwise, in decreasing lex order.
    parts = lam.parts
    n = len(parts)
    out = [0] * n

    def rec(i):
        if i == n:
            yield tuple(out)
            return
        top, bottom = hi[i], lo[i]
        if i > 0:
            prev = out[i - 1]
            top = min(top, prev)
            bottom = max(bottom, prev - (parts[i - 1] - parts[i]))
        for r in range(top, bottom - 1, -1):
            out[i] = r
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_ideals(lam: Partition) -> Iterator[Ideal]:
    """Every ideal exactly once, empty ideal first (decreasing lex on rvec)."""
    for rvec in _rvecs_in_box(lam, (0,) * lam.length, lam.parts):
        yield Ideal(lam, rvec)


def ideals_between(j: Ideal, i: Ideal) -> Iterator[Ideal]:
    """Ideals ``k`` with ``j <= k <= i``, same order as :func:`enumerate_ideals`."""
    _require_sub(j, i)
    for rvec in _rvecs_in_box(i.lam, i.rvec, j.rvec):
        yield Ideal(i.lam, rvec)


def max_elements(ideal: Ideal) -> frozenset[PosetPoint]:
    """The antichain of maximal points; at most one per column."""
    tops = [PosetPoint(ideal.column_start(k), k) for k in ideal.lam.distinct_parts
            if ideal.column_start(k) < k]
    return frozenset(x for x in tops if not any(y != x and geq(y, x) for y in tops))


def weighted_size(ideal: Ideal) -> int:
    """Number of points counted with column multiplicity."""
    return sum(k - r for k, r in zip(ideal.lam.parts, ideal.rvec))


def point_count_difference(j: Ideal, i: Ideal) -> int:
    """Number of distinct points in ``i`` minus ``j`` (no multiplicity)."""
    _require_sub(j, i)
    return sum(j.column_start(k) - i.column_start(k) for k in i.lam.distinct_parts)


def remove_points(ideal: Ideal, points: Iterable[PosetPoint]) -> Ideal:
    """Delete maximal points from ``ideal``; each raises its column start by one."""
    rvec = list(ideal.rvec)
    for x in points:
        if x not in max_elements(ideal):
            raise NotAnIdeal(f"{x} is not a maximal element of {ideal}")
        for idx, k in enumerate(ideal.lam.parts):
            if k == x.k:
                rvec[idx] += 1
    return Ideal(ideal.lam, tuple(rvec))


def boundary(ideal: Ideal) -> tuple[tuple[int, int], ...]:
    """Polyline vertices ``(r_i, lam_i)``, one per nonempty column, by decreasing
    column height."""
    if ideal.is_empty():
        raise EmptyIdeal("the empty ideal has no boundary")
    verts = []
    for r, k in zip(ideal.rvec, ideal.lam.parts):
        if r >= k:
            break
        if not verts or verts[-1] != (r, k):
            verts.append((r, k))
    return tuple(verts)
