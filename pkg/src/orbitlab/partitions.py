"""Partitions: the isomorphism type of a finite abelian p-group."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyInput, MalformedToken, NonPositivePart


@dataclass(frozen=True)
class Partition:
    """A non-increasing tuple of positive integers.

    Construction sorts the parts, so ``Partition((3, 2, 3))`` equals
    ``Partition((3, 3, 2))``.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(x) for x in parts)
        if not parts:
            raise EmptyInput("a partition needs at least one part")
        for x in parts:
            if x < 1:
                raise NonPositivePart(f"part {x} is not a positive integer")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def distinct(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(tau_j, m_j)`` of distinct part values and multiplicities,
        with the values strictly increasing."""
        counts = Counter(self.parts)
        return tuple(sorted(counts.items()))

    @property
    def distinct_parts(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.distinct)

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(str(x) for x in self.parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"7,5,3,3,2"`` (any order, blanks ignored) into a Partition."""
    if text is None or not text.strip():
        raise EmptyInput("empty partition string")
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise MalformedToken(f"not an integer: {token!r}") from None
        if value < 1:
            raise NonPositivePart(f"part {value} is not a positive integer")
        parts.append(value)
    return Partition(parts)


def multiplicity(lam: Partition, k: int) -> int:
    return lam.multiplicity(k)


def partitions_in_box(max_part: int, max_length: int):
    """Yield every partition with parts <= max_part and length in 1..max_length."""

    def rec(prefix, bound, remaining):
        if prefix:
            yield Partition(prefix)
        if remaining == 0:
            return
        for x in range(bound, 0, -1):
            yield from rec(prefix + [x], x, remaining - 1)

    yield from rec([], max_part, max_length)
