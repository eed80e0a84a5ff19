"""Brute-force ground truth on small groups.

Everything here works with explicit residues and explicit homomorphism
matrices.  Automorphisms are recognised by checking bijectivity on the whole
group, never by a structural criterion, so these routines stay independent
of the combinatorial modules they are used to check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .errors import BoundExceeded, NotSubideal, PrimeMismatch, RangeViolation, ShapeMismatch
from .ideals import Ideal, ideal_of_points, is_subideal, max_elements
from .orbitcalc import require_prime
from .partitions import Partition
from .poset import PosetPoint, geq

DEFAULT_HOM_BOUND = 2**22
DEFAULT_GROUP_BOUND = 2**20
HOM_BOUND_ENV = "ORBITLAB_MAX_AUT_SPACE"


def hom_space_bound() -> int:
    value = os.environ.get(HOM_BOUND_ENV)
    return int(value) if value else DEFAULT_HOM_BOUND


@dataclass(frozen=True)
class GroupElement:
    lam: Partition
    p: int
    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(int(a) for a in self.residues))
        if len(self.residues) != self.lam.length:
            raise ShapeMismatch(f"{len(self.residues)} residues for {self.lam.length} parts")
        for a, k in zip(self.residues, self.lam.parts):
            if not 0 <= a < self.p**k:
                raise RangeViolation(f"residue {a} outside [0, {self.p}^{k})")

    def is_zero(self) -> bool:
        return not any(self.residues)


def element(lam: Partition, p: int, residues) -> GroupElement:
    """Build an element, reducing residues modulo their cyclic orders."""
    residues = tuple(int(a) % p**k for a, k in zip(residues, lam.parts))
    return GroupElement(lam, p, residues)


def valuation(a: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def generator_points(a: GroupElement) -> list[PosetPoint]:
    return [PosetPoint(valuation(x, a.p), k) for x, k in zip(a.residues, a.lam.parts) if x]


def ideal_of_element(a: GroupElement) -> Ideal:
    return ideal_of_points(a.lam, generator_points(a))


def canonical_rep(ideal: Ideal, p: int) -> GroupElement:
    """Sum over maximal points ``(r, k)`` of ``p^r`` placed at the first index
    whose part equals ``k``."""
    lam = ideal.lam
    res = [0] * lam.length
    for x in max_elements(ideal):
        res[lam.parts.index(x.k)] = p**x.r
    return GroupElement(lam, p, tuple(res))


@dataclass(frozen=True)
class HomMatrix:
    """Homomorphism ``A_src -> A_dst`` with ``entries[i][j]`` the image of the
    generator of summand ``j`` in summand ``i``."""

    src: Partition
    dst: Partition
    p: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.dst.length or any(len(row) != self.src.length for row in self.entries):
            raise ShapeMismatch("entry matrix does not match source/target lengths")
        for i, mi in enumerate(self.dst.parts):
            for j, lj in enumerate(self.src.parts):
                c = self.entries[i][j]
                if not 0 <= c < self.p**mi or c % self.p ** max(0, mi - lj):
                    raise RangeViolation(f"entry ({i},{j})={c} is not a valid map Z/{self.p}^{lj} -> Z/{self.p}^{mi}")

    @classmethod
    def identity(cls, lam: Partition, p: int) -> "HomMatrix":
        n = lam.length
        return cls(lam, lam, p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, src: Partition, dst: Partition, p: int) -> "HomMatrix":
        return cls(src, dst, p, tuple((0,) * src.length for _ in range(dst.length)))

    def __call__(self, residues: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple(
            sum(c * a for c, a in zip(row, residues)) % p**mi
            for row, mi in zip(self.entries, self.dst.parts)
        )


def apply_hom(phi: HomMatrix, a: GroupElement) -> GroupElement:
    if a.lam != phi.src or a.p != phi.p:
        raise ShapeMismatch(f"element of type {a.lam} at p={a.p} does not fit {phi.src} at p={phi.p}")
    return GroupElement(phi.dst, phi.p, phi(a.residues))


def hom_space_exponent(lam: Partition, mu: Partition) -> int:
    return sum(min(lj, mi) for mi in mu.parts for lj in lam.parts)


def enumerate_homs(lam: Partition, mu: Partition, p: int, bound: int | None = None) -> Iterator[HomMatrix]:
    require_prime(p)
    bound = hom_space_bound() if bound is None else bound
    size = p ** hom_space_exponent(lam, mu)
    if size > bound:
        raise BoundExceeded(f"hom space {lam} -> {mu} at p={p} has {size} maps, bound {bound}", bound=bound)
    choices = [
        range(0, p**mi, p ** max(0, mi - lj))
        for mi in mu.parts
        for lj in lam.parts
    ]
    n = lam.length
    for flat in product(*choices):
        rows = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(mu.length))
        yield HomMatrix(lam, mu, p, rows)


def group_order(lam: Partition, p: int) -> int:
    return p**lam.weight


def all_elements(lam: Partition, p: int) -> Iterator[tuple[int, ...]]:
    return product(*(range(p**k) for k in lam.parts))


def _check_group_bound(lam: Partition, p: int, bound: int | None) -> None:
    bound = DEFAULT_GROUP_BOUND if bound is None else bound
    if group_order(lam, p) > bound:
        raise BoundExceeded(f"group of type {lam} at p={p} exceeds {bound} elements", bound=bound)


def is_automorphism(phi: HomMatrix, group_bound: int | None = None) -> bool:
    if phi.src != phi.dst:
        raise ShapeMismatch(f"{phi.src} != {phi.dst}: not an endomorphism")
    _check_group_bound(phi.src, phi.p, group_bound)
    images = {phi(a) for a in all_elements(phi.src, phi.p)}
    return len(images) == group_order(phi.src, phi.p)


@lru_cache(maxsize=32)
def _automorphisms(lam: Partition, p: int, bound: int) -> tuple[HomMatrix, ...]:
    return tuple(phi for phi in enumerate_homs(lam, lam, p, bound) if is_automorphism(phi))


def automorphisms(lam: Partition, p: int, bound: int | None = None) -> tuple[HomMatrix, ...]:
    _check_group_bound(lam, p, None)
    return _automorphisms(lam, p, hom_space_bound() if bound is None else bound)


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            # smaller representative wins, so the result is order independent
            if y < x:
                x, y = y, x
            self.parent[y] = x

    def classes(self) -> list[frozenset]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return [frozenset(groups[k]) for k in sorted(groups)]


def _orbit_partition(points, autos, key=lambda t: t):
    uf = UnionFind(points)
    for phi in autos:
        for x in points:
            uf.union(x, key(phi(x)))
    return uf.classes()


def brute_orbits(lam: Partition, p: int, bound: int | None = None) -> list[frozenset[tuple[int, ...]]]:
    """Orbits of the full automorphism group, as sets of residue tuples, sorted
    by their least element."""
    autos = automorphisms(lam, p, bound)
    return _orbit_partition(list(all_elements(lam, p)), autos)


def degeneration_images(a: GroupElement, mu: Partition, bound: int | None = None) -> set[tuple[int, ...]]:
    """All ``phi(a)`` for homomorphisms ``phi: A_lam -> A_mu``."""
    return {phi(a.residues) for phi in enumerate_homs(a.lam, mu, a.p, bound)}


def brute_degenerates(a: GroupElement, b: GroupElement, bound: int | None = None) -> bool:
    if a.p != b.p:
        raise PrimeMismatch(f"p={a.p} vs p={b.p}")
    return any(phi(a.residues) == b.residues for phi in enumerate_homs(a.lam, b.lam, a.p, bound))


def structural_degenerates(a: GroupElement, b: GroupElement) -> bool:
    """Ideal containment test: each generator of ``b`` lies below one of ``a``."""
    if a.p != b.p:
        raise PrimeMismatch(f"p={a.p} vs p={b.p}")
    gens_a = generator_points(a)
    return all(any(geq(x, y) for x in gens_a) for y in generator_points(b))


def subgroup_elements(ideal: Ideal, p: int) -> Iterator[tuple[int, ...]]:
    """Elements whose coordinates have valuation at least the column start."""
    return product(*(range(0, p**k, p**r) for k, r in zip(ideal.lam.parts, ideal.rvec)))


def brute_subquotient_orbits(j: Ideal, i: Ideal, p: int, bound: int | None = None) -> list[frozenset[tuple[int, ...]]]:
    """Orbits on the cosets of ``A_J`` in ``A_I``.

    Each coset is named by its representative with coordinate ``i`` reduced
    modulo ``p^{r_i(J)}``.
    """
    require_prime(p)
    if not is_subideal(j, i):
        raise NotSubideal(f"{j} is not contained in {i}")
    lam = i.lam
    mods = [p**r for r in j.rvec]

    def key(res):
        return tuple(a % m for a, m in zip(res, mods))

    cosets = sorted({key(a) for a in subgroup_elements(i, p)})
    return _orbit_partition(cosets, automorphisms(lam, p, bound), key)
