"""Orbit counts, characteristic subgroup orders and orbit-size polynomials."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod

from .errors import NegativeExponentResidue, NotPrime, NotSubideal
from .ideals import (
    Ideal,
    empty_ideal,
    ideals_between,
    is_subideal,
    max_elements,
    remove_points,
    union,
    weighted_size,
)
from .partitions import Partition
from .polynomial import OrbitPolynomial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def count_orbits_miller(lam: Partition) -> int:
    """Orbit count from consecutive part differences."""
    parts = lam.parts
    return (parts[-1] + 1) * prod(parts[i] - parts[i + 1] + 1 for i in range(len(parts) - 1))


def count_orbits_tau(lam: Partition) -> int:
    """Orbit count as a sum over antichains, grouped by the set of occupied columns.

    For occupied column heights ``a_1 < ... < a_k`` the smallest column offers
    ``a_1`` choices and each larger column ``a_{j+1} - a_j - 1`` choices
    incomparable with the one below it.
    """
    taus = lam.distinct_parts
    total = 1
    for k in range(1, len(taus) + 1):
        for cols in combinations(taus, k):
            total += cols[0] * prod(b - a - 1 for a, b in zip(cols, cols[1:]))
    return total


def char_subgroup_order(ideal: Ideal) -> OrbitPolynomial:
    return OrbitPolynomial.monomial(weighted_size(ideal))


def mobius(j: Ideal, i: Ideal) -> int:
    """Moebius function of the ideal lattice on the interval ``[j, i]``."""
    if not is_subideal(j, i):
        raise NotSubideal(f"{j} is not contained in {i}")
    # the difference is an antichain iff it consists of maximal points of i
    tops = max_elements(i)
    n = 0
    for k in i.lam.distinct_parts:
        gap = j.column_start(k) - i.column_start(k)
        if gap > 1 or (gap == 1 and (i.column_start(k), k) not in tops):
            return 0
        n += gap
    return (-1) ** n


def orbit_size_mobius(ideal: Ideal) -> OrbitPolynomial:
    """Orbit order by Moebius inversion of ``p^[I] = sum_{J <= I} |O_J|``.

    Only ``J`` between ``I`` minus its maximal elements and ``I`` can have a
    nonzero Moebius value, so the sum runs over that interval.
    """
    floor = remove_points(ideal, max_elements(ideal))
    total = OrbitPolynomial()
    for j in ideals_between(floor, ideal):
        mu = mobius(j, ideal)
        if mu:
            total = total + OrbitPolynomial.monomial(weighted_size(j), mu)
    return total


def orbit_size_product(ideal: Ideal) -> OrbitPolynomial:
    """Expand ``p^[I] * prod_{x in max I} (1 - p^-m(x))``."""
    laurent = {weighted_size(ideal): 1}
    for x in max_elements(ideal):
        m = ideal.lam.multiplicity(x.k)
        nxt: dict[int, int] = {}
        for e, c in laurent.items():
            nxt[e] = nxt.get(e, 0) + c
            nxt[e - m] = nxt.get(e - m, 0) - c
        laurent = {e: c for e, c in nxt.items() if c}
    if any(e < 0 for e in laurent):
        raise NegativeExponentResidue(f"negative powers of p left in orbit size of {ideal}")
    return OrbitPolynomial(laurent)


orbit_size = orbit_size_product


def subquotient_orbit_order(j: Ideal, i_prime: Ideal) -> OrbitPolynomial:
    """Order of the orbit labeled ``i_prime`` in a subquotient by ``A_J``.

    Sums orbit orders of every ``I''`` with ``I'' | J = I'`` and divides by
    ``p^[J]`` exactly.
    """
    if not is_subideal(j, i_prime):
        raise NotSubideal(f"{j} is not contained in {i_prime}")
    total = OrbitPolynomial()
    for cand in ideals_between(empty_ideal(i_prime.lam), i_prime):
        if union(cand, j) == i_prime:
            total = total + orbit_size_product(cand)
    return total.div_pow(weighted_size(j))


def maximal_orbit_density(i: Ideal, j: Ideal, p: int) -> Fraction:
    """Fraction of ``A_I / A_J`` occupied by its maximal orbit at the prime ``p``."""
    require_prime(p)
    size = subquotient_orbit_order(j, i).evaluate(p)
    return Fraction(size, p ** (weighted_size(i) - weighted_size(j)))


def density_defect_bound(i: Ideal, p: int) -> Fraction:
    """``sum_{x in max I} p^-m(x)``, an upper bound for one minus the density."""
    return sum((Fraction(1, p ** i.lam.multiplicity(x.k)) for x in max_elements(i)), Fraction(0))
