from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from orbitlab.errors import NotPrime, NotSubideal
from orbitlab.ideals import (
    Ideal,
    empty_ideal,
    enumerate_ideals,
    full_ideal,
    ideals_between,
    is_subideal,
    max_elements,
    remove_points,
    weighted_size,
)
from orbitlab.orbitcalc import (
    char_subgroup_order,
    count_orbits_miller,
    count_orbits_tau,
    density_defect_bound,
    is_prime,
    maximal_orbit_density,
    mobius,
    orbit_size_mobius,
    orbit_size_product,
    subquotient_orbit_order,
)
from orbitlab.oracle import brute_subquotient_orbits
from orbitlab.partitions import Partition, partitions_in_box
from orbitlab.polynomial import OrbitPolynomial

PAPER_A = OrbitPolynomial({16: 1, 15: -1, 14: -1, 13: 1})
PAPER_B = OrbitPolynomial({10: 1, 9: -1, 8: -1, 7: 1})
L21 = Partition((2, 1))


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(10007) and not is_prime(10001)


@pytest.mark.parametrize("parts,expected", [((7, 5, 3, 3, 2), 54), ((5,), 6), ((1,), 2), ((2, 1), 4), ((3, 1), 6)])
def test_orbit_counts(parts, expected):
    lam = Partition(parts)
    assert count_orbits_miller(lam) == expected
    assert count_orbits_tau(lam) == expected


def test_tau_count_direct_expansion_small():
    # subsets of {1, 2}: empty -> 1, {1} -> 1, {2} -> 2, {1,2} -> 1 * (2 - 1 - 1) = 0
    assert count_orbits_tau(L21) == 1 + 1 + 2 + 0


def test_char_subgroup_order(lam, ideal_a, ideal_b):
    assert char_subgroup_order(ideal_a) == OrbitPolynomial.monomial(16)
    assert char_subgroup_order(ideal_b) == OrbitPolynomial.monomial(10)
    assert char_subgroup_order(empty_ideal(lam)) == 1


def test_mobius_examples(lam, ideal_a):
    assert mobius(ideal_a, ideal_a) == 1
    for x in max_elements(ideal_a):
        assert mobius(remove_points(ideal_a, [x]), ideal_a) == -1
    assert mobius(remove_points(ideal_a, max_elements(ideal_a)), ideal_a) == 1
    assert mobius(empty_ideal(L21), full_ideal(L21)) == 0
    with pytest.raises(NotSubideal):
        mobius(full_ideal(L21), empty_ideal(L21))


@pytest.mark.parametrize("parts", [(2, 1), (3, 1), (2, 2), (3, 2, 1)], ids=str)
def test_mobius_is_inverse_of_zeta(parts):
    # sum_{J <= K <= I} mu(K, I) = [J == I], checked on the full lattice
    lam = Partition(parts)
    ideals = list(enumerate_ideals(lam))
    for i in ideals:
        for j in ideals:
            if is_subideal(j, i):
                total = sum(mobius(k, i) for k in ideals_between(j, i))
                assert total == (1 if i == j else 0)


def test_orbit_size_paper(ideal_a, ideal_b, lam):
    assert orbit_size_mobius(ideal_a) == PAPER_A
    assert orbit_size_product(ideal_a) == PAPER_A
    assert orbit_size_mobius(ideal_b) == PAPER_B
    assert orbit_size_product(ideal_b) == PAPER_B
    assert orbit_size_product(empty_ideal(lam)) == 1
    assert orbit_size_mobius(empty_ideal(lam)) == 1


def test_orbit_size_small():
    assert orbit_size_product(full_ideal(Partition((1,)))) == OrbitPolynomial({1: 1, 0: -1})
    assert orbit_size_product(Ideal(L21, (1, 0))) == OrbitPolynomial({2: 1, 1: -1})


def _inclusion_exclusion(ideal):
    # independent of both formulas: sum over subsets S of max elements of
    # (-1)^|S| p^[I minus S]
    total = OrbitPolynomial()
    m = sorted(max_elements(ideal))
    for size in range(len(m) + 1):
        for s in combinations(m, size):
            total = total + OrbitPolynomial.monomial(weighted_size(remove_points(ideal, s)), (-1) ** size)
    return total


@pytest.mark.parametrize("lam", list(partitions_in_box(5, 4)), ids=str)
def test_polynomial_identities(lam):
    grand = OrbitPolynomial()
    ideals = list(enumerate_ideals(lam))
    for i in ideals:
        poly = orbit_size_product(i)
        assert poly == orbit_size_mobius(i) == _inclusion_exclusion(i)
        assert poly.degree() == weighted_size(i)
        assert poly.is_monic()
        grand = grand + poly
        below = sum((orbit_size_product(j) for j in ideals_between(empty_ideal(lam), i)), OrbitPolynomial())
        assert below == OrbitPolynomial.monomial(weighted_size(i))
    assert grand == OrbitPolynomial.monomial(lam.weight)


def test_subquotient_trivial_cases(lam, ideal_a, ideal_b):
    e = empty_ideal(lam)
    assert subquotient_orbit_order(e, ideal_a) == orbit_size_product(ideal_a)
    assert subquotient_orbit_order(ideal_b, ideal_b) == 1
    with pytest.raises(NotSubideal):
        subquotient_orbit_order(ideal_a, ideal_b)


def test_subquotient_small_example_against_brute():
    j, i_prime = Ideal(L21, (1, 1)), Ideal(L21, (1, 0))
    poly = subquotient_orbit_order(j, i_prime)
    assert poly == OrbitPolynomial({1: 1, 0: -1})
    for p in (2, 3):
        orbits = brute_subquotient_orbits(j, full_ideal(L21), p)
        # orbit of the coset of the generator of the Z/p summand
        target = next(o for o in orbits if (0, 1) in o)
        assert len(target) == poly.evaluate(p)


@pytest.mark.parametrize("parts", [(2, 1), (3, 2, 1), (4, 2), (3, 3, 1)], ids=str)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_subquotient_orders_sum_to_quotient(parts, p):
    lam = Partition(parts)
    ideals = list(enumerate_ideals(lam))
    for i in ideals:
        for j in ideals:
            if is_subideal(j, i):
                total = sum(subquotient_orbit_order(j, k).evaluate(p) for k in ideals_between(j, i))
                assert total == p ** (weighted_size(i) - weighted_size(j))


def test_density_examples():
    full, e = full_ideal(L21), empty_ideal(L21)
    assert maximal_orbit_density(full, e, 2) == Fraction(1, 2)
    assert maximal_orbit_density(full, e, 101) == Fraction(100, 101)
    assert maximal_orbit_density(full, full, 7) == 1
    with pytest.raises(NotPrime):
        maximal_orbit_density(full, e, 4)


pairs = st.sampled_from([
    (j, i)
    for lam in partitions_in_box(4, 3)
    for i in enumerate_ideals(lam)
    for j in enumerate_ideals(lam)
    if is_subideal(j, i)
])


@settings(max_examples=200)
@given(pairs, st.sampled_from([2, 3, 5, 7, 101]))
def test_density_bound(pair, p):
    j, i = pair
    dens = maximal_orbit_density(i, j, p)
    assert 0 < dens <= 1
    assert 1 - dens <= density_defect_bound(i, p)
    assert dens >= Fraction(orbit_size_product(i).evaluate(p), p ** weighted_size(i))


@pytest.mark.parametrize("parts", [(3, 1), (3, 2, 2), (4, 2, 1)], ids=str)
def test_mobius_matches_point_set_definition(parts):
    lam = Partition(parts)
    ideals = list(enumerate_ideals(lam))
    for i in ideals:
        for j in ideals:
            if not is_subideal(j, i):
                continue
            diff = i.points() - j.points()
            antichain = all(not (x != y and (x.r <= y.r and x.k - x.r >= y.k - y.r)) for x in diff for y in diff)
            assert mobius(j, i) == ((-1) ** len(diff) if antichain else 0)
