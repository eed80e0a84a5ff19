"""Automorphism orbits of finite abelian p-groups via order ideals."""

from .ideals import (
    Ideal,
    boundary,
    contains,
    empty_ideal,
    enumerate_ideals,
    full_ideal,
    ideal_from_rvec,
    ideal_of_points,
    ideals_between,
    intersection,
    is_subideal,
    max_elements,
    point_count_difference,
    union,
    weighted_size,
)
from .orbitcalc import (
    char_subgroup_order,
    count_orbits_miller,
    count_orbits_tau,
    maximal_orbit_density,
    mobius,
    orbit_size,
    orbit_size_mobius,
    orbit_size_product,
    subquotient_orbit_order,
)
from .partitions import Partition, multiplicity, parse_partition
from .polynomial import OrbitPolynomial, evaluate
from .poset import PosetPoint, count_maximal_chains, geq, points_of

__version__ = "0.1.0"
