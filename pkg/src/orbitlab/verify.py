"""Cross-check the combinatorial pipeline against brute force for one group."""

from __future__ import annotations

from .ideals import empty_ideal, enumerate_ideals, ideals_between, is_subideal, union, weighted_size
from .oracle import (
    GroupElement,
    all_elements,
    automorphisms,
    brute_orbits,
    brute_subquotient_orbits,
    canonical_rep,
    degeneration_images,
    ideal_of_element,
    structural_degenerates,
)
from .orbitcalc import count_orbits_miller, count_orbits_tau, orbit_size_mobius, orbit_size_product, subquotient_orbit_order


def _check(checks, name, failures):
    entry = {"name": name, "pass": not failures}
    if failures:
        entry["witness"] = failures[0]
    checks.append(entry)


def run_checks(lam, p, bound=None) -> dict:
    """Run every oracle check for ``(lam, p)`` and return a JSON-ready report.

    Each failing check carries the first counterexample found.
    """
    checks: list[dict] = []
    automorphisms(lam, p, bound)  # fail early on the size guards
    ideals = list(enumerate_ideals(lam))
    orbits = brute_orbits(lam, p, bound)

    def el(res):
        return GroupElement(lam, p, res)

    counts = {
        "brute": len(orbits),
        "miller": count_orbits_miller(lam),
        "tau": count_orbits_tau(lam),
        "enumeration": len(ideals),
    }
    _check(checks, "orbit_count", [] if len(set(counts.values())) == 1 else [{"lambda": str(lam), "p": p, "counts": counts}])

    labels = {}
    bad = []
    for orb in orbits:
        found = {ideal_of_element(el(a)).rvec for a in orb}
        if len(found) != 1:
            bad.append({"orbit_min": list(min(orb)), "ideals": sorted(map(list, found))})
        labels[min(found)] = orb
    if not bad and set(labels) != {i.rvec for i in ideals}:
        bad.append({"labels": sorted(map(list, labels)), "expected": [list(i.rvec) for i in ideals]})
    _check(checks, "orbit_labeling_bijection", bad)

    bad = []
    for i in ideals:
        orb = labels.get(i.rvec, frozenset())
        want = orbit_size_product(i)
        if len(orb) != want.evaluate(p) or orbit_size_mobius(i) != want:
            bad.append({"rvec": list(i.rvec), "brute": len(orb), "formula": str(want)})
    _check(checks, "orbit_sizes", bad)

    bad = []
    for i in ideals:
        rep = canonical_rep(i, p)
        if ideal_of_element(rep) != i or rep.residues not in labels.get(i.rvec, ()):
            bad.append({"rvec": list(i.rvec), "rep": list(rep.residues)})
    _check(checks, "canonical_representatives", bad)

    element_ideals = {a: ideal_of_element(el(a)) for a in all_elements(lam, p)}
    bad = []
    for i in ideals:
        n = sum(1 for j in element_ideals.values() if is_subideal(j, i))
        if n != p ** weighted_size(i):
            bad.append({"rvec": list(i.rvec), "count": n, "expected_exp": weighted_size(i)})
    _check(checks, "characteristic_subgroup_orders", bad)

    bad = []
    elements = list(element_ideals)
    for a in elements:
        images = degeneration_images(el(a), lam, bound)
        for b in elements:
            if (b in images) != structural_degenerates(el(a), el(b)):
                bad.append({"a": list(a), "b": list(b), "brute": b in images})
                break
        if bad:
            break
    _check(checks, "degeneration_equivalence", bad)

    bad = []
    for i in ideals:
        for j in ideals:
            if not is_subideal(j, i):
                continue
            sq = brute_subquotient_orbits(j, i, p, bound)
            between = list(ideals_between(j, i))
            sizes = {}
            for orb in sq:
                sizes[union(ideal_of_element(el(min(orb))), j).rvec] = len(orb)
            expected = {k.rvec: subquotient_orbit_order(j, k).evaluate(p) for k in between}
            if sizes != expected:
                bad.append({"inner": list(j.rvec), "outer": list(i.rvec), "brute": len(sq), "expected": len(between)})
    _check(checks, "subquotient_orbits", bad)

    return {
        "lambda": list(lam.parts),
        "p": p,
        "orbit_count": len(orbits),
        "orbit_sizes": sorted(len(o) for o in orbits),
        "counts": counts,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
