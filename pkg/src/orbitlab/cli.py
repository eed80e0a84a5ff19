"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 internal count mismatch,
4 oracle disagreement, 5 size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import comb

from .errors import BoundExceeded, InputError, MalformedToken
from .ideals import Ideal, enumerate_ideals, ideal_from_rvec, ideals_between, max_elements, weighted_size
from .oracle import (
    GroupElement,
    brute_degenerates,
    canonical_rep,
    generator_points,
    ideal_of_element,
    structural_degenerates,
)
from .orbitcalc import (
    count_orbits_miller,
    count_orbits_tau,
    maximal_orbit_density,
    orbit_size_mobius,
    orbit_size_product,
    require_prime,
    subquotient_orbit_order,
)
from .partitions import parse_partition
from .poset import count_maximal_chains, points_of
from . import verify as verify_mod

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_THEOREM = 4
EXIT_BOUND = 5


class CommandFailed(Exception):
    def __init__(self, code, text):
        super().__init__(text)
        self.code = code
        self.text = text


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise MalformedToken(f"expected comma-separated integers, got {text!r}") from None


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def point_json(x):
    return {"r": x.r, "k": x.k}


def sorted_points(points):
    return sorted(points, key=lambda x: (-x.k, x.r))


# -- poset -----------------------------------------------------------------

def render_poset(lam, fmt: str) -> str:
    sub = points_of(lam)
    pts = list(sub.points)
    index = {x: n for n, x in enumerate(pts)}
    covers = sorted((index[x], index[y]) for x, y in sub.covers)
    if fmt == "json":
        return dump_json({
            "lambda": list(lam.parts),
            "nodes": [point_json(x) for x in pts],
            "covers": [list(c) for c in covers],
        })
    if fmt == "dot":
        lines = [f'digraph "P_{lam}" {{', "  node [shape=plaintext];"]
        for n, x in enumerate(pts):
            # columns by k (larger to the left), rows by k - 2r
            lines.append(f'  n{n} [label="{x.label()}", pos="{-2 * x.k},{x.k - 2 * x.r}!"];')
        for a, b in covers:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines)
    lines = [f"P_({lam}): {len(pts)} points, {len(covers)} covers"]
    for k in reversed(lam.distinct_parts):
        col = [x.label() for x in pts if x.k == k]
        lines.append(f"  column {k}: " + " > ".join(col))
    lines.append("covers:")
    for a, b in covers:
        lines.append(f"  {pts[a].label()} > {pts[b].label()}")
    return "\n".join(lines)


def cmd_poset(args) -> str:
    return render_poset(parse_partition(args.lam), args.format)


# -- orbits ------------------------------------------------------------------

def orbit_row(ideal: Ideal, p=None) -> dict:
    poly = orbit_size_product(ideal)
    row = {
        "rvec": list(ideal.rvec),
        "max": [point_json(x) for x in sorted_points(max_elements(ideal))],
        "weighted_size": weighted_size(ideal),
        "polynomial": poly.to_json(),
    }
    if p is not None:
        row["size_at_p"] = poly.evaluate(p)
        row["canonical_rep"] = list(canonical_rep(ideal, p).residues)
    return row


def cmd_orbits(args) -> str:
    lam = parse_partition(args.lam)
    if args.p is not None:
        require_prime(args.p)
    all_ideals = list(enumerate_ideals(lam))
    counts = {
        "miller": count_orbits_miller(lam),
        "tau": count_orbits_tau(lam),
        "enumeration": len(all_ideals),
    }
    rows = [orbit_row(i, args.p) for i in all_ideals]
    if args.format == "json":
        text = dump_json({"lambda": list(lam.parts), "p": args.p, "orbits": rows, "counts": counts})
    else:
        lines = []
        for i, row in zip(all_ideals, rows):
            maxs = "{" + ", ".join(x.label() for x in sorted_points(max_elements(i))) + "}"
            line = f"{str(i):<20} max={maxs:<28} [I]={row['weighted_size']:<3} |O|={orbit_size_product(i)}"
            if args.p is not None:
                line += f"  size={row['size_at_p']}  rep=({','.join(map(str, row['canonical_rep']))})"
            lines.append(line)
        lines.append(
            f"orbits: {len(rows)} (product formula={counts['miller']}, "
            f"antichain formula={counts['tau']}, enumeration={counts['enumeration']})"
        )
        text = "\n".join(lines)
    if len(set(counts.values())) != 1:
        raise CommandFailed(EXIT_MISMATCH, text + f"\norbit counts disagree: {counts}")
    return text


# -- orbit-size --------------------------------------------------------------

def cmd_orbit_size(args) -> str:
    lam = parse_partition(args.lam)
    ideal = ideal_from_rvec(lam, parse_ints(args.rvec))
    prod_form = orbit_size_product(ideal)
    mob_form = orbit_size_mobius(ideal)
    result = {
        "lambda": list(lam.parts),
        "rvec": list(ideal.rvec),
        "polynomial": prod_form.to_json(),
        "text": str(prod_form),
        "degree": prod_form.degree(),
        "monic": prod_form.is_monic(),
        "formulas_agree": prod_form == mob_form,
    }
    if args.p is not None:
        require_prime(args.p)
        result["size_at_p"] = prod_form.evaluate(args.p)
    if args.format == "json":
        text = dump_json(result)
    else:
        lines = [str(prod_form), f"degree: {result['degree']}", f"monic: {str(result['monic']).lower()}"]
        if args.p is not None:
            lines.append(f"value at p={args.p}: {result['size_at_p']}")
        text = "\n".join(lines)
    if prod_form != mob_form:
        raise CommandFailed(EXIT_MISMATCH, text + f"\nMoebius form disagrees: {mob_form}")
    return text


# -- degenerates -------------------------------------------------------------

def cmd_degenerates(args) -> str:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu) if args.mu else lam
    require_prime(args.p)
    a = GroupElement(lam, args.p, parse_ints(args.a))
    b = GroupElement(mu, args.p, parse_ints(args.b))
    verdict = structural_degenerates(a, b)
    try:
        brute = brute_degenerates(a, b)
    except BoundExceeded:
        brute = None
    result = {
        "degenerates": verdict,
        "generators_a": [point_json(x) for x in generator_points(a)],
        "generators_b": [point_json(x) for x in generator_points(b)],
        "ideal_a": list(ideal_of_element(a).rvec),
        "ideal_b": list(ideal_of_element(b).rvec),
        "brute_force": brute,
    }
    if args.format == "json":
        text = dump_json(result)
    else:
        ga = ", ".join(x.label() for x in generator_points(a)) or "none"
        gb = ", ".join(x.label() for x in generator_points(b)) or "none"
        lines = [
            str(verdict).lower(),
            f"generators of I(a): {ga}",
            f"generators of I(b): {gb}",
            "brute force: " + ("skipped (hom space over bound)" if brute is None else str(brute).lower()),
        ]
        text = "\n".join(lines)
    if brute is not None and brute != verdict:
        raise CommandFailed(EXIT_THEOREM, text + "\nstructural and brute-force verdicts disagree")
    return text


# -- subquotient -------------------------------------------------------------

def cmd_subquotient(args) -> str:
    lam = parse_partition(args.lam)
    outer = ideal_from_rvec(lam, parse_ints(args.outer))
    inner = ideal_from_rvec(lam, parse_ints(args.inner))
    if args.p is not None:
        require_prime(args.p)
    between = list(ideals_between(inner, outer))
    rows = []
    for i in between:
        poly = subquotient_orbit_order(inner, i)
        row = {"rvec": list(i.rvec), "polynomial": poly.to_json()}
        if args.p is not None:
            row["size_at_p"] = poly.evaluate(args.p)
        rows.append((i, poly, row))
    quotient_exp = weighted_size(outer) - weighted_size(inner)
    result = {
        "lambda": list(lam.parts),
        "outer": list(outer.rvec),
        "inner": list(inner.rvec),
        "orbits": [r for _, _, r in rows],
        "quotient_order_exp": quotient_exp,
    }
    if args.p is not None:
        dens = maximal_orbit_density(outer, inner, args.p)
        result["max_orbit_density"] = str(dens)
    if args.format == "json":
        return dump_json(result)
    lines = []
    for i, poly, row in rows:
        line = f"{str(i):<20} |orbit|={poly}"
        if args.p is not None:
            line += f"  size={row['size_at_p']}"
        lines.append(line)
    lines.append(f"orbits: {len(rows)}; quotient order p^{quotient_exp}")
    if args.p is not None:
        lines.append(f"maximal orbit density at p={args.p}: {result['max_orbit_density']}")
    return "\n".join(lines)


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> str:
    lam = parse_partition(args.lam)
    require_prime(args.p)
    start = time.perf_counter()
    report = verify_mod.run_checks(lam, args.p, bound=args.max_aut_space)
    report["command"] = " ".join(["verify", f"--lambda {lam}", f"--p {args.p}"])
    if args.timing:
        report["wall_time"] = round(time.perf_counter() - start, 3)
    if args.format == "json":
        text = dump_json(report)
    else:
        lines = [f"verify lambda=({lam}) p={args.p}"]
        for c in report["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(f"  {status}  {c['name']}" + ("" if c["pass"] else f"  witness: {c.get('witness')}"))
        sizes = ",".join(str(s) for s in report["orbit_sizes"])
        lines.append(("PASS" if report["pass"] else "FAIL") + f" ({report['orbit_count']} orbits, sizes {sizes})")
        if args.timing:
            lines.append(f"wall time: {report['wall_time']}s")
        text = "\n".join(lines)
    if not report["pass"]:
        raise CommandFailed(EXIT_THEOREM, text)
    return text


# -- chains ------------------------------------------------------------------

def catalan_index(value: int, limit: int = 64):
    for i in range(limit):
        if comb(2 * i, i) // (i + 1) == value:
            return i
    return None


def cmd_chains(args) -> str:
    count = count_maximal_chains(args.n)
    idx = catalan_index(count)
    if args.format == "json":
        return dump_json({"n": args.n, "chains": count, "catalan_index": idx})
    return f"{count}\ncatalan index: {idx}"


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitlab", description="Automorphism orbits of finite abelian p-groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
        sp.add_argument("--output", "-o", help="write to FILE instead of stdout")
        return sp

    sp = add("poset", cmd_poset, "points and covers of P_lambda")
    sp.add_argument("--lambda", dest="lam", required=True)

    sp = add("orbits", cmd_orbits, "list every orbit with its ideal and size")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--p", type=int)

    sp = add("orbit-size", cmd_orbit_size, "orbit size polynomial of one ideal")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--rvec", required=True)
    sp.add_argument("--p", type=int)

    sp = add("degenerates", cmd_degenerates, "does a degenerate to b")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", help="type of the target group (default: lambda)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)

    sp = add("subquotient", cmd_subquotient, "orbits on A_outer / A_inner")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--outer", required=True)
    sp.add_argument("--inner", required=True)
    sp.add_argument("--p", type=int)

    sp = add("verify", cmd_verify, "brute-force cross-check for one group")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-aut-space", type=int, default=None)
    sp.add_argument("--timing", action="store_true", help="include wall time (output no longer reproducible)")

    sp = add("chains", cmd_chains, "count maximal chains in P_n")
    sp.add_argument("--n", type=int, required=True)
    return parser


def run(argv=None) -> tuple[int, str, argparse.Namespace]:
    """Run a command; return ``(exit_code, text, args)`` without printing."""
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
        code = EXIT_OK
    except CommandFailed as exc:
        text, code = exc.text, exc.code
    except BoundExceeded as exc:
        text, code = f"error: {exc}", EXIT_BOUND
    except InputError as exc:
        text, code = f"error: {type(exc).__name__}: {exc}", EXIT_INPUT
    return code, text, args


def main(argv=None) -> int:
    code, text, args = run(argv)
    if args.output and code == EXIT_OK:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=sys.stdout if code == EXIT_OK else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
