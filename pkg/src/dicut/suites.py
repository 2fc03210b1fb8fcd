"""Verification suites shared by the ``verify`` command and the test-suite.

Each suite yields :class:`Check` records; nothing here prints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import cut_constructions as cc
from .exact_solver import max_cut_exact, max_dicut_bruteforce, max_dicut_exact, min_dicut_exact
from .game_solver import cnu, cover_family, verify_cover_family
from .generators import appendix_extremal, random_bounded_cycle, random_dag, random_digraph
from .graph_core import WeightedDigraph
from .measures import r_plus, underlying_graph

# c_nu for nu = 2..11 as published
PUBLISHED_CNU: dict[int, Fraction] = {
    2: Fraction(1), 3: Fraction(1, 2), 4: Fraction(1, 2), 5: Fraction(2, 5), 6: Fraction(2, 5),
    7: Fraction(3, 8), 8: Fraction(4, 11), 9: Fraction(13, 37), 10: Fraction(9, 26), 11: Fraction(31, 92),
}
SUITES = ("appendix", "bounds", "lp", "claims", "all")
CERTIFIED_ALGORITHMS = ("rplus", "theta", "coloring", "bipartite", "path-matching", "dag-block", "dag", "scc")
EXACT_CHECK_MAX_N = 12


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


# -- random corpora per precondition class -----------------------------------

def random_bipartite_family(d: WeightedDigraph, rng: random.Random) -> list[tuple[set[int], set[int]]]:
    """Random vertex-disjoint components whose two sides are independent sets."""
    comps: list[tuple[set[int], set[int]]] = []
    order = list(range(d.n))
    rng.shuffle(order)
    for v in order:
        nbrs = d.neighbors[v]
        options = [(ci, side) for ci, comp in enumerate(comps) for side in (0, 1)
                   if not comp[side] & nbrs]
        roll = rng.randrange(4)
        if roll == 0:
            continue
        if roll == 1 or not options:
            comps.append(({v}, set()) if rng.randrange(2) else (set(), {v}))
        else:
            ci, side = rng.choice(options)
            comps[ci][side].add(v)
    return comps


def instance_for(algorithm: str, seed: int, max_n: int = EXACT_CHECK_MAX_N) -> tuple[WeightedDigraph, dict]:
    """A seeded random instance in the constructor's precondition class, plus
    any extra constructor arguments."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    density = Fraction(rng.randint(1, 4), 4)
    sub = rng.randrange(1 << 30)
    if algorithm in ("path-matching", "dag-block", "dag"):
        return random_dag(n, density, (1, 6), sub, weight_denominator=rng.randint(1, 3)), {}
    if algorithm == "scc":
        return random_bounded_cycle(n, rng.randint(1, n), sub, density, (1, 4)), {}
    d = random_digraph(n, density, (0, 5), sub, weight_denominator=rng.randint(1, 3))
    if algorithm == "bipartite":
        return d, {"components": random_bipartite_family(d, rng)}
    return d, {}


def certificate_check(algorithm: str, seed: int, max_n: int = EXACT_CHECK_MAX_N) -> tuple[bool, str]:
    """achieved >= guarantee always; guarantee <= exact mac when n is small."""
    d, options = instance_for(algorithm, seed, max_n)
    _, cert = cc.construct(algorithm, d, **options)
    if not cert.holds:
        return False, f"seed {seed}: achieved {cert.achieved_weight} < guarantee {cert.guaranteed_weight}"
    if d.n <= EXACT_CHECK_MAX_N:
        mac = max_dicut_exact(d)[1]
        if cert.guaranteed_weight > mac:
            return False, f"seed {seed}: guarantee {cert.guaranteed_weight} > mac {mac}"
    return True, ""


def sandwich_check(seed: int, max_n: int = EXACT_CHECK_MAX_N) -> tuple[bool, str]:
    """The three inequalities relating mac(D), mac(G), r+ and the min dicut."""
    rng = random.Random(seed)
    d = random_digraph(rng.randint(1, max_n), Fraction(rng.randint(1, 4), 4), (0, 5),
                       rng.randrange(1 << 30), weight_denominator=rng.randint(1, 3))
    mac = max_dicut_exact(d)[1]
    mac_g = max_cut_exact(underlying_graph(d))
    rp = r_plus(d)
    failures = []
    if not mac_g / 2 <= mac <= (mac_g + rp) / 2:
        failures.append(f"mac(G)/2 <= mac(D) <= (mac(G)+r+)/2 fails: {mac_g}, {mac}, {rp}")
    if not (mac_g / 2 + rp) / 2 <= mac:
        failures.append("(mac(G)/2 + r+)/2 <= mac(D) fails")
    if d.n >= 2 and not rp + min_dicut_exact(d)[1] <= mac:
        failures.append("r+ + min dicut <= mac(D) fails")
    return not failures, f"seed {seed}: " + "; ".join(failures) if failures else ""


# -- suites ------------------------------------------------------------------

def appendix_suite() -> Iterator[Check]:
    for nu in range(3, 9):
        d = appendix_extremal(nu)
        ratio = max_dicut_exact(d)[1] / d.total_weight()
        yield Check(f"appendix extremal nu={nu} mac/w", ratio == PUBLISHED_CNU[nu], f"{ratio}")
    for nu in range(5, 9):
        family, t = cover_family(nu)
        ok = verify_cover_family(nu, family, t, len(family))
        yield Check(f"cover family nu={nu} ({len(family)} cuts, each arc >= {t})", ok)


def bounds_suite(seed: int = 0, count: int = 40) -> Iterator[Check]:
    for algorithm in CERTIFIED_ALGORITHMS:
        bad = ""
        for s in range(seed, seed + count):
            ok, detail = certificate_check(algorithm, s)
            if not ok:
                bad = detail
                break
        yield Check(f"certificate {algorithm} x{count}", not bad, bad)
    bad = ""
    for s in range(seed, seed + count):
        d, _ = instance_for("rplus", s)
        if max_dicut_exact(d)[1] != max_dicut_bruteforce(d)[1]:
            bad = f"seed {s}"
            break
    yield Check(f"gray-code solver agrees with brute force x{count}", not bad, bad)
    bad = ""
    for s in range(seed, seed + count):
        ok, detail = sandwich_check(s)
        if not ok:
            bad = detail
            break
    yield Check(f"sandwich inequalities x{count}", not bad, bad)


def lp_suite(max_nu: int = 11) -> Iterator[Check]:
    previous = None
    for nu in range(2, max_nu + 1):
        try:
            sol = cnu(nu)
            sol.check()
        except AssertionError as exc:
            yield Check(f"c_{nu} duality certificate", False, str(exc))
            continue
        yield Check(f"c_{nu} = {PUBLISHED_CNU[nu]}", sol.value == PUBLISHED_CNU[nu], f"got {sol.value}")
        yield Check(f"c_{nu} primal = dual", sol.primal_value == sol.dual_value)
        if previous is not None:
            yield Check(f"c_{nu} <= c_{nu - 1}", sol.value <= previous)
        previous = sol.value


def block_cut_bound_holds(k: int) -> bool:
    target = cc.block_target(k)
    return all(cc.block_pair_cut_probability(k, q) >= target for q in range(cc.block_z(k) + 1))


def n_star_growth_holds(k: int) -> bool:
    return cc.n_star(k) ** 2 >= k ** 3


def block_membership_decreasing(k: int) -> bool:
    probs = cc.block_membership_probabilities(k)
    return all(a > b for a, b in zip(probs, probs[1:]))


def claims_suite() -> Iterator[Check]:
    ks = range(7, 201)
    bad_a = [k for k in ks if not block_cut_bound_holds(k)]
    yield Check("block cut probability >= k/(4k-2), k in [7, 200]", not bad_a, f"fails at {bad_a[:5]}" if bad_a else "")
    bad_b = [k for k in ks if not n_star_growth_holds(k)]
    yield Check("(n*_k)^2 >= k^3, k in [7, 200]", not bad_b, f"fails at {bad_b[:5]}" if bad_b else "")
    bad_c = [k for k in range(7, 51) if not block_membership_decreasing(k)]
    yield Check("X-membership strictly decreasing over blocks, k in [7, 50]", not bad_c,
                f"fails at {bad_c[:5]}" if bad_c else "")
    yield Check("n*_7 = 36", cc.n_star(7) == 36, f"got {cc.n_star(7)}")
    yield Check("n*_8 = 58", cc.n_star(8) == 58, f"got {cc.n_star(8)}")


def run_suite(name: str, seed: int = 0) -> list[Check]:
    table: dict[str, Callable[[], Iterator[Check]]] = {
        "appendix": appendix_suite,
        "bounds": lambda: bounds_suite(seed),
        "lp": lp_suite,
        "claims": claims_suite,
    }
    if name == "all":
        return [c for key in ("appendix", "claims", "bounds", "lp") for c in table[key]()]
    if name not in table:
        raise KeyError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    return list(table[name]())
