"""Command-line front end: ``dicut gen|exact|bound|cnu|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error or failed
precondition, 3 instance too large for the exact solver.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import generators as gen
from .cut_constructions import ALGORITHMS, construct, random_scheme
from .exact_solver import DEFAULT_MAX_N, InstanceTooLargeError, max_dicut_exact
from .game_solver import cnu
from .graph_core import (
    DicutError,
    dicut_weight,
    format_instance,
    format_rational,
    read_instance,
    to_rational,
)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3

FAMILIES = ("tournament", "two-tournament", "staircase", "staircase-trimmed", "appendix",
            "transitive", "random-dag", "random-digraph", "bounded-cycle")


def _rat(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"family {args.family} needs {', '.join(missing)}")


def _generate(args: argparse.Namespace):
    f = args.family
    if f == "tournament":
        _need(args, "k")
        return gen.regular_tournament(args.k)
    if f == "two-tournament":
        _need(args, "k", "theta")
        return gen.two_tournament(args.k, args.theta)
    if f == "staircase":
        _need(args, "n")
        return gen.staircase(args.n)
    if f == "staircase-trimmed":
        _need(args, "m")
        return gen.staircase_trimmed(args.m)
    if f == "appendix":
        _need(args, "nu")
        return gen.appendix_extremal(args.nu)
    if f == "transitive":
        _need(args, "nu")
        return gen.complete_transitive_dag(args.nu)
    _need(args, "n")
    density = args.density if args.density is not None else Fraction(1, 2)
    if f == "random-dag":
        return gen.random_dag(args.n, density, (args.wmin, args.wmax), args.seed, args.wden)
    if f == "random-digraph":
        return gen.random_digraph(args.n, density, (args.wmin, args.wmax), args.seed, args.wden)
    _need(args, "l")
    return gen.random_bounded_cycle(args.n, args.l, args.seed, density, (args.wmin, args.wmax))


def cmd_gen(args: argparse.Namespace) -> int:
    text = format_instance(_generate(args))
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    d = read_instance(args.path)
    start = time.perf_counter()
    cut, mac = max_dicut_exact(d, args.max_n)
    elapsed = (time.perf_counter() - start) * 1000
    w = d.total_weight()
    ratio = mac / w if w else None
    if args.json:
        print(json.dumps({"n": d.n, "m": d.m, "w": format_rational(w), "mac": format_rational(mac),
                          "ratio": format_rational(ratio) if ratio is not None else None,
                          "cut": cut.sorted(), "elapsed_ms": round(elapsed, 3)}))
    else:
        print(f"mac = {format_rational(mac)}")
        print(f"w = {format_rational(w)}" + (f", mac/w = {format_rational(ratio)}" if ratio is not None else ""))
        print(f"X = {cut.sorted()}")
        print(f"elapsed_ms = {elapsed:.3f}")
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    d = read_instance(args.path)
    options = {"k": args.k} if args.k is not None else {}
    start = time.perf_counter()
    cut, cert = construct(args.algorithm, d, **options)
    elapsed = (time.perf_counter() - start) * 1000
    report = {
        "algorithm": args.algorithm,
        "n": d.n,
        "m": d.m,
        "w": format_rational(d.total_weight()),
        "guarantee": format_rational(cert.guaranteed_weight),
        "achieved": format_rational(cert.achieved_weight),
        "cut": cut.sorted(),
        "seed": args.seed,
        "elapsed_ms": round(elapsed, 3),
        "passed": cert.holds,
        "branch": cert.branch,
    }
    if args.randomized:
        scheme = random_scheme(args.algorithm, d, **options)
        if scheme is None:
            report["randomized"] = None
        else:
            rng = random.Random(args.seed)
            best = max((dicut_weight(d, scheme.sample(rng)) for _ in range(args.trials)), default=Fraction(0))
            report["randomized"] = {"trials": args.trials, "best": format_rational(best),
                                    "expectation": format_rational(scheme.expectation(d))}
    if args.json:
        print(json.dumps(report))
    else:
        for key, value in report.items():
            print(f"{key} = {value}")
        print("PASS" if cert.holds else "FAIL")
    return EXIT_OK if cert.holds else EXIT_FAIL


def cmd_cnu(args: argparse.Namespace) -> int:
    sol = cnu(args.nu)
    dist = [{"X": c.sorted(), "p": format_rational(p)} for c, p in sol.cut_distribution]
    adv = [{"arc": list(a), "t": format_rational(t)} for a, t in sorted(sol.adversary_weights.items()) if t]
    best_response = sol.best_response_value()
    min_cover = min(sol.coverage().values())
    if args.json:
        print(json.dumps({"nu": sol.nu, "value": format_rational(sol.value), "cut_distribution": dist,
                          "adversary_weights": adv, "primal": format_rational(sol.primal_value),
                          "dual": format_rational(sol.dual_value), "min_coverage": format_rational(min_cover),
                          "best_response": format_rational(best_response)}))
    else:
        print(f"c_{sol.nu} = {format_rational(sol.value)}")
        print("cut distribution:")
        for entry in dist:
            print(f"  {entry['p']}  X = {entry['X']}")
        print("adversary weights:")
        for entry in adv:
            print(f"  {entry['t']}  {entry['arc'][0]} -> {entry['arc'][1]}")
        print(f"certificate: min arc coverage {format_rational(min_cover)}, "
              f"best response {format_rational(best_response)}, "
              f"primal {format_rational(sol.primal_value)} = dual {format_rational(sol.dual_value)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = run_suite(args.suite, args.seed)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dicut", description="Certified maximum directed cut bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--k", type=int)
    p.add_argument("--theta", type=_rat)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--l", type=int, help="cycle length bound for bounded-cycle")
    p.add_argument("--density", type=_rat)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=5)
    p.add_argument("--wden", type=int, default=1, help="weight denominator")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("exact", help="exact maximum dicut")
    p.add_argument("path")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bound", help="certified constructive dicut")
    p.add_argument("algorithm", choices=ALGORITHMS)
    p.add_argument("path")
    p.add_argument("--k", type=int, help="block parameter for dag-block")
    p.add_argument("--randomized", action="store_true")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("cnu", help="exact c_nu from the covering game")
    p.add_argument("nu", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cnu)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (DicutError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
