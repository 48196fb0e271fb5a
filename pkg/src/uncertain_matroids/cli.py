"""Command-line front end.

    uncertain-matroids color     INSTANCE
    uncertain-matroids uob       INSTANCE [--method structural|regret]
    uncertain-matroids core      INSTANCE
    uncertain-matroids witgraph  INSTANCE
    uncertain-matroids mcfq      INSTANCE
    uncertain-matroids feasible  INSTANCE --set 0,2
    uncertain-matroids verify    INSTANCE [--limit 7]

Results go to stdout as JSON.  Exit status: 0 on success, 1 on bad input,
2 when a cross-check between two independent computations disagrees.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from .brute import DEFAULT_LIMIT, BruteOracle
from .coloring import color_all
from .errors import MatroidError
from .instance_io import format_rational, load_instance
from .matroid import all_bases
from .model import UncertaintyMatroid
from .queries import (
    compute_witness_structure,
    is_feasible,
    is_minimal_feasible,
    min_cost_feasible_query,
    minimal_feasible_queries,
)
from .uob import exists_uob, find_uob_regret, find_uob_structural, is_uob

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


def _parse_set(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--set expects comma-separated indices, got {text!r}")


def cmd_color(u, args):
    return color_all(u).to_json(), EXIT_OK


def cmd_uob(u, args):
    structural = find_uob_structural(u)
    regret = find_uob_regret(u)
    chosen = structural if args.method == "structural" else regret
    out = {"exists": chosen is not None, "method": args.method}
    if chosen is not None:
        out["basis"] = sorted(chosen)
    agree = (structural is None) == (regret is None)
    out["methods_agree"] = agree
    return out, EXIT_OK if agree else EXIT_MISMATCH


def cmd_core(u, args):
    return {"core": sorted(compute_witness_structure(u).core)}, EXIT_OK


def cmd_witgraph(u, args):
    return compute_witness_structure(u).to_json(), EXIT_OK


def cmd_mcfq(u, args):
    query, cost = min_cost_feasible_query(u)
    return {"query": sorted(query), "cost": format_rational(cost)}, EXIT_OK


def cmd_feasible(u, args):
    ws = compute_witness_structure(u)
    x = args.set
    return {
        "feasible": is_feasible(u, x, ws),
        "minimal": is_minimal_feasible(u, x, ws),
    }, EXIT_OK


def verify(u: UncertaintyMatroid, limit: int = DEFAULT_LIMIT) -> dict:
    """Brute-force report plus its comparison against the polynomial-time paths.

    With non-finite areas only the checks that need no full enumeration run:
    feasibility of the subsets whose own areas are finite (residual existence
    delegated to the coloring test) and the agreement of the two UOB methods.
    """
    oracle = BruteOracle(u, limit)
    coloring = color_all(u)
    ws = compute_witness_structure(u)
    elements = sorted(u.ground)
    subsets = [frozenset(c) for r in range(len(elements) + 1) for c in combinations(elements, r)]
    checks = {"regret_agrees": (find_uob_regret(u) is None) == (find_uob_structural(u) is None)}
    if not oracle.finite:
        testable = [x for x in subsets if all(u.areas[e].is_finite for e in x)]
        checks["feasible"] = all(is_feasible(u, x, ws) == oracle.is_feasible(x) for x in testable)
        return {
            "report": None,
            "checks": checks,
            "skipped": ["colors", "uob_exists", "uob_family", "minimal_feasible"],
            "delegated": oracle.delegated,
            "passed": all(checks.values()),
        }
    report = oracle.report()
    family = set(report.uob_family)
    checks.update(
        colors=all(
            coloring.blue[e] == report.blue[e] and coloring.red[e] == report.red[e]
            for e in elements
        ),
        uob_exists=exists_uob(u, coloring) == bool(family),
        uob_family=all(is_uob(u, b) == (b in family) for b in all_bases(u.matroid)),
        feasible=all(is_feasible(u, x, ws) == oracle.is_feasible(x) for x in subsets),
        minimal_feasible=set(minimal_feasible_queries(ws)) == set(report.minimal_feasible),
    )
    return {"report": report.to_json(), "checks": checks, "skipped": [], "passed": all(checks.values())}


def cmd_verify(u, args):
    out = verify(u, args.limit)
    return out, EXIT_OK if out["passed"] else EXIT_MISMATCH


COMMANDS = {
    "color": cmd_color,
    "uob": cmd_uob,
    "core": cmd_core,
    "witgraph": cmd_witgraph,
    "mcfq": cmd_mcfq,
    "feasible": cmd_feasible,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uncertain-matroids",
        description="Uniformly optimal bases and minimum-cost feasible queries on uncertainty matroids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("instance", help="path to a JSON instance file")
        if name == "uob":
            p.add_argument("--method", choices=["structural", "regret"], default="structural")
        if name == "feasible":
            p.add_argument("--set", type=_parse_set, required=True, help="comma-separated element indices")
        if name == "verify":
            p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="maximum ground-set size")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        u = load_instance(args.instance)
        out, code = COMMANDS[args.command](u, args)
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
