"""Command-line entry point.

    convsemi check INSTANCE [--seed N] [--cases N] [--laws L ...] [--out DIR]
    convsemi membership INSTANCE --point a/b ...
    convsemi join INSTANCE --x a/b ... --y a/b ...
    convsemi support POLYTOPE --direction a/b ... [--direction ...]
    convsemi solve-params (--swap P Q | --assoc-pq P Q | --assoc-pr P R)

Exit status: 0 success / all laws pass, 1 some law failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import algebra, riesz, suite, wspace
from .algebra import Mutated
from .numeric import DomainError, format_rational, format_vector, parse_rational, parse_vector
from .polytope import Polytope
from .wspace import Witness


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _instance_arg(value):
    """A path, or an inline JSON object (used by --query files)."""
    if isinstance(value, dict):
        return suite.instance_from_json(value)
    return suite.load_instance(value)


def _load_query(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _translation(inst):
    return None if inst.translation is None else format_vector(inst.translation)


def cmd_check(args) -> int:
    inst = suite.load_instance(args.instance)
    cfg = suite.SuiteConfig(
        seed=args.seed,
        cases_per_law=args.cases,
        laws=args.laws or ["all"],
        denominator_bound=args.denominator_bound,
    )
    model = None
    if args.mutate == "join":
        model = Mutated(inst, join=lambda x, y: x)
    elif args.mutate == "combine":
        model = Mutated(inst, combine=lambda x, y, p: inst.combine(y, x, p))
    status, bundle = suite.run_suite(inst, cfg, model=model, log=lambda line: print(line, file=sys.stderr))
    if args.out:
        suite.write_bundle(bundle, args.out)
    _emit(bundle["summary"])
    return status


def cmd_membership(args) -> int:
    if args.query:
        q = _load_query(args.query)
        inst, point = _instance_arg(q["instance"]), parse_vector(q["point"])
    else:
        inst, point = _instance_arg(args.instance), parse_vector(args.point)
    res = wspace.w_membership(inst, point)
    out = res.to_json()
    out["point"] = format_vector(point)
    out["translation"] = _translation(inst)
    _emit(out)
    return 0


def cmd_join(args) -> int:
    if args.query:
        q = _load_query(args.query)
        inst = _instance_arg(q["instance"])
        x1, x2 = parse_vector(q["x1"]), parse_vector(q["x2"])
        w = q.get("witness")
    else:
        inst = _instance_arg(args.instance)
        x1, x2 = parse_vector(args.x), parse_vector(args.y)
        w = None
        if args.center is not None:
            w = {"center": args.center, "ratio": args.ratio}
    witness = None
    if w is not None:
        witness = Witness(parse_vector(w["center"]), parse_rational(w["ratio"]))
    result, used = wspace.w_join_with_witness(inst, x1, x2, witness)
    _emit({
        "x1": format_vector(x1),
        "x2": format_vector(x2),
        "result": format_vector(result),
        "witness": used.to_json(),
        "translation": _translation(inst),
    })
    return 0


def cmd_support(args) -> int:
    with open(args.polytope) as fh:
        A = Polytope.from_json(json.load(fh))
    dirs = [parse_vector(d) for d in args.direction]
    vals = riesz.support_embed(A, dirs)
    _emit({
        "polytope": A.to_json(),
        "directions": [format_vector(d) for d in dirs],
        "values": [format_rational(v) for v in vals],
    })
    return 0


def cmd_solve_params(args) -> int:
    if args.swap:
        r, s = algebra.solve_swap_params(*map(parse_rational, args.swap))
        _emit({"r": format_rational(r), "s": format_rational(s)})
    elif args.assoc_pq:
        _emit(algebra.solve_assoc_from_pq(*map(parse_rational, args.assoc_pq)).to_json())
    else:
        _emit(algebra.solve_assoc_from_pr(*map(parse_rational, args.assoc_pr)).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="convsemi", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the law-checking suite on an instance")
    c.add_argument("instance")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--cases", type=int, default=500)
    c.add_argument("--laws", nargs="+", metavar="LAW",
                   help="laws or groups: " + ", ".join(list(suite.LAW_GROUPS) + suite.ALL_LAWS))
    c.add_argument("--denominator-bound", type=int, default=64)
    c.add_argument("--out", metavar="DIR", help="write one JSON report per law plus summary.json")
    c.add_argument("--mutate", choices=["join", "combine"],
                   help="swap in a broken operation to confirm the checkers can fail")
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("membership", help="decide membership in the generated subspace W")
    m.add_argument("instance", nargs="?")
    m.add_argument("--point", nargs="+", metavar="Q")
    m.add_argument("--query", metavar="JSON")
    m.set_defaults(func=cmd_membership)

    j = sub.add_parser("join", help="extended join of two points of W")
    j.add_argument("instance", nargs="?")
    j.add_argument("--x", nargs="+", metavar="Q")
    j.add_argument("--y", nargs="+", metavar="Q")
    j.add_argument("--center", nargs="+", metavar="Q", help="explicit witness centre")
    j.add_argument("--ratio", default="1", help="explicit witness ratio")
    j.add_argument("--query", metavar="JSON")
    j.set_defaults(func=cmd_join)

    s = sub.add_parser("support", help="support function values of a polytope")
    s.add_argument("polytope")
    s.add_argument("--direction", nargs="+", action="append", required=True, metavar="Q")
    s.set_defaults(func=cmd_support)

    p = sub.add_parser("solve-params", help="perspective-shift parameter solvers")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--swap", nargs=2, metavar=("P", "Q"))
    g.add_argument("--assoc-pq", nargs=2, metavar=("P", "Q"))
    g.add_argument("--assoc-pr", nargs=2, metavar=("P", "R"))
    p.set_defaults(func=cmd_solve_params)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "membership" and not args.query and (args.instance is None or not args.point):
        _emit({"error": "usage", "message": "give INSTANCE --point ... or --query FILE"})
        return 2
    if args.command == "join" and not args.query and (args.instance is None or not args.x or not args.y):
        _emit({"error": "usage", "message": "give INSTANCE --x ... --y ... or --query FILE"})
        return 2
    try:
        return args.func(args)
    except (DomainError, OSError, KeyError, json.JSONDecodeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
