"""Command line front end.

Subcommands: solve (exact forest number of one instance), gen (emit a
construction family), verify (run a claim sweep), profile (witness
structure of one instance), bounds (inequality sweep).

Exit codes: 0 success / claim holds, 1 a sweep found counterexamples,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import emit_bbg, parse_bbg
from .errors import BBForestError
from .generators import FAMILIES, GeneratorSpec, build
from .solver import (ENUMERATION_BUDGET, SOLVER_PART_CAP, max_forest,
                     max_forest_bruteforce)
from .theorems import (THEOREM_IDS, check_bounds, merge_reports,
                       profile_structure, verify_constructions,
                       verify_structure, verify_t1_exhaustive,
                       verify_t1_random, verify_t8)

__all__ = ["main", "run"]


def _theorem_aliases() -> dict[str, str]:
    out: dict[str, str] = {}
    for tid in THEOREM_IDS:
        out[tid.lower()] = tid
        out[tid.replace("λ", "l").lower()] = tid
        out[tid.replace("λ", "lambda").lower()] = tid
    return out


_ALIASES = _theorem_aliases()


def _canonical_theorem(text: str) -> str:
    key = text.strip().lower()
    if key not in _ALIASES:
        raise BBForestError(
            f"unknown theorem {text!r}; choose from {', '.join(THEOREM_IDS)}")
    return _ALIASES[key]


def _read_graph(path: str):
    if path == "-":
        return parse_bbg(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return parse_bbg(fh.read())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbforest",
        description="Exact maximum induced forests of balanced bipartite graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance read as BBG text")
    p.add_argument("--in", dest="path", default="-", metavar="FILE",
                   help="input file, - for stdin (default)")
    p.add_argument("--brute", action="store_true",
                   help="use the subset-scan oracle instead of branch and bound")
    p.add_argument("--brute-cap", type=int, default=24, metavar="V",
                   help="vertex cap for --brute (default 24)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true",
                   help="omit elapsed time from the output")

    p = sub.add_parser("gen", help="emit a construction family as BBG text")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True, help="part size")
    p.add_argument("--k", type=int, default=None,
                   help="target minimum degree (families that take one)")
    p.add_argument("--delta-min", type=int, default=None,
                   help="minimum degree floor for random_min_degree")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="run a claim sweep, exit 1 on counterexamples")
    p.add_argument("--theorem", required=True, metavar="ID",
                   help="claim id (ASCII aliases accepted, e.g. T6l2)")
    p.add_argument("--n", type=int, action="append", default=None,
                   help="part size; repeatable where a sweep takes several")
    p.add_argument("--k", type=int, default=None,
                   help="minimum degree parameter for T7 families")
    p.add_argument("--samples", type=int, default=None,
                   help="instances per size for seeded sweeps")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true",
                   help="T1: scan every qualifying matrix instead of sampling")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for seeded sweeps")
    p.add_argument("--budget", type=int, default=ENUMERATION_BUDGET,
                   help="witness enumeration budget for structure sweeps")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--no-timing", action="store_true",
                   help="omit elapsed_ms for byte-stable output")

    p = sub.add_parser("profile", help="witness structure of one instance")
    p.add_argument("--in", dest="path", default="-", metavar="FILE",
                   help="input file, - for stdin (default)")
    p.add_argument("--budget", type=int, default=ENUMERATION_BUDGET)
    p.add_argument("--format", choices=("text", "json"), default="json")

    p = sub.add_parser("bounds", help="exact inequality sweep")
    p.add_argument("--n-max", type=int, default=1000)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--no-timing", action="store_true")

    return parser


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    if args.brute:
        res = max_forest_bruteforce(g, cap=args.brute_cap)
    else:
        res = max_forest(g)
    v1, v2 = res.witness.indices()
    if args.format == "json":
        out = {
            "n": g.n,
            "forest_number": res.forest_number,
            "decycling_number": res.decycling_number,
            "witness": {"v1": list(v1), "v2": list(v2)},
            "nodes_explored": res.nodes_explored,
        }
        if not args.no_timing:
            out["elapsed_ms"] = round(res.elapsed * 1000.0, 3)
        print(json.dumps(out, ensure_ascii=False, indent=2))
    else:
        print(f"n: {g.n}")
        print(f"forest number: {res.forest_number}")
        print(f"decycling number: {res.decycling_number}")
        print(f"witness V1: {' '.join(map(str, v1)) or '-'}")
        print(f"witness V2: {' '.join(map(str, v2)) or '-'}")
        print(f"nodes explored: {res.nodes_explored}")
        if not args.no_timing:
            print(f"elapsed: {res.elapsed * 1000.0:.1f} ms")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GeneratorSpec(family=args.family, n=args.n, k=args.k,
                         delta_min=args.delta_min, seed=args.seed)
    sys.stdout.write(emit_bbg(build(spec)))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    tid = _canonical_theorem(args.theorem)
    ns = args.n
    if tid == "T1":
        if args.exhaustive:
            values = ns if ns is not None else [2, 3, 4]
            parts = [verify_t1_exhaustive(n, allow_n5=(n == 5)) for n in values]
            report = parts[0] if len(parts) == 1 else merge_reports(parts)
        else:
            n = ns[0] if ns else 6
            report = verify_t1_random(n, samples=args.samples or 100,
                                      seed=args.seed, jobs=args.jobs)
    elif tid in ("T2", "T4", "C1"):
        default_n = {"T2": 6, "T4": 7, "C1": 5}[tid]
        n = ns[0] if ns else default_n
        report = verify_structure(n, samples=args.samples or 25,
                                  seed=args.seed, check=tid,
                                  budget=args.budget, jobs=args.jobs)
    elif tid in ("P1", "T6λ1", "T6λ2", "T6λhalf"):
        report = verify_constructions(tid, ns=ns)
    elif tid in ("T7l1", "T7l2"):
        pairs = None
        if ns is not None and args.k is not None:
            pairs = [(n, args.k) for n in ns]
        elif ns is not None or args.k is not None:
            raise BBForestError("T7 sweeps take --n and --k together")
        report = verify_constructions(tid, pairs=pairs)
    elif tid == "T8":
        report = verify_t8(n_values=ns, samples=args.samples or 25,
                           seed=args.seed, jobs=args.jobs)
    elif tid == "BOUNDS":
        report = check_bounds(ns[0] if ns else 1000)
    else:  # pragma: no cover - alias table and THEOREM_IDS stay in sync
        raise BBForestError(f"unhandled theorem {tid}")

    include_timing = not args.no_timing
    if args.format == "json":
        print(json.dumps(report.to_dict(include_timing), ensure_ascii=False,
                         indent=2))
    else:
        print(report.render_text(include_timing))
    return 0 if report.verdict == "pass" else 1


def _cmd_profile(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    prof = profile_structure(g, budget=args.budget)
    if args.format == "json":
        print(json.dumps(prof.to_dict(), ensure_ascii=False, indent=2))
    else:
        print(f"forest number: {prof.forest_number}")
        print(f"smaller-part sizes: {' '.join(map(str, sorted(prof.lambdas)))}")
        print(f"exhaustive: {'yes' if prof.exhaustive else 'no'}")
        for lam, w in sorted(prof.witness_per_lambda.items()):
            v1, v2 = w.indices()
            print(f"  lambda={lam}: V1 {list(v1)} V2 {list(v2)}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    report = check_bounds(args.n_max)
    include_timing = not args.no_timing
    if args.format == "json":
        print(json.dumps(report.to_dict(include_timing), ensure_ascii=False,
                         indent=2))
    else:
        print(report.render_text(include_timing))
    return 0 if report.verdict == "pass" else 1


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return 0 if exc.code in (0, None) else 2
    handlers = {
        "solve": _cmd_solve,
        "gen": _cmd_gen,
        "verify": _cmd_verify,
        "profile": _cmd_profile,
        "bounds": _cmd_bounds,
    }
    try:
        return handlers[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: no such file", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BBForestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
