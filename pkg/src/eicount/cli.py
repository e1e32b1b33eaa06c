"""Command-line front door.

Subcommands:
  count <quantity>   exact counts via oracle, polynomial algorithm or a
                     named reduction pipeline
  gen <kind> <params...>   emit a builtin pattern in the graph text format
  verify <suite>     run a named identity-verification suite (or "all")

Counts are printed as decimal strings (arbitrary precision); ``--format
json`` emits {"quantity", "value", "algo", "params"} with the value as a
string, never a native number.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import deque

from . import eihom, holant, linegraphs, oracles, reductions, verify
from .config import CapExceeded
from .graphs import Graph, make_pattern, parse_graph, serialize_graph

QUANTITIES = ("hom", "emb", "edginj", "wedginj", "matchings", "colmatch",
              "perfmatch", "odd-edge-sets", "ec-cycles", "ec-paths")


def _load_graph(spec: str) -> Graph:
    if spec.startswith("builtin:"):
        parts = spec[len("builtin:"):].split(",")
        return make_pattern(parts[0], *[int(p) for p in parts[1:]])
    with open(spec, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _bipartition(g: Graph):
    """2-color the host; returns (sideA, sideB) or raises."""
    side = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for u in g.adj[v]:
                if side[u] is None:
                    side[u] = 1 - side[v]
                    dq.append(u)
                elif side[u] == side[v]:
                    raise ValueError("host is not bipartite")
    a = [v for v in range(g.n) if side[v] == 0]
    b = [v for v in range(g.n) if side[v] == 1]
    return a, b


def _pick_left(g: Graph):
    """Choose the pipeline's left side: the other side must have degree <= 2
    and left pairs may share at most one neighbor."""
    a, b = _bipartition(g)
    for left in (a, b):
        try:
            reductions.build_Gr(g, left, 0)
            return left
        except ValueError:
            continue
    raise ValueError("no side of the host satisfies the pipeline preconditions")


def _run_count(args) -> int:
    q = args.quantity
    algo = args.algo
    host = _load_graph(args.host) if args.host else None
    pattern = _load_graph(args.pattern) if args.pattern else None

    def need(flag, what):
        if flag is None:
            raise SystemExit2(f"count {q} requires {what}")

    if q in ("hom", "emb", "edginj", "wedginj"):
        need(pattern, "--pattern")
        need(host, "--host")
        if q == "hom":
            value = oracles.count_hom(pattern, host)
        elif q == "emb":
            value = (oracles.count_emb(pattern, host) if algo == "oracle"
                     else eihom.count_emb_small_vc(pattern, host))
        elif q == "edginj":
            value = (oracles.count_edginj(pattern, host) if algo == "oracle"
                     else eihom.count_edginj_poly(pattern, host, bound=args.bound))
        else:
            value = oracles.count_edginj_weighted(pattern, host)
    elif q == "matchings":
        need(host, "--host")
        need(args.k, "--k")
        if algo == "oracle":
            value = oracles.count_matchings(host, args.k)
        elif algo == "pipeline:wedges":
            value = reductions.count_matchings_via_wedges(host, _pick_left(host), args.k)
        elif algo == "pipeline:apex":
            value = reductions.count_matchings_via_apex(host, _bipartition(host)[0], args.k)
        elif algo == "pipeline:star":
            value = reductions.count_matchings_via_star(host, _pick_left(host), args.k)
        else:
            raise SystemExit2(f"unknown algo {algo!r} for matchings")
    elif q == "colmatch":
        need(host, "--host")
        if host.color is None:
            raise SystemExit2("colmatch needs an edge-colored host")
        if algo == "oracle":
            value = oracles.count_matchings(host, host.k, colorful=True)
        elif algo == "pipeline:subdiv":
            value = holant.colmatch_via_subdivision(host)
        elif algo == "pipeline:uncolored":
            value = holant.colmatch_via_uncolored(host)
        else:
            raise SystemExit2(f"unknown algo {algo!r} for colmatch")
    elif q == "perfmatch":
        need(host, "--host")
        if algo == "oracle":
            value = oracles.count_perfect_matchings(host)
        elif algo == "poly":
            value = linegraphs.count_perfmatch_3regular_line(host)
        elif algo == "pipeline:line":
            value = linegraphs.perfmatch_via_line_reduction(host, args.ell)
        else:
            raise SystemExit2(f"unknown algo {algo!r} for perfmatch")
    elif q == "odd-edge-sets":
        need(host, "--host")
        value = (oracles.count_odd_edge_sets_enum(host) if algo == "oracle"
                 else linegraphs.count_odd_edge_sets(host))
    elif q == "ec-cycles":
        need(host, "--host")
        need(args.k, "--k")
        if algo == "oracle":
            value = oracles.count_edge_disjoint(host, args.k, "cycle")
        elif algo == "pipeline:paths":
            value = reductions.ec_cycles_via_paths(host, args.k)
        else:
            raise SystemExit2(f"unknown algo {algo!r} for ec-cycles")
    elif q == "ec-paths":
        need(host, "--host")
        need(args.k, "--k")
        value = oracles.count_edge_disjoint(host, args.k, "path")
    else:
        raise SystemExit2(f"unknown quantity {q!r}")

    if args.format == "json":
        params = {"k": args.k, "pattern": args.pattern, "host": args.host,
                  "ell": args.ell}
        print(json.dumps({"quantity": q, "value": str(value), "algo": algo,
                          "params": {k: v for k, v in params.items() if v is not None}}))
    else:
        print(value)
    return 0


class SystemExit2(Exception):
    """Usage errors that should exit with status 2."""


def _run_gen(args) -> int:
    g = make_pattern(args.kind, *args.params)
    sys.stdout.write(serialize_graph(g))
    return 0


def _run_verify(args) -> int:
    try:
        results = verify.run_suites([args.suite])
    except KeyError:
        raise SystemExit2(f"unknown suite {args.suite!r}; "
                          f"choose from {', '.join(verify.SUITES)} or all")
    failed = 0
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        failed += not ok
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="eicount",
        description="Exact graph-pattern counting: oracles, a polynomial "
                    "edge-injective homomorphism counter, and executable "
                    "reduction pipelines.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="compute one counting quantity")
    c.add_argument("quantity", choices=QUANTITIES)
    c.add_argument("--pattern", help="graph file or builtin:<kind>,<params>")
    c.add_argument("--host", help="graph file or builtin:<kind>,<params>")
    c.add_argument("--k", type=int, help="solution size where applicable")
    c.add_argument("--algo", default="oracle",
                   help="oracle | poly | pipeline:<name> (default oracle)")
    c.add_argument("--ell", type=int, default=2,
                   help="collar length for pipeline:line (default 2)")
    c.add_argument("--bound", type=int, default=3,
                   help="weak vertex-cover bound for --algo poly (default 3)")
    c.add_argument("--format", choices=("text", "json"), default="text")

    g = sub.add_parser("gen", help="emit a builtin pattern graph")
    g.add_argument("kind")
    g.add_argument("params", nargs="*", type=int)

    v = sub.add_parser("verify", help="run an identity-verification suite")
    v.add_argument("suite", help=f"{', '.join(verify.SUITES)}, or all")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "count":
            return _run_count(args)
        if args.command == "gen":
            return _run_gen(args)
        return _run_verify(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError, linegraphs.DecompositionError,
            linegraphs.DigitOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
