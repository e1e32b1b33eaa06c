#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback on the
three hot workloads: pattern-map enumeration, perfect matchings, and odd
edge-set enumeration.

Run: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import itertools
import random
import time

from eicount import _backend, _kernels_py
from eicount.graphs import Graph, make_pattern
from eicount.linegraphs import replace_matching_with_collars, triangle_expand
from eicount.oracles import _host_encoding, _pattern_encoding
from eicount.reductions import build_cycle_gadget


def timed(fn, *args, repeat=1):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def bench_count_maps(backends, repeat):
    rng = random.Random(0)
    host = Graph(12, [e for e in itertools.combinations(range(12), 2)
                      if rng.random() < 0.45])
    pattern = make_pattern("C", 7)
    masks, dist = _host_encoding(host)
    _, parents, anchor, adist = _pattern_encoding(pattern)
    rows = []
    for name, mod in backends:
        val, dt = timed(mod.count_maps, host.n, masks, 2, parents, anchor,
                        adist, dist, repeat=repeat)
        rows.append((name, val, dt))
    report("edge-injective C_7 maps into a 12-vertex host", rows)

    gadget = build_cycle_gadget(make_pattern("K", 4), 1)
    masks, dist = _host_encoding(gadget)
    weights = [0] * (gadget.n * gadget.n)
    for (u, v), w in gadget.weight.items():
        weights[u * gadget.n + v] = weights[v * gadget.n + u] = w
    pattern = make_pattern("C", 18)
    _, parents, anchor, adist = _pattern_encoding(pattern)
    rows = []
    for name, mod in backends:
        val, dt = timed(mod.count_maps, gadget.n, masks, 2, parents, anchor,
                        adist, dist, weights, repeat=repeat)
        rows.append((name, val, dt))
    report("weighted C_18 maps into the 40-vertex cycle gadget", rows)


def bench_perfect_matchings(backends, repeat):
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                      (0, 3), (1, 4), (2, 5)])
    gp = triangle_expand(prism)
    big = replace_matching_with_collars(gp, gp.meta["matching"], 2)
    masks = [0] * big.n
    for u, v in big.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    rows = []
    for name, mod in backends:
        val, dt = timed(mod.count_perfect_matchings, big.n, masks,
                        repeat=repeat)
        rows.append((name, val, dt))
    report(f"perfect matchings of the {big.n}-vertex collar encoding", rows)


def bench_odd_edge_sets(backends, repeat):
    rng = random.Random(1)
    g = Graph(10, sorted(rng.sample(
        list(itertools.combinations(range(10), 2)), 22)))
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    rows = []
    for name, mod in backends:
        val, dt = timed(mod.count_odd_edge_sets, g.n, eu, ev, False,
                        repeat=repeat)
        rows.append((name, val, dt))
    report("odd edge-sets over 2^22 subsets", rows)


def report(title, rows):
    print(f"\n{title}")
    vals = {v for _, v, _ in rows}
    assert len(vals) == 1, f"backends disagree: {rows}"
    base = max(dt for _, _, dt in rows)
    for name, val, dt in rows:
        print(f"  {name:<10} {dt * 1000:10.1f} ms   (x{base / dt:6.1f})   value={val}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    backends = [("python", _kernels_py)]
    if _backend.compiled_kernels is not None:
        backends.insert(0, ("compiled", _backend.compiled_kernels))
    else:
        print("compiled kernels unavailable; benchmarking the fallback only")
    bench_count_maps(backends, args.repeat)
    bench_perfect_matchings(backends, args.repeat)
    bench_odd_edge_sets(backends, args.repeat)


if __name__ == "__main__":
    main()
