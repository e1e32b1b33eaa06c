"""Brute-force reference counters.

Everything here is exact and exponential; results are plain Python ints and
serve as the ground truth against which the polynomial-time algorithms and
reduction pipelines are tested.  Hot enumeration loops run in the compiled
kernel when it is available (see eicount._backend).
"""

from __future__ import annotations

import itertools
from collections import deque
from math import factorial

from ._backend import run_kernel
from ._kernels_py import MODE_EDGINJ, MODE_EMB, MODE_HOM
from .config import CapExceeded, check_cap, cap
from .graphs import Graph, Partition, all_partitions, line_graph, quotient

_INF = 255


def _host_encoding(g: Graph):
    """Adjacency bitmasks + flattened BFS hop-distance matrix."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    dist = [_INF] * (g.n * g.n)
    for s in range(g.n):
        dist[s * g.n + s] = 0
        dq = deque([s])
        while dq:
            v = dq.popleft()
            dv = dist[s * g.n + v]
            for u in g.adj[v]:
                if dist[s * g.n + u] == _INF:
                    dist[s * g.n + u] = min(dv + 1, _INF - 1)
                    dq.append(u)
    return masks, dist


def _pattern_encoding(h: Graph):
    """Connected-greedy vertex order with per-position placed neighbors and
    an anchor (first vertex of the component) plus pattern distance to it,
    used for distance-based pruning."""
    order = []
    placed = set()
    while len(order) < h.n:
        best = None
        for v in range(h.n):
            if v in placed:
                continue
            key = (len(h.adj[v] & placed), h.degree(v), -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed.add(best[1])
    pos_of = {v: i for i, v in enumerate(order)}
    parents = [tuple(sorted(pos_of[u] for u in h.adj[v] if pos_of[u] < i))
               for i, v in enumerate(order)]
    # BFS distances inside the pattern, per component anchor
    anchor = [-1] * h.n
    adist = [0] * h.n
    comps = _component_ids(h)
    comp_of = {}
    for comp in comps:
        first = min(comp, key=lambda v: pos_of[v])
        for v in comp:
            comp_of[v] = first
    hdist = _graph_distances(h)
    for i, v in enumerate(order):
        root = comp_of[v]
        if root != v:
            anchor[i] = pos_of[root]
            adist[i] = hdist[v][root]
    return order, parents, anchor, adist


def _component_ids(h: Graph):
    return [frozenset(c) for c in h.components()]


def _graph_distances(g: Graph):
    out = []
    for s in range(g.n):
        d = {s: 0}
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for u in g.adj[v]:
                if u not in d:
                    d[u] = d[v] + 1
                    dq.append(u)
        out.append(d)
    return out


def _check_pattern_cap(h: Graph, g: Graph):
    if h.n <= cap("PATTERN_CAP"):
        return
    # long paths/cycles and similar sparse patterns are admitted when the
    # estimated search volume stays within budget; branching at a parented
    # position is the degree of the current image, so the mean host degree
    # is the realistic per-step factor
    _, parents, _, _ = _pattern_encoding(h)
    mean_deg = max(1.0, 2.0 * g.m / g.n)
    volume = 1.0
    for ps in parents:
        volume *= g.n if not ps else mean_deg
        if volume > cap("SEARCH_VOLUME_CAP"):
            raise CapExceeded(
                f"pattern on {h.n} vertices: search volume exceeds cap")


def _count_maps(h: Graph, g: Graph, mode: int, weighted: bool = False) -> int:
    if h.n == 0:
        return 1
    if g.n == 0:
        return 0
    _check_pattern_cap(h, g)
    masks, dist = _host_encoding(g)
    _, parents, anchor, adist = _pattern_encoding(h)
    weights = None
    if weighted:
        if g.weight is None:
            raise ValueError("host has no edge weights")
        weights = [0] * (g.n * g.n)
        for (u, v), w in g.weight.items():
            weights[u * g.n + v] = w
            weights[v * g.n + u] = w
    return run_kernel("count_maps", g.n, masks, mode, parents, anchor,
                      adist, dist, weights)


def count_hom(h: Graph, g: Graph) -> int:
    """Number of homomorphisms from h to g, by exhaustive enumeration."""
    return _count_maps(h, g, MODE_HOM)


def count_emb(h: Graph, g: Graph) -> int:
    """Number of vertex-injective homomorphisms (embeddings)."""
    return _count_maps(h, g, MODE_EMB)


def count_edginj(h: Graph, g: Graph) -> int:
    """Number of edge-injective homomorphisms: distinct pattern edges must
    land on distinct host edges (vertices may collide)."""
    return _count_maps(h, g, MODE_EDGINJ)


def count_edginj_weighted(h: Graph, g: Graph) -> int:
    """Sum over edge-injective maps of the product of image-edge weights."""
    return _count_maps(h, g, MODE_EDGINJ, weighted=True)


# ---------------------------------------------------------------------------
# matchings

def count_matchings(g: Graph, k: int, colorful: bool = False) -> int:
    """Number of k-edge matchings; with ``colorful``, matchings picking
    exactly one edge from each of the k color classes."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if colorful:
        if g.color is None:
            raise ValueError("colorful matchings need an edge-colored host")
        if k != g.k:
            raise ValueError(f"host declares {g.k} colors, asked for {k}")
        classes = [g.color_classes()[c] for c in range(1, g.k + 1)]
        classes.sort(key=len)

        def rec_col(i, used):
            if i == len(classes):
                return 1
            total = 0
            for u, v in classes[i]:
                if used & (1 << u) or used & (1 << v):
                    continue
                total += rec_col(i + 1, used | (1 << u) | (1 << v))
            return total

        return rec_col(0, 0)

    edges = g.edges

    def rec(start, rem, used):
        if rem == 0:
            return 1
        total = 0
        for i in range(start, len(edges) - rem + 1):
            u, v = edges[i]
            if used & (1 << u) or used & (1 << v):
                continue
            total += rec(i + 1, rem - 1, used | (1 << u) | (1 << v))
        return total

    return rec(0, k, 0)


def matchings_profile(g: Graph, special=()):
    """Tally all matchings of ``g`` by (size, #special vertices covered).

    Returns a dict (size, covered) -> count; the empty matching is included.
    Used by the wedge pipeline to factor out interchangeable pendant edges.
    """
    smask = 0
    for v in special:
        smask |= 1 << v
    edges = g.edges
    out = {}

    def rec(start, size, used):
        key = (size, (used & smask).bit_count())
        out[key] = out.get(key, 0) + 1
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used & (1 << u) or used & (1 << v):
                continue
            rec(i + 1, size + 1, used | (1 << u) | (1 << v))

    rec(0, 0, 0)
    return out


def count_wedge_packings(g: Graph, j: int) -> int:
    """Edge-injective homomorphisms from j disjoint wedges into g, computed
    as 2^j j! times the number of j-matchings in the line graph."""
    if j == 0:
        return 1
    return 2 ** j * factorial(j) * count_matchings(line_graph(g), j)


def count_perfect_matchings(g: Graph) -> int:
    """Exact perfect-matching count via recursive branching on a
    minimum-degree vertex."""
    check_cap("PERFMATCH_CAP", g.n)
    if g.n % 2:
        return 0
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return run_kernel("count_perfect_matchings", g.n, masks)


def count_odd_edge_sets_enum(g: Graph, by_cardinality: bool = False):
    """Edge subsets with every vertex degree odd, by exhaustive enumeration
    over all 2^|E| subsets; optionally tallied by subset size."""
    check_cap("EDGE_SUBSET_CAP", g.m)
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    return run_kernel("count_odd_edge_sets", g.n, eu, ev, by_cardinality)


# ---------------------------------------------------------------------------
# derived counts

def count_edge_disjoint(g: Graph, k: int, kind: str) -> int:
    """Edge-disjoint k-cycles (closed walks with distinct edges, unrooted and
    unoriented) or k-paths, via the edge-injective oracle."""
    if kind == "cycle":
        if k < 3:
            raise ValueError("cycles need k >= 3")
        from .graphs import make_pattern
        total = count_edginj(make_pattern("C", k), g)
        assert total % (2 * k) == 0, "cycle orbit size must divide exactly"
        return total // (2 * k)
    if kind == "path":
        if k < 1:
            raise ValueError("paths need k >= 1")
        from .graphs import make_pattern
        total = count_edginj(make_pattern("P", k), g)
        assert total % 2 == 0, "path orbit size must divide exactly"
        return total // 2
    raise ValueError(f"unknown kind {kind!r}")


def count_simple_cycles(g: Graph, k: int) -> int:
    """Simple (vertex-distinct) k-cycles, via the embedding oracle."""
    if k < 3:
        raise ValueError("cycles need k >= 3")
    from .graphs import make_pattern
    total = count_emb(make_pattern("C", k), g)
    assert total % (2 * k) == 0
    return total // (2 * k)


def count_edginj_via_partition_sum(h: Graph, g: Graph) -> int:
    """Edge-injective homomorphism count as the sum over edge-injective,
    loop-free vertex partitions of the pattern of the embedding counts of
    their quotients.  Independent cross-check for :func:`count_edginj`."""
    check_cap("PATTERN_CAP", h.n)
    total = 0
    for blocks in all_partitions(range(h.n)):
        q = quotient(h, Partition(h.n, blocks))
        if q.degenerate or not q.edge_injective:
            continue
        total += count_emb(q.graph, g)
    return total


# ---------------------------------------------------------------------------
# isomorphism

def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Brute-force isomorphism search with degree pruning."""
    check_cap("ISO_CAP", max(g1.n, g2.n))
    if g1.n != g2.n or g1.m != g2.m:
        return False
    deg1 = sorted(g1.degree(v) for v in range(g1.n))
    deg2 = sorted(g2.degree(v) for v in range(g2.n))
    if deg1 != deg2:
        return False
    order = sorted(range(g1.n), key=lambda v: -g1.degree(v))
    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in range(g2.n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for u in range(g1.n):
                if mapping[u] >= 0 and g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return extend(0)
