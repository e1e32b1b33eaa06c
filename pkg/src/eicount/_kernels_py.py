"""Pure-Python fallback for the hot counting kernels.

Same API as the compiled extension ``eicount._kernels``; adjacency is passed
as integer bitmasks so host graphs of any size work here (the compiled
kernels cap hosts at 63 vertices and raise, triggering this fallback).
"""

from __future__ import annotations

MODE_HOM = 0
MODE_EMB = 1
MODE_EDGINJ = 2

_INF = 255


def count_maps(n, adj, mode, parents, anchor, anchor_dist, dist, weights=None):
    """Count (weighted) pattern maps into a host graph.

    n: host vertex count; adj: per-vertex neighbor bitmasks.
    parents[p]: images already placed that position p must be adjacent to.
    anchor[p]/anchor_dist[p]: a placed position whose host distance to the
    new image may not exceed the pattern distance (-1 disables the check).
    dist: flattened n*n hop distances (255 = unreachable).
    weights: flattened n*n edge weights; when given, each map contributes
    the product of its image-edge weights (mode must be MODE_EDGINJ).
    """
    npos = len(parents)
    if npos == 0:
        return 1
    full = (1 << n) - 1
    img = [0] * npos
    used = [0] * n  # used[u] bit v set <=> host edge {u,v} already an image
    total = 0

    def rec(pos, acc):
        nonlocal total
        ps = parents[pos]
        if ps:
            cand = adj[img[ps[0]]]
            for q in ps[1:]:
                cand &= adj[img[q]]
        else:
            cand = full
        if mode == MODE_EMB:
            for q in range(pos):
                cand &= ~(1 << img[q])
        a = anchor[pos]
        amax = anchor_dist[pos]
        arow = img[a] * n if a >= 0 else 0
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if a >= 0 and dist[arow + w] > amax:
                continue
            wgt = acc
            if mode == MODE_EDGINJ:
                placed = 0
                ok = True
                for q in ps:
                    u = img[q]
                    if (used[u] >> w) & 1:
                        ok = False
                        break
                    used[u] |= 1 << w
                    used[w] |= 1 << u
                    placed += 1
                    if weights is not None:
                        wgt *= weights[u * n + w]
                if ok:
                    img[pos] = w
                    if pos + 1 == npos:
                        total += wgt
                    elif wgt:
                        rec(pos + 1, wgt)
                for q in ps[:placed]:
                    u = img[q]
                    used[u] &= ~(1 << w)
                    used[w] &= ~(1 << u)
            else:
                img[pos] = w
                if pos + 1 == npos:
                    total += 1
                else:
                    rec(pos + 1, 1)
        img[pos] = 0

    rec(0, 1)
    return total


def count_perfect_matchings(n, adj):
    """Exact perfect-matching count by branching on a minimum-degree vertex.
    adj: per-vertex neighbor bitmasks."""
    if n % 2:
        return 0
    full = (1 << n) - 1

    def rec(alive):
        if not alive:
            return 1
        # min-degree alive vertex
        best, bestdeg = -1, n + 1
        rest = alive
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            d = (adj[v] & alive).bit_count()
            if d < bestdeg:
                best, bestdeg = v, d
                if d <= 1:
                    break
        if bestdeg == 0:
            return 0
        total = 0
        nbrs = adj[best] & alive
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            nbrs &= nbrs - 1
            total += rec(alive & ~(1 << best) & ~(1 << u))
        return total

    return rec(full)


def count_odd_edge_sets(n, eu, ev, by_cardinality=False):
    """Count edge subsets inducing odd degree at every vertex, by implicit
    exhaustive enumeration (meet-in-the-middle over the edge list)."""
    m = len(eu)
    full = (1 << n) - 1
    half = m // 2

    def table(lo, hi):
        out = {}
        for mask in range(1 << (hi - lo)):
            par = 0
            card = 0
            mm = mask
            while mm:
                i = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                par ^= (1 << eu[lo + i]) | (1 << ev[lo + i])
                card += 1
            out.setdefault(par, [0] * (hi - lo + 1))[card] += 1
        return out

    left = table(0, half)
    right = table(half, m)
    counts = [0] * (m + 1)
    for par, cl in left.items():
        match = right.get(par ^ full)
        if not match:
            continue
        for c1, a in enumerate(cl):
            if not a:
                continue
            for c2, b in enumerate(match):
                if b:
                    counts[c1 + c2] += a * b
    if by_cardinality:
        return counts
    return sum(counts)
