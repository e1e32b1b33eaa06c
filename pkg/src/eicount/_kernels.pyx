# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels: pattern-map enumeration, perfect matchings and
odd edge-sets.  API mirrors eicount._kernels_py; hosts beyond 63 vertices or
counts beyond 2^62 raise, and callers fall back to the pure-Python kernels.
"""

from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)

MODE_HOM = 0
MODE_EMB = 1
MODE_EDGINJ = 2

cdef long long _MAXV = 1LL << 62


cdef struct MapCtx:
    int n
    int npos
    int mode
    unsigned long long *adj
    unsigned long long *used
    unsigned char *dist
    long long *weights
    int *img
    int *poff
    int *parr
    int *anchor
    int *adist


cdef long long _map_rec(MapCtx *c, int pos, long long acc) except -1:
    cdef unsigned long long cand, bit
    cdef int w, q, u, t, a, placed
    cdef int lo = c.poff[pos], hi = c.poff[pos + 1]
    cdef long long total = 0, sub, wgt
    cdef bint ok

    if hi > lo:
        cand = c.adj[c.img[c.parr[lo]]]
        for t in range(lo + 1, hi):
            cand &= c.adj[c.img[c.parr[t]]]
    else:
        cand = (<unsigned long long>1 << c.n) - 1
    if c.mode == MODE_EMB:
        for t in range(pos):
            cand &= ~(<unsigned long long>1 << c.img[t])
    a = c.anchor[pos]
    while cand:
        bit = cand & (~cand + 1)
        w = __builtin_ctzll(cand)
        cand ^= bit
        if a >= 0 and c.dist[c.img[a] * c.n + w] > c.adist[pos]:
            continue
        if c.mode == MODE_EDGINJ:
            wgt = acc
            ok = True
            placed = 0
            for t in range(lo, hi):
                u = c.img[c.parr[t]]
                if (c.used[u] >> w) & 1:
                    ok = False
                    break
                c.used[u] |= <unsigned long long>1 << w
                c.used[w] |= <unsigned long long>1 << u
                placed += 1
                if c.weights != NULL:
                    if wgt != 0 and c.weights[u * c.n + w] > _MAXV // (wgt if wgt > 0 else 1):
                        raise OverflowError("weighted count exceeds kernel range")
                    wgt *= c.weights[u * c.n + w]
            if ok:
                c.img[pos] = w
                if pos + 1 == c.npos:
                    sub = wgt
                elif wgt != 0:
                    sub = _map_rec(c, pos + 1, wgt)
                else:
                    sub = 0
                if sub > _MAXV - total:
                    raise OverflowError("count exceeds kernel range")
                total += sub
            for t in range(lo, lo + placed):
                u = c.img[c.parr[t]]
                c.used[u] &= ~(<unsigned long long>1 << w)
                c.used[w] &= ~(<unsigned long long>1 << u)
        else:
            c.img[pos] = w
            if pos + 1 == c.npos:
                sub = 1
            else:
                sub = _map_rec(c, pos + 1, 1)
            if sub > _MAXV - total:
                raise OverflowError("count exceeds kernel range")
            total += sub
    return total


def count_maps(n, adj, mode, parents, anchor, anchor_dist, dist, weights=None):
    cdef int nn = n, npos = len(parents), i, j, t
    if nn > 63:
        raise ValueError("compiled kernel handles hosts up to 63 vertices")
    if npos == 0:
        return 1
    cdef MapCtx c
    c.n = nn
    c.npos = npos
    c.mode = mode
    c.adj = <unsigned long long *> calloc(nn, sizeof(unsigned long long))
    c.used = <unsigned long long *> calloc(nn, sizeof(unsigned long long))
    c.dist = <unsigned char *> calloc(nn * nn, sizeof(unsigned char))
    c.img = <int *> calloc(npos, sizeof(int))
    c.poff = <int *> calloc(npos + 1, sizeof(int))
    cdef int tot_par = 0
    for i in range(npos):
        tot_par += len(parents[i])
    c.parr = <int *> calloc(tot_par if tot_par else 1, sizeof(int))
    c.anchor = <int *> calloc(npos, sizeof(int))
    c.adist = <int *> calloc(npos, sizeof(int))
    c.weights = NULL
    if weights is not None:
        c.weights = <long long *> calloc(nn * nn, sizeof(long long))
    try:
        for i in range(nn):
            c.adj[i] = adj[i]
        for i in range(nn * nn):
            c.dist[i] = dist[i]
            if weights is not None:
                c.weights[i] = weights[i]
        t = 0
        for i in range(npos):
            c.poff[i] = t
            for j in parents[i]:
                c.parr[t] = j
                t += 1
            c.anchor[i] = anchor[i]
            c.adist[i] = anchor_dist[i]
        c.poff[npos] = t
        return _map_rec(&c, 0, 1)
    finally:
        free(c.adj); free(c.used); free(c.dist); free(c.img)
        free(c.poff); free(c.parr); free(c.anchor); free(c.adist)
        if c.weights != NULL:
            free(c.weights)


cdef struct PmCtx:
    int n
    int *offs
    int *nbrs
    unsigned char *alive
    int *deg


cdef long long _pm_rec(PmCtx *c, int remaining) except -1:
    cdef int v = -1, best = c.n + 1, i, u, w, t
    cdef long long total = 0, sub
    if remaining == 0:
        return 1
    for i in range(c.n):
        if c.alive[i] and c.deg[i] < best:
            v = i
            best = c.deg[i]
            if best <= 1:
                break
    if best == 0:
        return 0
    c.alive[v] = 0
    for t in range(c.offs[v], c.offs[v + 1]):
        u = c.nbrs[t]
        if c.alive[u]:
            c.deg[u] -= 1
    for t in range(c.offs[v], c.offs[v + 1]):
        u = c.nbrs[t]
        if not c.alive[u]:
            continue
        c.alive[u] = 0
        for i in range(c.offs[u], c.offs[u + 1]):
            w = c.nbrs[i]
            if c.alive[w]:
                c.deg[w] -= 1
        sub = _pm_rec(c, remaining - 2)
        if sub > _MAXV - total:
            raise OverflowError("perfect-matching count exceeds kernel range")
        total += sub
        c.alive[u] = 1
        for i in range(c.offs[u], c.offs[u + 1]):
            w = c.nbrs[i]
            if c.alive[w]:
                c.deg[w] += 1
    c.alive[v] = 1
    for t in range(c.offs[v], c.offs[v + 1]):
        u = c.nbrs[t]
        if c.alive[u]:
            c.deg[u] += 1
    return total


def count_perfect_matchings(n, adj):
    """adj: per-vertex neighbor bitmasks (arbitrary-size Python ints are fine
    only up to 63 vertices here; larger hosts use the Python fallback)."""
    cdef int nn = n, i, j, t
    if nn % 2:
        return 0
    if nn == 0:
        return 1
    cdef PmCtx c
    c.n = nn
    nbr_lists = []
    cdef int total_deg = 0
    for i in range(nn):
        mask = adj[i]
        lst = []
        while mask:
            lst.append((mask & -mask).bit_length() - 1)
            mask &= mask - 1
        nbr_lists.append(lst)
        total_deg += len(lst)
    c.offs = <int *> calloc(nn + 1, sizeof(int))
    c.nbrs = <int *> calloc(total_deg if total_deg else 1, sizeof(int))
    c.alive = <unsigned char *> calloc(nn, sizeof(unsigned char))
    c.deg = <int *> calloc(nn, sizeof(int))
    try:
        t = 0
        for i in range(nn):
            c.offs[i] = t
            for j in nbr_lists[i]:
                c.nbrs[t] = j
                t += 1
            c.alive[i] = 1
            c.deg[i] = len(nbr_lists[i])
        c.offs[nn] = t
        return _pm_rec(&c, nn)
    finally:
        free(c.offs); free(c.nbrs); free(c.alive); free(c.deg)


def count_odd_edge_sets(n, eu, ev, by_cardinality=False):
    """Gray-code enumeration of all edge subsets, tallying those with all
    vertex degrees odd."""
    cdef int nn = n, m = len(eu), i, j, card = 0
    if nn > 63:
        raise ValueError("compiled kernel handles hosts up to 63 vertices")
    if m > 62:
        raise ValueError("too many edges for the compiled kernel")
    cdef unsigned long long full = ((<unsigned long long>1) << nn) - 1
    cdef unsigned long long par = 0, cur = 0, gi
    cdef unsigned long long *emask = <unsigned long long *> calloc(m if m else 1, sizeof(unsigned long long))
    cdef long long *counts = <long long *> calloc(m + 1, sizeof(long long))
    try:
        for i in range(m):
            emask[i] = ((<unsigned long long>1) << (<int>eu[i])) | ((<unsigned long long>1) << (<int>ev[i]))
        if par == full:
            counts[0] += 1
        for gi in range(1, (<unsigned long long>1) << m):
            j = __builtin_ctzll(gi)
            cur ^= (<unsigned long long>1) << j
            par ^= emask[j]
            if (cur >> j) & 1:
                card += 1
            else:
                card -= 1
            if par == full:
                counts[card] += 1
        out = [counts[i] for i in range(m + 1)]
    finally:
        free(emask)
        free(counts)
    if by_cardinality:
        return out
    return sum(out)
