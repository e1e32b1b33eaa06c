"""Polynomial-time counting of edge-injective homomorphisms from patterns
with bounded weak vertex-cover number.

The algorithm preprocesses away isolated vertices and edges, fixes a minimum
vertex cover C of the remaining core, groups the edge-injective vertex
partitions of the core into equivalence classes described by a pair
(cover sub-partition, color allocation), computes each class's size by a
closed multinomial formula, and sums class-size times the embedding count of
one representative quotient.  Embeddings of the quotients are counted by a
cover-indexed enumeration whose independent part is resolved with an exact
occupancy sum over neighborhood classes.
"""

from __future__ import annotations

import itertools
from math import factorial

from .config import CapExceeded
from .exact import multinomial
from .graphs import Graph, Partition, minimum_vertex_cover, quotient
from .oracles import count_emb


class ReducedPattern:
    """Pattern core after removing isolated vertices and isolated edges,
    plus the data needed to restore the removed parts as a host-dependent
    multiplier."""

    __slots__ = ("core", "iso_vertices", "removed_edges", "original_edge_count")

    def __init__(self, core, iso_vertices, removed_edges, original_edge_count):
        self.core = core
        self.iso_vertices = iso_vertices
        self.removed_edges = removed_edges
        self.original_edge_count = original_edge_count

    def multiplier(self, g: Graph) -> int:
        """Host-dependent factor restoring the removed pieces:
        |V(G)| per isolated vertex and 2(|E(G)| - |E(H)| + 1) per isolated
        edge, with |E(H)| decreasing as edges are peeled off."""
        out = g.n ** self.iso_vertices
        for j in range(self.removed_edges):
            out *= 2 * (g.m - (self.original_edge_count - j) + 1)
        return out


def reduce_isolated(h: Graph) -> ReducedPattern:
    """Exhaustively remove isolated vertices and isolated-edge components."""
    iso_vertices = 0
    removed_edges = 0
    drop = set()
    for comp in h.components():
        if len(comp) == 1:
            iso_vertices += 1
            drop.update(comp)
        elif len(comp) == 2 and h.has_edge(comp[0], comp[1]):
            removed_edges += 1
            drop.update(comp)
    return ReducedPattern(h.remove_vertices(drop), iso_vertices,
                          removed_edges, h.m)


# ---------------------------------------------------------------------------
# equivalence classes of edge-injective partitions

class CoverSubPartition:
    """Partition of a subset D of the pattern's vertices into blocks that
    all intersect the fixed cover; the vertices outside D are ``free``."""

    __slots__ = ("blocks", "domain")

    def __init__(self, blocks):
        self.blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
        self.domain = frozenset(v for b in self.blocks for v in b)

    def __eq__(self, other):
        return isinstance(other, CoverSubPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)


def color_of(v, rho_c: CoverSubPartition, h: Graph):
    """The set of rho_c blocks adjacent to the free vertex v."""
    if v in rho_c.domain:
        raise ValueError(f"vertex {v} is not free")
    return frozenset(b for b in rho_c.blocks if h.adj[v] & set(b))


def _free_colors(h: Graph, rho_c: CoverSubPartition):
    return {v: color_of(v, rho_c, h) for v in range(h.n) if v not in rho_c.domain}


def _color_set_candidates(distinct_colors):
    """All families of pairwise-disjoint colors (the possible per-block color
    sets), nonempty."""
    out = []

    def grow(start, chosen, used):
        for i in range(start, len(distinct_colors)):
            c = distinct_colors[i]
            if used & c:
                continue
            nxt = chosen + (c,)
            out.append(frozenset(nxt))
            grow(i + 1, nxt, used | c)

    grow(0, (), frozenset())
    return out


def enumerate_classes(h: Graph, cover):
    """Yield all candidate (CoverSubPartition, color allocation) pairs.

    The color allocation is a dict mapping each block color-set beta (a
    frozenset of pairwise-disjoint colors) to its multiplicity; candidates
    are generated so that every free vertex is accounted for: for each color
    K, the multiplicities of the betas containing K sum to the number of
    free vertices of color K.
    """
    cover = frozenset(cover)
    if any(u not in cover and v not in cover for u, v in h.edges):
        raise ValueError("the given set is not a vertex cover")
    c = len(cover)
    others = [v for v in range(h.n) if v not in cover]
    max_extra = min(c * c - c, len(others))
    for extra in range(max_extra + 1):
        for xs in itertools.combinations(others, extra):
            d = sorted(cover | set(xs))
            from .graphs import all_partitions
            for blocks in all_partitions(d):
                if any(not (set(b) & cover) for b in blocks):
                    continue
                rho_c = CoverSubPartition(blocks)
                colors = _free_colors(h, rho_c)
                counts = {}
                for k in colors.values():
                    counts[k] = counts.get(k, 0) + 1
                distinct = sorted(counts, key=lambda s: sorted(map(sorted, s)))
                betas = _color_set_candidates(distinct)
                # assign multiplicities so each color is used exactly enough
                def assign(i, remaining, alloc):
                    if i == len(betas):
                        if all(r == 0 for r in remaining.values()):
                            yield dict(alloc)
                        return
                    beta = betas[i]
                    limit = min(remaining[k] for k in beta)
                    for mult in range(limit + 1):
                        if mult:
                            alloc[beta] = mult
                        yield from assign(
                            i + 1,
                            {k: r - (mult if k in beta else 0)
                             for k, r in remaining.items()},
                            alloc)
                        alloc.pop(beta, None)

                if not colors:
                    yield rho_c, {}
                    continue
                for alloc in assign(0, dict(counts), {}):
                    yield rho_c, alloc


def class_size(rho_c: CoverSubPartition, alloc, h: Graph) -> int:
    """Number of partitions in the equivalence class (rho_c, alloc):
    a product of per-color multinomials for distributing the free vertices
    of each color among the betas containing it, times (mult!)^{|beta|-1}
    per beta for pairing the chosen vertices into blocks.  Returns 0 for
    inconsistent candidates."""
    colors = _free_colors(h, rho_c)
    counts = {}
    for k in colors.values():
        counts[k] = counts.get(k, 0) + 1
    for beta in alloc:
        seen = set()
        for k in beta:
            if seen & k:
                return 0
            seen |= k
    out = 1
    relevant = set(counts)
    for beta in alloc:
        relevant |= set(beta)
    for k in relevant:
        parts = [alloc[beta] for beta in alloc if k in beta]
        have = counts.get(k, 0)
        if sum(parts) != have:
            return 0
        out *= multinomial(have, parts)
    for beta, mult in alloc.items():
        out *= factorial(mult) ** (len(beta) - 1)
    return out


def build_representative(rho_c: CoverSubPartition, alloc, h: Graph):
    """Greedy construction of one partition in the class, or None when the
    class is empty (vertices run out, are left over, or the result is not
    edge-injective)."""
    colors = _free_colors(h, rho_c)
    pools = {}
    for v in sorted(colors):
        pools.setdefault(colors[v], []).append(v)
    blocks = [list(b) for b in rho_c.blocks]
    for beta in sorted(alloc, key=lambda s: sorted(map(sorted, s))):
        for _ in range(alloc[beta]):
            block = []
            for k in sorted(beta, key=lambda s: sorted(map(sorted, s))):
                if not pools.get(k):
                    return None
                block.append(pools[k].pop())
            blocks.append(block)
    if any(pools.values()):
        return None
    rho = Partition(h.n, blocks)
    q = quotient(h, rho)
    if q.degenerate or not q.edge_injective:
        return None
    return rho


# ---------------------------------------------------------------------------
# embedding counter for small-cover patterns

def count_emb_small_vc(f: Graph, g: Graph, bound: int = 6) -> int:
    """Embeddings of f into g in host-polynomial time for fixed cover size.

    Enumerates injective edge-preserving images of a minimum cover C' of f;
    the remaining (independent) vertices are grouped by their required
    neighborhood in C', the host vertices by which of those requirement sets
    they satisfy, and the injective placements are counted by an exact
    occupancy sum over the resulting cells.
    """
    if f.n == 0:
        return 1
    if f.n > g.n:
        return 0
    cover = sorted(minimum_vertex_cover(f))
    if len(cover) > bound:
        raise CapExceeded(f"cover size {len(cover)} exceeds bound {bound}")
    free = [v for v in range(f.n) if v not in set(cover)]
    class_sizes = {}
    for v in free:
        key = frozenset(f.adj[v])
        class_sizes[key] = class_sizes.get(key, 0) + 1
    classes = sorted(class_sizes.items(), key=lambda kv: sorted(kv[0]))
    total = 0
    image = {}

    def place(i):
        nonlocal total
        if i == len(cover):
            total += _independent_count(classes, image, g)
            return
        v = cover[i]
        for w in range(g.n):
            if w in image.values():
                continue
            ok = True
            for u, x in image.items():
                if f.has_edge(v, u) and not g.has_edge(w, x):
                    ok = False
                    break
            if ok:
                image[v] = w
                place(i + 1)
                del image[v]

    place(0)
    return total


def _independent_count(classes, image, g: Graph) -> int:
    """Count injective placements of the independent pattern vertices.

    classes: [(required cover-neighborhood, multiplicity)]; image: the fixed
    cover embedding.  Host vertices are partitioned into cells by which
    requirement sets they satisfy, and the count is a sum over all ways to
    split each class across its feasible cells of multinomial coefficients
    times falling factorials of the cell sizes.
    """
    used = set(image.values())
    cand_sets = []
    for req, _ in classes:
        targets = [image[u] for u in req]
        cand = {w for w in range(g.n) if w not in used
                and all(g.has_edge(w, t) for t in targets)}
        cand_sets.append(cand)
    # cells of the Venn diagram of the candidate sets
    cells = {}
    for w in range(g.n):
        if w in used:
            continue
        sig = frozenset(i for i, cs in enumerate(cand_sets) if w in cs)
        cells[sig] = cells.get(sig, 0) + 1
    cell_list = list(cells.items())
    loads = [0] * len(cell_list)
    total = 0

    def distribute(ci, acc):
        nonlocal total
        if ci == len(classes):
            val = acc
            for (sig, size), load in zip(cell_list, loads):
                for t in range(load):
                    val *= size - t
            total += val
            return
        req_i, mult = classes[ci]
        feas = [j for j, (sig, size) in enumerate(cell_list) if ci in sig]

        def split(fi, left, ways):
            if fi == len(feas):
                if left == 0:
                    distribute(ci + 1, acc * ways)
                return
            j = feas[fi]
            room = cell_list[j][1] - loads[j]
            for take in range(0, min(left, room) + 1):
                loads[j] += take
                split(fi + 1, left - take, ways * multinomial(left, [take]))
                loads[j] -= take

        split(0, mult, 1)

    distribute(0, 1)
    return total


# ---------------------------------------------------------------------------
# the full algorithm

def count_edginj_poly(h: Graph, g: Graph, bound: int = 3) -> int:
    """Edge-injective homomorphism count for patterns of weak vertex-cover
    number at most ``bound``, via class-collected quotient embeddings."""
    red = reduce_isolated(h)
    mult = red.multiplier(g)
    core = red.core
    if core.n == 0:
        return mult
    cover = minimum_vertex_cover(core)
    if len(cover) > bound:
        raise CapExceeded(
            f"weak vertex-cover number {len(cover)} exceeds bound {bound}")
    total = 0
    for _, _, n_class, rep in realized_classes(core, cover):
        q = quotient(core, rep)
        total += n_class * count_emb_small_vc(q.graph, g, bound=max(bound, len(cover)))
    return mult * total


def realized_classes(h: Graph, cover):
    """The equivalence classes the algorithm actually sums over: enumerated
    candidates whose class size is nonzero and whose representative exists
    and is edge-injective.  Yields (rho_c, alloc, size, representative)."""
    for rho_c, alloc in enumerate_classes(h, cover):
        size = class_size(rho_c, alloc, h)
        if size == 0:
            continue
        rep = build_representative(rho_c, alloc, h)
        if rep is None:
            continue
        yield rho_c, alloc, size, rep


def count_edge_injective_partitions(h: Graph) -> int:
    """Ground truth for the class bookkeeping: the number of edge-injective,
    loop-free vertex partitions of h, by direct enumeration."""
    from .graphs import all_partitions
    total = 0
    for blocks in all_partitions(range(h.n)):
        q = quotient(h, Partition(h.n, blocks))
        if not q.degenerate and q.edge_injective:
            total += 1
    return total
