"""Simple undirected graphs with optional edge colors/weights, pattern
constructors, structural transformations and vertex-cover search.

Vertices are the dense integers ``0 .. n-1``; an edge is the sorted pair
``(u, v)``.  Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

import itertools

from .config import check_cap


def edge(u: int, v: int) -> tuple[int, int]:
    """Normalize an unordered vertex pair."""
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Loop-free simple graph, optionally edge-colored and edge-weighted.

    color maps every colored edge to an id in 1..k (k = declared color
    count); weight, if present, must be defined for every edge and be a
    nonnegative integer.  ``meta`` carries anchor-vertex bookkeeping for
    gadget constructions and never takes part in equality.
    """

    __slots__ = ("n", "edges", "color", "weight", "k", "meta", "_adj")

    def __init__(self, n, edges, color=None, weight=None, k=None, meta=None):
        self.n = int(n)
        es = sorted(edge(u, v) for (u, v) in edges)
        for e in es:
            if not (0 <= e[0] < self.n and 0 <= e[1] < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
        for a, b in zip(es, es[1:]):
            if a == b:
                raise ValueError(f"parallel edge {a}")
        self.edges = tuple(es)
        eset = set(self.edges)
        if color is not None:
            color = {edge(*e): int(c) for e, c in color.items()}
            if set(color) - eset:
                raise ValueError("color map mentions non-edges")
            self.k = int(k) if k is not None else (max(color.values()) if color else 0)
            for e, c in color.items():
                if not 1 <= c <= self.k:
                    raise ValueError(f"color {c} of edge {e} not in 1..{self.k}")
        else:
            self.k = 0 if k is None else int(k)
        self.color = color
        if weight is not None:
            weight = {edge(*e): int(w) for e, w in weight.items()}
            if set(weight) != eset:
                raise ValueError("weight map must cover every edge exactly")
            if any(w < 0 for w in weight.values()):
                raise ValueError("negative edge weight")
        self.weight = weight
        self.meta = dict(meta) if meta else {}
        self._adj = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj(self):
        if self._adj is None:
            a = [set() for _ in range(self.n)]
            for u, v in self.edges:
                a[u].add(v)
                a[v].add(u)
            self._adj = a
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_index(self) -> dict:
        """Edge -> position in the sorted edge tuple."""
        return {e: i for i, e in enumerate(self.edges)}

    def color_classes(self) -> dict:
        """Color id -> list of edges (every declared color, even if empty)."""
        classes = {c: [] for c in range(1, self.k + 1)}
        if self.color:
            for e in self.edges:
                classes[self.color[e]].append(e)
        return classes

    def subgraph_edges(self, keep) -> "Graph":
        """Same vertex set, only the given edges."""
        keep = {edge(*e) for e in keep}
        color = {e: c for e, c in self.color.items() if e in keep} if self.color else None
        weight = {e: w for e, w in self.weight.items() if e in keep} if self.weight else None
        return Graph(self.n, keep, color=color, weight=weight, k=self.k or None)

    def remove_vertices(self, drop) -> "Graph":
        """Induced subgraph on the complement of ``drop``; vertices renumbered
        in increasing order of the surviving original ids."""
        drop = set(drop)
        keep = [v for v in range(self.n) if v not in drop]
        idx = {v: i for i, v in enumerate(keep)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u not in drop and v not in drop]
        color = None
        if self.color:
            color = {edge(idx[u], idx[v]): self.color[(u, v)]
                     for u, v in self.edges if u not in drop and v not in drop}
        weight = None
        if self.weight:
            weight = {edge(idx[u], idx[v]): self.weight[(u, v)]
                      for u, v in self.edges if u not in drop and v not in drop}
        return Graph(len(keep), es, color=color, weight=weight, k=self.k or None)

    def components(self):
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            out.append(sorted(comp))
        return out

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and (self.n, self.edges, self.color, self.weight)
                == (other.n, other.edges, other.color, other.weight))

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Partition:
    """A partition of ``0 .. n-1`` into disjoint nonempty blocks."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        self.n = int(n)
        bs = sorted(tuple(sorted(b)) for b in blocks)
        seen = set()
        for b in bs:
            if not b:
                raise ValueError("empty block")
            for v in b:
                if v in seen or not 0 <= v < self.n:
                    raise ValueError("blocks must be disjoint and in range")
                seen.add(v)
        if len(seen) != self.n:
            raise ValueError("blocks must cover the vertex set")
        self.blocks = tuple(bs)

    @staticmethod
    def singletons(n) -> "Partition":
        return Partition(n, [[v] for v in range(n)])

    def block_of(self):
        """Vertex -> block index."""
        who = [None] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                who[v] = i
        return who

    def __eq__(self, other):
        return isinstance(other, Partition) and (self.n, self.blocks) == (other.n, other.blocks)

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"Partition({self.blocks})"


def all_partitions(items):
    """Yield all set partitions of ``items`` (restricted-growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield [[first]] + part


class QuotientResult:
    """Outcome of contracting a partition: the quotient graph (or a
    degeneracy marker when a block contains adjacent vertices) plus the
    edge-injectivity verdict for the partition."""

    __slots__ = ("graph", "degenerate", "edge_injective")

    def __init__(self, graph, degenerate, edge_injective):
        self.graph = graph
        self.degenerate = degenerate
        self.edge_injective = edge_injective


def quotient(h: Graph, rho: Partition) -> QuotientResult:
    """Merge each block of ``rho`` into one vertex.

    Block i becomes vertex i (blocks in the partition's sorted order).  A
    block containing two adjacent vertices would create a loop; that is
    reported as ``degenerate`` rather than raised, since such partitions
    contribute zero to every counting identity over loop-free hosts.
    """
    if rho.n != h.n:
        raise ValueError("partition does not match vertex set")
    who = rho.block_of()
    multiplicity = {}
    degenerate = False
    for u, v in h.edges:
        bu, bv = who[u], who[v]
        if bu == bv:
            degenerate = True
            continue
        key = (bu, bv) if bu < bv else (bv, bu)
        multiplicity[key] = multiplicity.get(key, 0) + 1
    edge_injective = not degenerate and all(c == 1 for c in multiplicity.values())
    if degenerate:
        return QuotientResult(None, True, False)
    return QuotientResult(Graph(len(rho.blocks), multiplicity.keys()), False, edge_injective)


# ---------------------------------------------------------------------------
# pattern constructors

def _path(k):
    return Graph(k + 1, [(i, i + 1) for i in range(k)])


def _cycle(k):
    if k < 3:
        raise ValueError("cycles need k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def _clique(k):
    return Graph(k, itertools.combinations(range(k), 2))


def _biclique(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)],
                 meta={"left": tuple(range(a))})


def _matching(k):
    return Graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def _triangles(k):
    es = []
    for i in range(k):
        b = 3 * i
        es += [(b, b + 1), (b, b + 2), (b + 1, b + 2)]
    return Graph(3 * k, es)


def _wedges(k):
    # wedge i: center 3i with leaves 3i+1, 3i+2
    es = []
    for i in range(k):
        b = 3 * i
        es += [(b, b + 1), (b, b + 2)]
    return Graph(3 * k, es, meta={"centers": tuple(3 * i for i in range(k))})


def _windmill(k):
    # center 0, matched pairs (2i+1, 2i+2); center adjacent to all of them
    es = [(2 * i + 1, 2 * i + 2) for i in range(k)]
    es += [(0, v) for v in range(1, 2 * k + 1)]
    return Graph(2 * k + 1, es, meta={"center": 0})


def _substar(k):
    # center 0, matched pairs (2i+1, 2i+2); center adjacent to 2i+1 only
    es = [(2 * i + 1, 2 * i + 2) for i in range(k)]
    es += [(0, 2 * i + 1) for i in range(k)]
    return Graph(2 * k + 1, es, meta={"center": 0})


def _collar(ell):
    # u = 0, then blocks of four 1+4i..4+4i with a_i = 1+4i, b_i = 2+4i,
    # v = 4*ell + 1 last
    if ell < 1:
        raise ValueError("collar length must be >= 1")
    es = []
    a, b = [], []
    for i in range(ell):
        blk = [1 + 4 * i + j for j in range(4)]
        es += list(itertools.combinations(blk, 2))
        a.append(blk[0])
        b.append(blk[1])
    for i in range(ell - 1):
        es.append((b[i], a[i + 1]))
    v = 4 * ell + 1
    es += [(0, a[0]), (b[-1], v)]
    return Graph(4 * ell + 2, es, meta={"u": 0, "v": v, "a": tuple(a), "b": tuple(b)})


def _barbed_wire(ell):
    # (u,v)-path with 2*ell + 2 edges; the ell internal path vertices at
    # distance 2, 4, ..., 2*ell from u carry two extra leaf-edges each.
    # Path vertices 0..2*ell+2, leaves appended afterwards.
    if ell < 1:
        raise ValueError("barbed wire length must be >= 1")
    path_n = 2 * ell + 3
    es = [(i, i + 1) for i in range(path_n - 1)]
    nxt = path_n
    for i in range(ell):
        spine = 2 * i + 2
        es += [(spine, nxt), (spine, nxt + 1)]
        nxt += 2
    return Graph(nxt, es, meta={"u": 0, "v": path_n - 1})


def _weight_gadget(i):
    """Gadget chain used for removing edge weights: two terminals joined by i
    nested detour paths; the j-th path carries a marked middle edge."""
    if i < 1:
        raise ValueError("gadget index must be >= 1")
    # level 1: single edge a_1 = 0, b_1 = 1
    es = [(0, 1)]
    a, b = 0, 1
    marked = [(0, 1)]
    nxt = 2
    for lvl in range(1, i):
        a2, b2 = nxt, nxt + 1
        nxt += 2
        es += [(a2, a), (b2, b)]
        # path of length 2*lvl + 1 between a2 and b2; its (lvl+1)-th edge is marked
        inner = list(range(nxt, nxt + 2 * lvl))
        nxt += 2 * lvl
        chain = [a2] + inner + [b2]
        path_edges = list(zip(chain, chain[1:]))
        es += path_edges
        marked.append(edge(*path_edges[lvl]))
        a, b = a2, b2
    return Graph(nxt, es, meta={"a": a, "b": b, "marked": tuple(marked)})


_KINDS = {
    "P": (_path, 1), "path": (_path, 1),
    "C": (_cycle, 1), "cycle": (_cycle, 1),
    "K": (_clique, 1), "clique": (_clique, 1),
    "Kab": (_biclique, 2), "biclique": (_biclique, 2),
    "kK2": (_matching, 1), "matching": (_matching, 1),
    "kK3": (_triangles, 1), "triangles": (_triangles, 1),
    "kP2": (_wedges, 1), "wedges": (_wedges, 1),
    "W": (_windmill, 1), "windmill": (_windmill, 1),
    "SS": (_substar, 1), "substar": (_substar, 1),
    "collar": (_collar, 1),
    "barbed": (_barbed_wire, 1), "barbedwire": (_barbed_wire, 1),
    "Gi": (_weight_gadget, 1), "weightgadget": (_weight_gadget, 1),
}


def make_pattern(kind: str, *params: int) -> Graph:
    """Build one of the named pattern graphs with canonical numbering.

    Kinds (aliases in parentheses): P/path k = path with k edges, C/cycle,
    K/clique, Kab/biclique a b, kK2/matching, kK3/triangles, kP2/wedges,
    W/windmill, SS/substar, collar, barbed(wire), Gi/weightgadget.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown pattern kind {kind!r}")
    fn, arity = _KINDS[kind]
    if len(params) != arity:
        raise ValueError(f"pattern {kind} takes {arity} parameter(s)")
    params = tuple(int(p) for p in params)
    if any(p < 1 for p in params):
        raise ValueError(f"pattern {kind} parameters must be >= 1")
    return fn(*params)


# ---------------------------------------------------------------------------
# structural transformations

def line_graph(g: Graph) -> Graph:
    """Vertex i of the result is the i-th edge of ``g`` in sorted edge order;
    two vertices are adjacent iff the edges share an endpoint."""
    es = g.edges
    out = []
    for i in range(len(es)):
        u1, v1 = es[i]
        for j in range(i + 1, len(es)):
            u2, v2 = es[j]
            if u1 == u2 or u1 == v2 or v1 == u2 or v1 == v2:
                out.append((i, j))
    return Graph(len(es), out, meta={"edge_of_vertex": es})


def subdivide(g: Graph, t: int, color_policy=None) -> Graph:
    """Replace each edge by a path with ``t`` inner vertices (t+1 edges).

    Original vertices keep their ids; the inner vertices of the i-th edge
    (sorted order) occupy ``n + t*i .. n + t*i + t - 1``, ordered from the
    smaller endpoint.  ``color_policy(e, j)`` must supply a color for the
    j-th path edge (0-based from the smaller endpoint) when ``g`` is
    colored; colors are never invented silently.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return g
    if g.color is not None and color_policy is None:
        raise ValueError("subdividing a colored graph needs a color policy")
    es = []
    color = {} if color_policy is not None else None
    nxt = g.n
    for i, e in enumerate(g.edges):
        u, v = e
        chain = [u] + list(range(nxt, nxt + t)) + [v]
        nxt += t
        for j, pe in enumerate(zip(chain, chain[1:])):
            pe = edge(*pe)
            es.append(pe)
            if color is not None:
                color[pe] = color_policy(e, j)
    return Graph(nxt, es, color=color)


# ---------------------------------------------------------------------------
# vertex covers

def _isolated_edge_components(g: Graph):
    return [c for c in g.components() if len(c) == 2 and g.has_edge(c[0], c[1])]


def minimum_vertex_cover(g: Graph, cap_name: str = "VERTEX_COVER_CAP"):
    """Smallest vertex cover, found by exhaustive search in increasing size."""
    check_cap(cap_name, g.n)
    if not g.edges:
        return frozenset()
    verts = sorted({v for e in g.edges for v in e})
    for size in range(len(verts) + 1):
        for cand in itertools.combinations(verts, size):
            cs = set(cand)
            if all(u in cs or v in cs for u, v in g.edges):
                return frozenset(cand)
    raise AssertionError("unreachable")


def vertex_cover_number(g: Graph, weak: bool = False) -> int:
    """Minimum (weak) vertex-cover size.  The weak variant first deletes all
    isolated-edge components."""
    if weak:
        drop = {v for comp in _isolated_edge_components(g) for v in comp}
        g = g.remove_vertices(drop)
    return len(minimum_vertex_cover(g))


# ---------------------------------------------------------------------------
# text format

def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    ``# comment`` lines and blank lines are ignored; the first payload line
    must be ``v <n>``; every following line is ``e <u> <v> [c=<int>]
    [w=<int>]`` with 0-based vertices and 1-based colors.
    """
    n = None
    edges, color, weight = [], {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if n is not None or len(parts) != 2:
                raise ValueError(f"line {lineno}: bad or repeated header")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before header")
            if len(parts) < 3:
                raise ValueError(f"line {lineno}: edge needs two endpoints")
            u, v = int(parts[1]), int(parts[2])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"line {lineno}: vertex out of range")
            e = edge(u, v)
            if e in set(edges):
                raise ValueError(f"line {lineno}: duplicate edge {e}")
            edges.append(e)
            for extra in parts[3:]:
                if extra.startswith("c="):
                    color[e] = int(extra[2:])
                elif extra.startswith("w="):
                    weight[e] = int(extra[2:])
                else:
                    raise ValueError(f"line {lineno}: bad attribute {extra!r}")
        else:
            raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise ValueError("missing 'v <n>' header")
    if weight and len(weight) != len(edges):
        raise ValueError("weights must cover every edge or none")
    return Graph(n, edges, color=color or None, weight=weight or None)


def serialize_graph(g: Graph) -> str:
    """Canonical text form: header, then edges sorted lexicographically."""
    lines = [f"v {g.n}"]
    for e in g.edges:
        parts = [f"e {e[0]} {e[1]}"]
        if g.color is not None and e in g.color:
            parts.append(f"c={g.color[e]}")
        if g.weight is not None:
            parts.append(f"w={g.weight[e]}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
