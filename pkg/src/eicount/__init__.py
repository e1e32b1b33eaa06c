"""Exact graph-pattern counting toolkit.

Counts edge-injective homomorphisms, matchings (plain, colorful, perfect)
and related quantities, both by brute-force oracles and by the
polynomial-time / reduction-pipeline routes whose identities the oracles
certify.
"""

from ._backend import BACKEND
from .graphs import (Graph, Partition, line_graph, make_pattern, parse_graph,
                     quotient, serialize_graph, subdivide,
                     vertex_cover_number)
from .oracles import (count_edge_disjoint, count_edginj,
                      count_edginj_via_partition_sum, count_edginj_weighted,
                      count_emb, count_hom, count_matchings,
                      count_odd_edge_sets_enum, count_perfect_matchings,
                      is_isomorphic)
from .eihom import count_edginj_poly, count_emb_small_vc, reduce_isolated

__all__ = [
    "BACKEND", "Graph", "Partition", "line_graph", "make_pattern",
    "parse_graph", "quotient", "serialize_graph", "subdivide",
    "vertex_cover_number", "count_edge_disjoint", "count_edginj",
    "count_edginj_via_partition_sum", "count_edginj_weighted", "count_emb",
    "count_hom", "count_matchings", "count_odd_edge_sets_enum",
    "count_perfect_matchings", "is_isomorphic", "count_edginj_poly",
    "count_emb_small_vc", "reduce_isolated",
]

__version__ = "0.1.0"
