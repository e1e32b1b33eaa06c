"""Enumeration caps for the brute-force oracles.

All oracles are exact but exponential; the caps below bound their inputs so
that exceeding a cap raises :class:`CapExceeded` instead of silently running
forever.  Every cap can be overridden through an environment variable
``EICOUNT_<NAME>`` holding an integer, e.g. ``EICOUNT_PATTERN_CAP=10``.
"""

import os

_DEFAULTS = {
    # max |V(H)| for the generic homomorphism-type oracles
    "PATTERN_CAP": 8,
    # max |E(G)| for edge-subset oracles (odd edge-sets by enumeration)
    "EDGE_SUBSET_CAP": 24,
    # max |V(G)| for exhaustive vertex-cover search
    "VERTEX_COVER_CAP": 24,
    # max |V(G)| for the recursive perfect-matching counter
    "PERFMATCH_CAP": 128,
    # max estimated search volume for homomorphism-type enumeration; patterns
    # larger than PATTERN_CAP (long cycles/paths, wedge unions) are still
    # admitted when the pruned search tree fits this budget
    "SEARCH_VOLUME_CAP": 2 * 10**9,
    # max |V(G)| for brute-force isomorphism search
    "ISO_CAP": 24,
    # max product of color-class sizes in colorful Holant evaluation
    "HOLANT_CAP": 2 * 10**6,
}


class CapExceeded(Exception):
    """An oracle was asked for an instance beyond its enumeration cap."""


def cap(name: str) -> int:
    env = os.environ.get("EICOUNT_" + name)
    if env is not None:
        return int(env)
    return _DEFAULTS[name]


def check_cap(name: str, value: int) -> None:
    limit = cap(name)
    if value > limit:
        raise CapExceeded(f"{name}: {value} exceeds cap {limit}")
