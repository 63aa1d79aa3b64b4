"""Fixed small Z3-connected base graphs and wheels.

The seven "fig" graphs are the hand-built realizations the constructions
bottom out in; each is Z3-connected (locked in by the oracle test suite)
and realizes the degree sequence noted next to it.  Vertex 0 plays the
role of the highest-degree vertex in each.
"""
from __future__ import annotations

import itertools

from .graph import Multigraph

# Edge lists are canonical: sorted pairs, ascending.
_BASE_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    # (4^2,3^4), degree-4 vertices 0 and 1
    "fig1a": ((0, 1), (0, 2), (0, 4), (0, 5), (1, 3), (1, 4),
              (1, 5), (2, 3), (2, 4), (3, 5)),
    # (5,4,3^5), degree-5 vertex 0, degree-4 vertex 1
    "fig1b": ((0, 1), (0, 2), (0, 3), (0, 4), (0, 6), (1, 2),
              (1, 5), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6)),
    # (6,4,3^6), degree-6 vertex 0, degree-4 vertex 1
    "fig1c": ((0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7),
              (1, 2), (1, 4), (1, 5), (1, 7), (2, 3), (3, 4),
              (5, 6), (6, 7)),
    # (5^2,3^6), degree-5 vertices 0 and 1
    "fig1d": ((0, 2), (0, 3), (0, 4), (0, 5), (0, 7), (1, 2),
              (1, 4), (1, 5), (1, 6), (1, 7), (2, 3), (3, 4),
              (5, 6), (6, 7)),
    # (4^3,3^4), degree-4 vertices 0, 1, 2
    "fig2a": ((0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3),
              (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4)),
    # (5,4^2,3^5), degree-5 vertex 0, degree-4 vertices 1, 2
    "fig2b": ((0, 1), (0, 2), (0, 5), (0, 6), (0, 7), (1, 2),
              (1, 3), (1, 6), (2, 3), (2, 4), (3, 4), (4, 5),
              (5, 7), (6, 7)),
    # (4^4,3^4), degree-4 vertices 0..3
    "fig2c": ((0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3),
              (1, 6), (1, 7), (2, 3), (2, 6), (3, 7), (4, 5),
              (4, 6), (5, 7)),
    # K4 minus one edge; degree-3 vertices 0 and 2, degree-2 vertices 1 and 3
    "k4minus": ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3)),
    "k5": tuple(itertools.combinations(range(5), 2)),
    "k5minus": tuple(itertools.combinations(range(5), 2))[:-1],
    "k44": tuple((i, 4 + j) for i in range(4) for j in range(4)),
}

# Bases usable as contraction targets in certificates (all Z3-connected;
# k4minus is not, it only appears as a construction gadget).
CERTIFIABLE_BASES = ("k5", "k5minus", "fig1a", "fig1b", "fig1c", "fig1d",
                     "fig2a", "fig2b", "fig2c", "k44")


def base_graph(name: str) -> Multigraph:
    try:
        edges = _BASE_EDGES[name]
    except KeyError:
        raise KeyError(f"unknown base graph {name!r}") from None
    n = max(max(e) for e in edges) + 1
    return Multigraph(n, edges)


def wheel(k: int) -> Multigraph:
    """Wheel W_k: hub 0 joined to a k-cycle on 1..k.  Z3-connected iff k is
    even (and k >= 4); odd wheels and W_2 are not bases."""
    if k < 3:
        raise ValueError("wheel needs rim length >= 3")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i + 1) for i in range(1, k)]
    edges.append((1, k))
    return Multigraph(k + 1, tuple(edges))
