"""Exhaustive enumeration of simple realizations of a degree sequence,
isomorphism deduplication, and exception-family confirmation.

Enumeration is a backtracking search assigning, for each vertex in turn,
its set of higher-indexed neighbors, pruning branches whose remaining
degree demand is not graphic.  Every labeled simple realization appears
exactly once.  The vertex count is capped because the space is enormous.
"""
from __future__ import annotations

import itertools
from typing import Iterator

import networkx as nx

from .graph import Multigraph
from .seqcore import Classification, DegreeSequence, Kind, classify
from .verifier import DEFAULT_CAP, is_z3_connected

ENUMERATE_N_MAX = 12
EXACT_CANONICAL_N_MAX = 8


class EnumerationCapError(ValueError):
    """Sequence too large for exhaustive enumeration."""


def erdos_gallai(degrees) -> bool:
    """Graphicality by the sum inequalities; degrees must be nonincreasing."""
    d = list(degrees)
    if any(x < 0 for x in d) or sum(d) % 2 == 1:
        return False
    n = len(d)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def havel_hakimi_graph(seq: DegreeSequence) -> Multigraph:
    """One concrete realization: repeatedly connect the highest-degree
    vertex to the next-highest ones.  Raises on non-graphic input."""
    items = [[d, v] for v, d in enumerate(seq.degrees)]
    edges = []
    while True:
        items.sort(key=lambda t: (-t[0], t[1]))
        if items[0][0] == 0:
            break
        head = items[0]
        need = head[0]
        head[0] = 0
        if need > len(items) - 1:
            raise ValueError(f"sequence {seq.render()} is not graphic")
        for other in items[1:need + 1]:
            if other[0] == 0:
                raise ValueError(f"sequence {seq.render()} is not graphic")
            other[0] -= 1
            edges.append((head[1], other[1]))
    return Multigraph(seq.n, tuple(edges))


def all_realizations(seq: DegreeSequence, limit: int | None = None,
                     dedup: bool = False) -> Iterator[Multigraph]:
    """All labeled simple graphs with exactly these degrees, streamed.

    With dedup=True, one representative per isomorphism class is kept.
    `limit` bounds the number of graphs yielded.
    """
    n = seq.n
    if n > ENUMERATE_N_MAX:
        raise EnumerationCapError(f"enumeration limited to n<={ENUMERATE_N_MAX}, got {n}")
    if not erdos_gallai(seq.degrees):
        return
    seen_exact: set = set()
    seen_nx: dict[str, list] = {}
    count = 0
    for edges in _assign(list(seq.degrees), 0, []):
        G = Multigraph(n, tuple(edges))
        if dedup and not _is_new(G, seen_exact, seen_nx):
            continue
        yield G
        count += 1
        if limit is not None and count >= limit:
            return


def _assign(deg: list[int], v: int, edges: list) -> Iterator[list]:
    n = len(deg)
    if v == n:
        yield edges
        return
    r = deg[v]
    if r == 0:
        yield from _assign(deg, v + 1, edges)
        return
    candidates = [u for u in range(v + 1, n) if deg[u] > 0]
    if len(candidates) < r:
        return
    for combo in itertools.combinations(candidates, r):
        deg[v] = 0
        for u in combo:
            deg[u] -= 1
        if erdos_gallai(sorted(deg[v + 1:], reverse=True)):
            yield from _assign(deg, v + 1, edges + [(v, u) for u in combo])
        for u in combo:
            deg[u] += 1
        deg[v] = r


def _is_new(G: Multigraph, seen_exact: set, seen_nx: dict) -> bool:
    if G.n <= EXACT_CANONICAL_N_MAX:
        key = canonical_form(G)
        if key in seen_exact:
            return False
        seen_exact.add(key)
        return True
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    wl = nx.weisfeiler_lehman_graph_hash(H)
    bucket = seen_nx.setdefault(wl, [])
    for other in bucket:
        if nx.is_isomorphic(H, other):
            return False
    bucket.append(H)
    return True


def canonical_form(G: Multigraph) -> tuple:
    """Exact canonical edge set for small simple graphs: the minimum over
    all degree-preserving relabelings after sorting vertices by degree."""
    if G.n > EXACT_CANONICAL_N_MAX:
        raise EnumerationCapError(f"exact canonical form limited to n<={EXACT_CANONICAL_N_MAX}")
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    blocks = []
    degs = G.degrees()
    i = 0
    while i < len(order):
        j = i
        while j < len(order) and degs[order[j]] == degs[order[i]]:
            j += 1
        blocks.append(order[i:j])
        i = j
    best = None
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        flat = [v for p in perms for v in p]
        pos = {v: i for i, v in enumerate(flat)}
        key = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v]))
                           for u, v in G.edges))
        if best is None or key < best:
            best = key
    return best


def count_isomorphism_classes(seq: DegreeSequence, limit: int | None = None) -> int:
    return sum(1 for _ in all_realizations(seq, limit=limit, dedup=True))


def verify_exception(seq: DegreeSequence, cap: int = DEFAULT_CAP) -> bool:
    """Confirm by exhaustion that no realization is Z3-connected.

    Only meaningful for sequences classified into an exception family;
    anything else raises.
    """
    c = classify(seq)
    if c.kind not in (Kind.EXCEPTION_N3, Kind.EXCEPTION_ODD_K,
                      Kind.EXCEPTION_ODD_K_SQUARE):
        raise ValueError(f"{seq.render()} is not in an exception family")
    for G in all_realizations(seq, dedup=True):
        if is_z3_connected(G, cap):
            return False
    return True
