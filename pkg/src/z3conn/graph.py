"""Undirected multigraphs on vertices 0..n-1 and the operations used by the
realization builder and the reduction certifier: contraction, lifting,
splitting at a degree-3 vertex, even-wheel detection, triangular
connectivity, and edge-list / DOT serialization.

Edges are stored as an ordered tuple of (tail, head) pairs; the pair order
is only a reference orientation, the graph is undirected.  Parallel edges
are allowed, loops are not.
"""
from __future__ import annotations

import dataclasses
import itertools
from collections import Counter

from .seqcore import DegreeSequence


class GraphError(ValueError):
    """Invalid graph content or an operation precondition failure."""


@dataclasses.dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence.of(self.degrees())

    def edge_multiplicity(self, u: int, v: int) -> int:
        return sum(1 for a, b in self.edges if {a, b} == {u, v})

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_multiplicity(u, v) > 0

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbors of v, ascending."""
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return sorted(out)

    def adjacency(self) -> list[Counter]:
        adj = [Counter() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u][v] += 1
            adj[v][u] += 1
        return adj

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n


def build_graph(n: int, edges) -> Multigraph:
    return Multigraph(n, tuple((int(u), int(v)) for u, v in edges))


def contract(G: Multigraph, block) -> tuple[Multigraph, list[int]]:
    """Merge the vertex set `block` into one vertex; drop internal edges.

    Returns the contracted graph and the old-to-new label mapping.  The
    merged vertex takes the position of min(block); other vertices keep
    their relative order.
    """
    block = set(block)
    if not block or not block <= set(range(G.n)):
        raise GraphError("contraction block must be a nonempty vertex subset")
    rep = min(block)
    kept = sorted((set(range(G.n)) - block) | {rep})
    index = {v: i for i, v in enumerate(kept)}
    mapping = [index[rep] if v in block else index[v] for v in range(G.n)]
    edges = []
    for u, v in G.edges:
        mu, mv = mapping[u], mapping[v]
        if mu != mv:
            edges.append((mu, mv))
    return Multigraph(len(kept), tuple(edges)), mapping


def induced_subgraph(G: Multigraph, vertices) -> tuple[Multigraph, list[int]]:
    """Subgraph induced by `vertices`, relabeled to 0..k-1 in sorted order.

    Returns the subgraph and the list of original labels (new-to-old).
    """
    keep = sorted(set(vertices))
    if not keep or not set(keep) <= set(range(G.n)):
        raise GraphError("induced subgraph needs a nonempty vertex subset")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return Multigraph(len(keep), tuple(edges)), keep


def remove_vertex(G: Multigraph, v: int) -> tuple[Multigraph, list[int]]:
    """Delete v and its incident edges; returns (graph, new-to-old labels)."""
    return induced_subgraph(G, [u for u in range(G.n) if u != v])


def lift(G: Multigraph, u: int, v: int, w: int) -> Multigraph:
    """Lift at u: remove one edge uv and one edge uw, add edge vw.

    Requires v != w and both edges present.  Vertex labels are unchanged.
    """
    if v == w:
        raise GraphError("lift endpoints must be distinct")
    if not (G.has_edge(u, v) and G.has_edge(u, w)):
        raise GraphError(f"lift needs edges ({u},{v}) and ({u},{w})")
    edges = list(G.edges)

    def drop_one(a, b):
        for i, e in enumerate(edges):
            if {e[0], e[1]} == {a, b}:
                del edges[i]
                return
        raise GraphError("edge vanished during lift")

    drop_one(u, v)
    drop_one(u, w)
    edges.append((v, w))
    return Multigraph(G.n, tuple(edges))


def split_three_vertex(G: Multigraph, v: int, keep: int) -> Multigraph:
    """Split at a degree-3 vertex v relative to its neighbor `keep`.

    Removes v, whose incident edges go to `keep` and two other endpoints
    a, b; adds the edge ab (the edge to `keep` is simply deleted with v).  The result is relabeled with v deleted
    (vertices above v shift down by one).  Requires deg(v) == 3, an edge
    from v to `keep`, and a != b.
    """
    if G.degree(v) != 3:
        raise GraphError(f"vertex {v} must have degree 3, has {G.degree(v)}")
    incident = []
    rest = []
    for a, b in G.edges:
        if v in (a, b):
            incident.append(b if a == v else a)
        else:
            rest.append((a, b))
    if keep not in incident:
        raise GraphError(f"no edge from {v} to {keep}")
    incident.remove(keep)
    a, b = incident
    if a == b:
        raise GraphError("split would create a loop")
    rest.append((a, b))
    mapping = {x: (x if x < v else x - 1) for x in range(G.n) if x != v}
    return Multigraph(G.n - 1, tuple((mapping[x], mapping[y]) for x, y in rest))


def find_even_wheel(G: Multigraph, max_rim: int = 8) -> tuple[int, tuple[int, ...]] | None:
    """Find a wheel subgraph with an even rim of length 4..max_rim.

    Returns (hub, rim cycle) for the first wheel found scanning hubs in
    ascending order and rim lengths from short to long, or None.  The rim
    is a cycle through distinct neighbors of the hub; spoke and rim edges
    must all be present (the wheel need not be induced).
    """
    for hub in range(G.n):
        nb = G.neighbors(hub)
        if len(nb) < 4:
            continue
        simple = {v: set(G.neighbors(v)) for v in nb}
        for length in range(4, min(max_rim, len(nb)) + 1, 2):
            rim = _find_cycle(nb, simple, length)
            if rim is not None:
                return hub, rim
    return None


def _find_cycle(vertices, adj, length) -> tuple[int, ...] | None:
    """First simple cycle of exactly `length` within `vertices`, by DFS in
    ascending label order starting from the smallest vertex on the cycle."""
    vset = set(vertices)

    def extend(path, used):
        if len(path) == length:
            return path if path[0] in adj[path[-1]] else None
        for nxt in sorted(adj[path[-1]] & vset):
            if nxt <= path[0] or nxt in used:
                continue
            got = extend(path + [nxt], used | {nxt})
            if got:
                return got
        return None

    for start in vertices:
        got = extend([start], {start})
        if got:
            return tuple(got)
    return None


def is_triangularly_connected(G: Multigraph) -> bool:
    """Whether every pair of edges is linked by a chain of cycles of length
    at most 3 (parallel-edge 2-cycles count), and G has at least 2 edges."""
    if G.m < 2 or not G.is_connected():
        return False
    parent = list(range(G.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, (u, v) in enumerate(G.edges):
        by_pair.setdefault((min(u, v), max(u, v)), []).append(i)
    in_cycle = [False] * G.m
    for ids in by_pair.values():
        if len(ids) > 1:
            for i in ids:
                union(i, ids[0])
                in_cycle[i] = True
    pairs = list(by_pair)
    adj_pairs = {}
    for (u, v), ids in by_pair.items():
        adj_pairs.setdefault(u, set()).add(v)
        adj_pairs.setdefault(v, set()).add(u)
    for u, v in pairs:
        for w in sorted(adj_pairs.get(u, ()) & adj_pairs.get(v, ())):
            i = by_pair[(min(u, v), max(u, v))][0]
            j = by_pair[(min(u, w), max(u, w))][0]
            k = by_pair[(min(v, w), max(v, w))][0]
            union(i, j)
            union(i, k)
            in_cycle[i] = in_cycle[j] = in_cycle[k] = True
    if not all(in_cycle):
        return False
    root = find(0)
    return all(find(i) == root for i in range(G.m))


def parse_edgelist(text: str) -> Multigraph:
    """Parse "n m" header followed by m "tail head" lines.

    Blank lines and lines starting with '#' are ignored, so serialized
    realization output can be read back directly.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"header says {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def format_edgelist(G: Multigraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def to_dot(G: Multigraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        lines.append(f"  {v};")
    for u, v in G.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Multigraph:
    if n < 2:
        raise GraphError("cycle needs at least 2 vertices")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))
