"""Exhaustive group-connectivity oracle over the group Z3.

A graph is Z3-connected when for every zero-sum target b: V -> Z3 there is
an orientation together with a nowhere-zero flow value in {1,2} per edge
whose boundary (out minus in, mod 3) equals b at every vertex.  Assigning
value 2 along an edge is the same as assigning 1 against it, so searching
flow values {1,2} on a fixed reference orientation covers all orientations.

The oracle runs a reachable-boundary dynamic program over the 3^n boundary
space: process edges one at a time and track which boundaries are hit.  The
graph is Z3-connected iff all 3^(n-1) zero-sum boundaries are reachable.
State space is exponential, so calls are capped (default n <= 14).
"""
from __future__ import annotations

import dataclasses

import numpy as np

from .graph import Multigraph

DEFAULT_CAP = 14


class OracleCapError(ValueError):
    """Graph too large for the exhaustive oracle."""


@dataclasses.dataclass(frozen=True)
class ZeroSumFunction:
    """A target b: V -> Z3 with values summing to 0 mod 3."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (0, 1, 2) for v in self.values):
            raise ValueError("values must lie in {0,1,2}")
        if sum(self.values) % 3 != 0:
            raise ValueError("values must sum to 0 mod 3")


@dataclasses.dataclass(frozen=True)
class FlowAssignment:
    """Per-edge values in {1,2} on the reference orientation."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (1, 2) for v in self.values):
            raise ValueError("flow values must lie in {1,2}")


def boundary(G: Multigraph, flow: FlowAssignment) -> ZeroSumFunction:
    """Boundary of a flow: at each vertex, outgoing minus incoming mod 3."""
    if len(flow.values) != G.m:
        raise ValueError("flow length must match edge count")
    b = [0] * G.n
    for (u, v), f in zip(G.edges, flow.values):
        b[u] = (b[u] + f) % 3
        b[v] = (b[v] - f) % 3
    return ZeroSumFunction(tuple(b))


def _check_cap(G: Multigraph, cap: int):
    if G.n > cap:
        raise OracleCapError(f"oracle limited to n<={cap}, got n={G.n}")


def _reach_layers(G: Multigraph):
    """Reachable-boundary arrays after each edge, shape (3,)*n each."""
    shape = (3,) * G.n
    S = np.zeros(shape, dtype=bool)
    S[(0,) * G.n] = True
    layers = [S]
    for u, v in G.edges:
        cur = layers[-1]
        nxt = np.zeros(shape, dtype=bool)
        for a in (1, 2):
            nxt |= np.roll(np.roll(cur, a, axis=u), -a, axis=v)
        layers.append(nxt)
    return layers


def reachable_boundaries(G: Multigraph, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Boolean array over Z3^n marking every achievable flow boundary."""
    _check_cap(G, cap)
    return _reach_layers(G)[-1]


def is_z3_connected(G: Multigraph, cap: int = DEFAULT_CAP) -> bool:
    """Whether every zero-sum boundary is achievable.

    Disconnected graphs are never Z3-connected and are rejected before the
    dynamic program runs.
    """
    _check_cap(G, cap)
    if G.n == 1:
        return True
    if not G.is_connected():
        return False
    reach = reachable_boundaries(G, cap)
    return int(reach.sum()) == 3 ** (G.n - 1)


def solve_boundary(G: Multigraph, b: ZeroSumFunction,
                   cap: int = DEFAULT_CAP) -> FlowAssignment | None:
    """A flow with the given boundary, or None when unreachable.

    Walks the dynamic program backwards from the target through the stored
    per-edge layers to recover one witness assignment.
    """
    _check_cap(G, cap)
    if len(b.values) != G.n:
        raise ValueError("boundary length must match vertex count")
    layers = _reach_layers(G)
    target = tuple(b.values)
    if not layers[-1][target]:
        return None
    values = []
    state = list(target)
    for i in range(G.m - 1, -1, -1):
        u, v = G.edges[i]
        prev = layers[i]
        chosen = None
        for a in (1, 2):
            cand = list(state)
            cand[u] = (cand[u] - a) % 3
            cand[v] = (cand[v] + a) % 3
            if prev[tuple(cand)]:
                chosen = (a, cand)
                break
        if chosen is None:
            raise RuntimeError("witness reconstruction failed")
        values.append(chosen[0])
        state = chosen[1]
    values.reverse()
    return FlowAssignment(tuple(values))


def has_modular_3_orientation(G: Multigraph,
                              cap: int = DEFAULT_CAP) -> list[bool] | None:
    """An orientation with outdegree congruent to indegree mod 3 everywhere.

    Returns a per-edge reversal list against the reference orientation, or
    None when no such orientation exists.  Such an orientation exists iff
    the all-zero boundary is achievable: value 2 on an edge acts exactly
    like value 1 on the reversed edge.
    """
    flow = solve_boundary(G, ZeroSumFunction((0,) * G.n), cap)
    if flow is None:
        return None
    return [f == 2 for f in flow.values]


def is_3_flowable(G: Multigraph, cap: int = DEFAULT_CAP) -> bool:
    """Whether G admits a nowhere-zero 3-flow (the zero-boundary case)."""
    _check_cap(G, cap)
    reach = reachable_boundaries(G, cap)
    return bool(reach[(0,) * G.n])
