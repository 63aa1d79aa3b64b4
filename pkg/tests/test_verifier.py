import itertools
import random

import numpy as np
import pytest

from z3conn.catalog import base_graph, wheel
from z3conn.graph import build_graph, complete_bipartite, complete_graph, cycle_graph
from z3conn.verifier import (FlowAssignment, OracleCapError, ZeroSumFunction,
                             boundary, has_modular_3_orientation,
                             is_3_flowable, is_z3_connected,
                             reachable_boundaries, solve_boundary)

from helpers import naive_boundaries, naive_z3_connected, random_multigraph


def reach_set(G):
    """Reachable boundaries as a set of tuples, for oracle comparison."""
    arr = reachable_boundaries(G)
    return {b for b in itertools.product((0, 1, 2), repeat=G.n) if arr[b]}


def test_boundary_of_explicit_flow():
    G = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    # value 1 around the cycle cancels at every vertex
    assert boundary(G, FlowAssignment((1, 1, 1))).values == (0, 0, 0)
    assert boundary(G, FlowAssignment((1, 2, 1))).values == (0, 1, 2)


def test_value_validation():
    with pytest.raises(ValueError):
        FlowAssignment((0, 1))
    with pytest.raises(ValueError):
        FlowAssignment((1, 3))
    with pytest.raises(ValueError):
        ZeroSumFunction((1, 1))
    with pytest.raises(ValueError):
        ZeroSumFunction((1, 5, 0))
    with pytest.raises(ValueError):
        boundary(build_graph(2, [(0, 1)]), FlowAssignment((1, 1)))


def test_reachable_boundaries_two_cycle():
    G = build_graph(2, [(0, 1), (0, 1)])
    assert reach_set(G) == {(0, 0), (1, 2), (2, 1)}


def test_reachable_boundaries_k4_frozen():
    reach = reach_set(complete_graph(4))
    assert len(reach) == 26
    assert (0, 0, 0, 0) not in reach
    assert all(sum(b) % 3 == 0 for b in reach)


def test_oracle_matches_naive_on_random_multigraphs():
    rng = random.Random(71)
    for _ in range(150):
        G = random_multigraph(rng)
        assert reach_set(G) == naive_boundaries(G)
        assert is_z3_connected(G) == naive_z3_connected(G)


def test_known_positive_graphs():
    for G in (wheel(4), wheel(6), complete_graph(5),
              base_graph("k5minus"), build_graph(2, [(0, 1), (0, 1)]),
              base_graph("fig1a"), base_graph("fig2c")):
        assert is_z3_connected(G)


def test_known_negative_graphs():
    for G in (complete_graph(4), wheel(5), complete_bipartite(2, 3),
              complete_bipartite(3, 3), cycle_graph(5),
              build_graph(4, [(0, 1), (1, 2), (2, 3)])):
        assert not is_z3_connected(G)


def test_single_vertex_and_disconnected():
    assert is_z3_connected(build_graph(1, []))
    assert not is_z3_connected(build_graph(4, [(0, 1), (2, 3)]))


def test_solve_boundary_returns_valid_witness():
    rng = random.Random(97)
    checked = 0
    for _ in range(60):
        G = random_multigraph(rng)
        for b in sorted(naive_boundaries(G)):
            flow = solve_boundary(G, ZeroSumFunction(b))
            assert flow is not None
            assert all(v in (1, 2) for v in flow.values)
            assert boundary(G, flow).values == b
            checked += 1
    assert checked > 100


def test_solve_boundary_unreachable():
    G = complete_graph(4)
    assert solve_boundary(G, ZeroSumFunction((0, 0, 0, 0))) is None
    with pytest.raises(ValueError):
        solve_boundary(G, ZeroSumFunction((0, 0, 0)))


def test_modular_orientation_and_flowability():
    G = complete_bipartite(3, 3)
    orient = has_modular_3_orientation(G)
    assert orient is not None
    # reversing the flagged edges gives outdeg = indeg mod 3 everywhere
    net = [0] * G.n
    for (u, v), rev in zip(G.edges, orient):
        a, b = (v, u) if rev else (u, v)
        net[a] += 1
        net[b] -= 1
    assert all(x % 3 == 0 for x in net)
    assert is_3_flowable(G)
    assert not is_z3_connected(G)
    assert not is_3_flowable(complete_graph(4))
    assert has_modular_3_orientation(complete_graph(4)) is None
    assert is_3_flowable(cycle_graph(4))
    # a bridge blocks every nowhere-zero flow
    assert not is_3_flowable(build_graph(2, [(0, 1)]))


def test_oracle_cap():
    G = build_graph(15, [(i, i + 1) for i in range(14)])
    with pytest.raises(OracleCapError):
        is_z3_connected(G)
    with pytest.raises(OracleCapError):
        reachable_boundaries(G, cap=14)
    assert not is_z3_connected(G, cap=15)
