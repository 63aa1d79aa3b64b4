"""Constructions realizing covered degree sequences as Z3-connected graphs.

Each covered sequence is built by one of four routes keyed on d1:
  T12 (d1 = n-1): enumeration search, no closed-form construction.
  L41 (d1 = n-2): residual recursion when d3 >= 4; otherwise a wheel plus
    an independent set, or the (n-2,4,3^(n-2)) family.
  T14 (d1 = n-3): residual recursion, or wheel-based gadgets for the
    (n-3,d2,3^(n-2)) and (n-3,4^2,3^(n-3)) shapes.
  T15 (d1 <= n-4): residual recursion, the (4^(n-4),3^4) gluing family,
    the (d1,4^(n-5),3^4) wheel gadgets (including a squared-cycle piece),
    and the (d1,4^(n-6),3^5) family built by inverse lifts from d1 = 5.

Constructions carry their own reduction certificate: a list of lift and
contraction steps that collapses the graph to a single vertex, composable
across recursion (merging never deletes vertices, so edges added between
sub-constructions survive until their turn).  Search-based results carry
no steps and fall back to the certifier or the oracle.
"""
from __future__ import annotations

import dataclasses

from .catalog import base_graph, wheel
from .enumerate import ENUMERATE_N_MAX, all_realizations
from .graph import Multigraph
from .reducer import (Certificate, Step, base_step, certify, lift_step, replay,
                      two_cycle_step, wheel_step)
from .seqcore import (Classification, DegreeSequence, Kind, Route, classify,
                      residual)
from .verifier import DEFAULT_CAP, is_z3_connected

FALLBACK_N_MAX = 12
FALLBACK_LIMIT = 10 ** 6


class ConstructionError(RuntimeError):
    """A construction produced something other than what it promised."""


@dataclasses.dataclass
class _Pack:
    """A built graph, its reduction steps (None when search-based; when
    present they use only lift/contract steps and end with every vertex in
    one class), and human-readable trace lines."""

    graph: Multigraph
    steps: list[Step] | None
    trace: list[str]


@dataclasses.dataclass(frozen=True)
class RealizationResult:
    sequence: DegreeSequence
    classification: Classification
    status: str  # "realized" | "exception" | "not_graphic" | "unsupported"
    graph: Multigraph | None = None
    certificate: Certificate | None = None
    proof: str | None = None  # "certificate" | "oracle" | "unverified"
    trace: tuple[str, ...] = ()


def realize(seq: DegreeSequence, oracle_cap: int = DEFAULT_CAP,
            allow_fallback: bool = True) -> RealizationResult:
    """Realize a degree sequence as a Z3-connected simple graph.

    Covered sequences always succeed (a failure is a bug and raises).
    Out-of-coverage sequences get a bounded enumeration search when
    allow_fallback is set; exhaustion yields status "unsupported", never a
    wrong negative.
    """
    c = classify(seq)
    if c.kind == Kind.NOT_GRAPHIC:
        return RealizationResult(seq, c, "not_graphic",
                                 trace=("sequence is not graphic",))
    if c.kind in (Kind.EXCEPTION_N3, Kind.EXCEPTION_ODD_K,
                  Kind.EXCEPTION_ODD_K_SQUARE):
        return RealizationResult(
            seq, c, "exception",
            trace=(f"no Z3-connected realization exists ({c.kind.value})",))
    if c.kind == Kind.COVERED:
        pack = _dispatch(seq)
        return _finish(seq, c, pack, oracle_cap)
    # out of coverage
    if allow_fallback and seq.n <= FALLBACK_N_MAX:
        try:
            pack = _search_pack(seq, DEFAULT_CAP,
                                note="out-of-coverage fallback search")
        except ConstructionError:
            return RealizationResult(
                seq, c, "unsupported",
                trace=("out of coverage; fallback search found no "
                       "Z3-connected realization within limits",))
        return _finish(seq, c, pack, oracle_cap)
    return RealizationResult(
        seq, c, "unsupported",
        trace=("out of coverage and beyond fallback search size",))


def realize_family(seq: DegreeSequence, route: Route) -> Multigraph:
    """The raw construction for a covered route, without verification."""
    pack = _ROUTES[route](seq)
    _validate(seq, pack.graph)
    return pack.graph


def _finish(seq: DegreeSequence, c: Classification, pack: _Pack,
            oracle_cap: int) -> RealizationResult:
    G = pack.graph
    _validate(seq, G)
    if pack.steps is not None:
        cert = Certificate(tuple(pack.steps) + (Step("done"),))
        rr = replay(G, cert)
        if not rr.ok:
            raise ConstructionError(
                f"built certificate failed replay at step {rr.failed_step}: "
                f"{rr.message}")
        return RealizationResult(seq, c, "realized", G, cert, "certificate",
                                 tuple(pack.trace))
    found = certify(G)
    if found.proved:
        return RealizationResult(seq, c, "realized", G, found.certificate,
                                 "certificate", tuple(pack.trace))
    if G.n <= oracle_cap:
        if not is_z3_connected(G, oracle_cap):
            raise ConstructionError(
                f"construction for {seq.render()} is not Z3-connected")
        return RealizationResult(seq, c, "realized", G, None, "oracle",
                                 tuple(pack.trace))
    return RealizationResult(seq, c, "realized", G, None, "unverified",
                             tuple(pack.trace))


def _validate(seq: DegreeSequence, G: Multigraph):
    if not G.is_simple():
        raise ConstructionError(f"construction for {seq.render()} not simple")
    if G.degree_sequence() != seq:
        raise ConstructionError(
            f"construction degrees {G.degree_sequence().render()} "
            f"!= {seq.render()}")


def _dispatch(seq: DegreeSequence) -> _Pack:
    c = classify(seq)
    if c.kind != Kind.COVERED:
        raise ConstructionError(
            f"recursion left the covered families at {seq.render()} "
            f"({c.kind.value})")
    return _ROUTES[c.route](seq)


# ---------------------------------------------------------------- helpers

def _pick_by_degrees(G: Multigraph, needed: list[int]) -> list[int]:
    """Distinct vertices matching the needed degrees, lowest labels first."""
    degs = G.degrees()
    used: set[int] = set()
    picks = []
    for want in needed:
        v = next((v for v in range(G.n) if v not in used and degs[v] == want),
                 None)
        if v is None:
            raise ConstructionError(f"no spare vertex of degree {want}")
        used.add(v)
        picks.append(v)
    return picks


def _wheel_edges(rim: int) -> list[tuple[int, int]]:
    """Wheel with hub 0 and rim 1..rim (rim >= 3)."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i + 1) for i in range(1, rim)]
    edges.append((1, rim))
    return edges


def _matching(vertices: list[int]) -> list[tuple[int, int]]:
    if len(vertices) % 2:
        raise ConstructionError("matching needs an even vertex set")
    return [(vertices[i], vertices[i + 1]) for i in range(0, len(vertices), 2)]


def _rim_safe_matching(vertices: list[int], drop_middle: bool) -> list[tuple[int, int]]:
    """Matching on rim vertices avoiding rim-adjacent (consecutive) pairs.

    With drop_middle, the middle vertex stays unmatched (it keeps degree 3).
    """
    L = sorted(vertices)
    if drop_middle:
        L.pop(len(L) // 2)
        return [(L[i], L[-1 - i]) for i in range(len(L) // 2)]
    out = []
    while L:
        if len(L) == 2:
            a, b = L
            if b - a < 2:
                raise ConstructionError("cannot match rim-adjacent pair")
            out.append((a, b))
            L = []
        elif len(L) % 4 == 2:
            b = L[:6]
            out += [(b[0], b[2]), (b[1], b[4]), (b[3], b[5])]
            L = L[6:]
        else:
            b = L[:4]
            out += [(b[0], b[2]), (b[1], b[3])]
            L = L[4:]
    return out


def _base_pack(name: str, note: str) -> _Pack:
    G = base_graph(name)
    return _Pack(G, [base_step(name, tuple(range(G.n)))], [note])


def _wheel_pack(k: int, note: str) -> _Pack:
    G = wheel(k)
    return _Pack(G, [wheel_step(0, tuple(range(1, k + 1)))], [note])


def _shift_step(step: Step, off: int) -> Step:
    if step.kind == "lift":
        u, v, w = step.args
        return lift_step(u + off, v + off, w + off)
    if step.kind == "contract-2cycle":
        u, v = step.args
        return two_cycle_step(u + off, v + off)
    if step.kind == "contract-even-wheel":
        c, rim = step.args
        return wheel_step(c + off, tuple(r + off for r in rim))
    if step.kind == "contract-base":
        name, vs = step.args
        return base_step(name, tuple(v + off for v in vs))
    raise ConstructionError(f"cannot shift step {step.kind}")


def _glue(p1: _Pack, p2: _Pack, pairs: list[tuple[int, int]],
          note: str) -> _Pack:
    """Disjoint union of two built graphs plus cross edges; pairs are
    (vertex in p1, vertex in p2) in local labels."""
    n1 = p1.graph.n
    edges = list(p1.graph.edges)
    edges += [(u + n1, v + n1) for u, v in p2.graph.edges]
    edges += [(a, b + n1) for a, b in pairs]
    G = Multigraph(n1 + p2.graph.n, tuple(edges))
    steps = None
    if p1.steps is not None and p2.steps is not None:
        steps = list(p1.steps)
        steps += [_shift_step(s, n1) for s in p2.steps]
        steps.append(two_cycle_step(pairs[0][0], pairs[0][1] + n1))
    return _Pack(G, steps, [note] + p1.trace + p2.trace)


def _residual_attach(seq: DegreeSequence, note: str) -> _Pack:
    """Realize the residual sequence recursively, then re-attach a new
    minimum-degree vertex to vertices matching the decremented entries."""
    rr = residual(seq)
    sub = _dispatch(rr.sequence)
    k = seq.degrees[-1]
    needed = sorted((seq.degrees[i] - 1 for i in range(k)), reverse=True)
    anchors = _pick_by_degrees(sub.graph, needed)
    v = sub.graph.n
    G = Multigraph(v + 1, sub.graph.edges + tuple((a, v) for a in anchors))
    steps = None
    if sub.steps is not None:
        steps = sub.steps + [two_cycle_step(anchors[0], v)]
    trace = [f"{note}: attach degree-{k} vertex to realization of "
             f"{rr.sequence.render()}"]
    return _Pack(G, steps, trace + sub.trace)


def _search_pack(seq: DegreeSequence, oracle_cap: int, note: str) -> _Pack:
    """Enumerate labeled realizations until one verifies Z3-connected."""
    if seq.n > min(FALLBACK_N_MAX, ENUMERATE_N_MAX):
        raise ConstructionError(
            f"search fallback limited to n<={FALLBACK_N_MAX}, got {seq.n}")
    checked = 0
    for G in all_realizations(seq, limit=FALLBACK_LIMIT):
        checked += 1
        if not G.is_connected():
            continue
        if G.n <= oracle_cap:
            ok = is_z3_connected(G, oracle_cap)
        else:
            ok = certify(G).proved
        if ok:
            return _Pack(G, None,
                         [f"{note}: candidate {checked} verified"])
    raise ConstructionError(
        f"search found no Z3-connected realization of {seq.render()}")


# ----------------------------------------------------------- route: T12

def _build_t12(seq: DegreeSequence) -> _Pack:
    return _search_pack(seq, DEFAULT_CAP, "dominating-vertex family via search")


# ----------------------------------------------------------- route: L41

def _build_l41(seq: DegreeSequence) -> _Pack:
    d = seq.degrees
    n = seq.n
    if d[2] >= 4:
        return _residual_attach(seq, "d1=n-2 with d3>=4")
    d2 = d[1]
    if d2 == 4:
        return _l31_i(n)
    # (n-2, d2, 3^(n-2)) with even d2 >= 6
    if n % 2 == 0:
        rim = n - d2 + 2
        S = list(range(rim + 1, rim + 1 + (d2 - 4)))
        x = n - 1
        edges = _wheel_edges(rim)
        edges += [(0, s) for s in S]
        edges += [(1, s) for s in S]
        edges += _matching(S[2:])
        edges += [(1, x), (S[0], x), (S[1], x)]
        steps = [wheel_step(0, tuple(range(1, rim + 1)))]
        steps += [two_cycle_step(0, s) for s in S]
        steps.append(two_cycle_step(0, x))
        trace = [f"wheel W{rim} plus independent set of {len(S)}, even case"]
    else:
        rim = n - d2 + 1
        S = list(range(rim + 1, rim + 1 + (d2 - 3)))
        x = n - 1
        edges = _wheel_edges(rim)
        edges += [(0, s) for s in S]
        edges += [(1, s) for s in S]
        edges += [(S[0], x), (S[1], x), (S[2], x)]
        edges += _matching(S[3:])
        steps = [wheel_step(0, tuple(range(1, rim + 1)))]
        steps += [two_cycle_step(0, s) for s in S]
        steps.append(two_cycle_step(0, x))
        trace = [f"wheel W{rim} plus independent set of {len(S)}, odd case"]
    return _Pack(Multigraph(n, tuple(edges)), steps, trace)


def _l31_i(n: int) -> _Pack:
    """(n-2, 4, 3^(n-2)) for n >= 6."""
    if n == 6:
        return _base_pack("fig1a", "fixed realization of (4^2,3^4)")
    if n == 7:
        return _base_pack("fig1b", "fixed realization of (5,4,3^5)")
    if n == 8:
        return _base_pack("fig1c", "fixed realization of (6,4,3^6)")
    if n % 2 == 1:
        rim = n - 5
        u1, u2, u3, u4 = n - 4, n - 3, n - 2, n - 1
        edges = _wheel_edges(rim)
        edges += [(u1, u2), (u2, u3), (u3, u4), (u1, u4), (u2, u4)]
        edges += [(0, u1), (0, u2), (0, u3)]
        steps = [wheel_step(0, tuple(range(1, rim + 1))),
                 wheel_step(u2, (u1, 0, u3, u4))]
        return _Pack(Multigraph(n, tuple(edges)), steps,
                     [f"wheel W{rim} joined to near-complete 4-block, odd case"])
    rim = n - 6
    fig = base_graph("fig1a")
    edges = list(fig.edges)
    spokes = [(0, 6 + i) for i in range(rim)]
    ring = [(6 + i, 6 + i + 1) for i in range(rim - 1)] + [(6, 6 + rim - 1)]
    edges += spokes + ring
    steps = [wheel_step(0, tuple(range(6, 6 + rim))),
             base_step("fig1a", tuple(range(6)))]
    return _Pack(Multigraph(n, tuple(edges)), steps,
                 [f"(4^2,3^4) base sharing its 4-vertex with wheel W{rim}, "
                  "even case"])


# ----------------------------------------------------------- route: T14

def _build_t14(seq: DegreeSequence) -> _Pack:
    d = seq.degrees
    n = seq.n
    if d[2] == 3:
        return _t14_two_heavy(seq)
    if d == (n - 3, 4, 4) + (3,) * (n - 3):
        return _t14_shape_442(n)
    return _residual_attach(seq, "d1=n-3 with enough degree above 3")


def _t14_two_heavy(seq: DegreeSequence) -> _Pack:
    """(n-3, d2, 3^(n-2)) with odd d2 >= 5."""
    d2 = seq.degrees[1]
    n = seq.n
    if d2 == 5:
        if n == 8:
            return _base_pack("fig1d", "fixed realization of (5^2,3^6)")
        if n % 2 == 1:
            rim = n - 5
            s1, s2, x1, x2 = n - 4, n - 3, n - 2, n - 1
            edges = _wheel_edges(rim)
            edges += [(0, s1), (0, s2)]
            edges += [(1, x1), (s1, x1), (s2, x1)]
            edges += [(1, x2), (s1, x2), (s2, x2)]
            steps = [wheel_step(0, tuple(range(1, rim + 1))),
                     wheel_step(0, (s1, x1, s2, x2))]
            return _Pack(Multigraph(n, tuple(edges)), steps,
                         [f"wheel W{rim} with two 3-fans, odd case"])
        rim = n - 6
        s1, s2, s3, x1, x2 = n - 5, n - 4, n - 3, n - 2, n - 1
        edges = _wheel_edges(rim)
        edges += [(0, s1), (0, s2), (0, s3), (1, s1)]
        edges += [(1, x1), (s2, x1), (s3, x1)]
        edges += [(s1, x2), (s2, x2), (s3, x2)]
        steps = [wheel_step(0, tuple(range(1, rim + 1))),
                 two_cycle_step(0, s1),
                 wheel_step(0, (s2, x1, s3, x2))]
        return _Pack(Multigraph(n, tuple(edges)), steps,
                     [f"wheel W{rim} with two 3-fans, even case"])
    # d2 >= 7
    if n % 2 == 0:
        rim = n - d2 + 1
        S = list(range(rim + 1, rim + 1 + (d2 - 4)))
        x1, x2 = n - 2, n - 1
        s, S1 = S[0], S[1:]
        edges = _wheel_edges(rim)
        edges += [(0, t) for t in S]
        edges += [(1, t) for t in S1]
        edges += _matching(S1[2:])
        edges += [(1, x1), (S1[0], x1), (1, x2), (S1[1], x2)]
        edges += [(s, x1), (s, x2)]
        steps = [wheel_step(0, tuple(range(1, rim + 1)))]
        steps += [two_cycle_step(0, t) for t in S1]
        steps += [two_cycle_step(0, x1), two_cycle_step(0, x2),
                  two_cycle_step(0, s)]
        trace = [f"wheel W{rim} plus independent set of {len(S)}, even case"]
    else:
        rim = n - d2
        S = list(range(rim + 1, rim + 1 + (d2 - 3)))
        x1, x2 = n - 2, n - 1
        s3, s4 = S[0], S[1]
        S1 = S[2:]
        edges = _wheel_edges(rim)
        edges += [(0, t) for t in S]
        edges += [(1, t) for t in S1]
        edges += [(1, x1), (s3, x1), (s4, x1)]
        edges += [(1, x2), (s3, x2), (s4, x2)]
        edges += _matching(S1)
        steps = [wheel_step(0, tuple(range(1, rim + 1)))]
        steps += [two_cycle_step(0, t) for t in S1]
        steps.append(wheel_step(0, (s3, x1, s4, x2)))
        trace = [f"wheel W{rim} plus independent set of {len(S)}, odd case"]
    return _Pack(Multigraph(n, tuple(edges)), steps, trace)


def _t14_shape_442(n: int) -> _Pack:
    """(n-3, 4^2, 3^(n-3)); includes (4^3,3^4) at n = 7."""
    if n == 7:
        return _base_pack("fig2a", "fixed realization of (4^3,3^4)")
    if n == 8:
        return _base_pack("fig2b", "fixed realization of (5,4^2,3^5)")
    if n % 2 == 1:
        rim = n - 5
        s1, s2, x1, x2 = n - 4, n - 3, n - 2, n - 1
        edges = _wheel_edges(rim)
        edges += [(0, s1), (0, s2)]
        edges += [(1, x1), (s1, x1), (s2, x1)]
        edges += [(2, x2), (s1, x2), (s2, x2)]
        steps = [wheel_step(0, tuple(range(1, rim + 1))),
                 wheel_step(0, (s1, x1, s2, x2))]
        return _Pack(Multigraph(n, tuple(edges)), steps,
                     [f"wheel W{rim} with 3-fans on two rim vertices, odd case"])
    rim = n - 6
    s1, s2, s3, x1, x2 = n - 5, n - 4, n - 3, n - 2, n - 1
    edges = _wheel_edges(rim)
    edges += [(0, s1), (0, s2), (0, s3), (1, s1)]
    edges += [(2, x1), (s2, x1), (s3, x1)]
    edges += [(s1, x2), (s2, x2), (s3, x2)]
    steps = [wheel_step(0, tuple(range(1, rim + 1))),
             two_cycle_step(0, s1),
             wheel_step(0, (s2, x1, s3, x2))]
    return _Pack(Multigraph(n, tuple(edges)), steps,
                 [f"wheel W{rim} with 3-fans on two rim vertices, even case"])


# ----------------------------------------------------------- route: T15

def _build_t15(seq: DegreeSequence) -> _Pack:
    d = seq.degrees
    n = seq.n
    d1 = d[0]
    if d == (d1,) + (4,) * (n - 6) + (3,) * 5 and d1 % 2 == 1:
        if d1 == 5:
            return _l31_iii(n)
        return _t15_inverse_lift(seq)
    if d == (4,) * (n - 4) + (3,) * 4:
        return _l31_ii(n)
    if d == (d1,) + (4,) * (n - 5) + (3,) * 4 and d1 % 2 == 0 and d1 >= 6:
        if d1 == n - 4:
            return _t15_wheel_path(n, long_head=False)
        if d1 == n - 5:
            return _t15_wheel_path(n, long_head=True)
        return _t15_squared_cycle(seq)
    return _residual_attach(seq, "d1<=n-4 with enough degree above 3")


def _l31_ii(n: int) -> _Pack:
    """(4^(n-4), 3^4) for n >= 5."""
    if n == 5:
        return _wheel_pack(4, "wheel W4 realizes (4,3^4)")
    if n == 6:
        return _base_pack("fig1a", "fixed realization of (4^2,3^4)")
    if n == 7:
        return _base_pack("fig2a", "fixed realization of (4^3,3^4)")
    if n == 8:
        return _base_pack("fig2c", "fixed realization of (4^4,3^4)")
    if n == 9:
        # wheel W4 on 0..4 joined to a near-complete block on 5..8
        edges = _wheel_edges(4)
        edges += [(5, 6), (5, 7), (5, 8), (6, 7), (7, 8)]
        edges += [(1, 6), (2, 8), (3, 5)]
        steps = [wheel_step(0, (1, 2, 3, 4)),
                 wheel_step(5, (6, 7, 8, 0))]
        return _Pack(Multigraph(9, tuple(edges)), steps,
                     ["wheel W4 joined to near-complete 4-block"])
    k = n // 2
    p1 = _l31_ii(k)
    p2 = _l31_ii(n - k)
    a = _pick_by_degrees(p1.graph, [3, 3])
    b = _pick_by_degrees(p2.graph, [3, 3])
    return _glue(p1, p2, [(a[0], b[0]), (a[1], b[1])],
                 f"glue (4^{k - 4},3^4) and (4^{n - k - 4},3^4) on two "
                 "3-vertex pairs")


def _l31_iii(n: int) -> _Pack:
    """(5, 4^(n-6), 3^5) for n >= 7."""
    if n == 7:
        return _base_pack("fig1b", "fixed realization of (5,4,3^5)")
    if n == 8:
        return _base_pack("fig2b", "fixed realization of (5,4^2,3^5)")
    if n == 9:
        edges = _wheel_edges(4)
        edges += [(5, 6), (5, 7), (5, 8), (6, 7), (7, 8)]
        edges += [(0, 6), (1, 5), (2, 8)]
        steps = [wheel_step(0, (1, 2, 3, 4)),
                 wheel_step(5, (6, 7, 8, 0))]
        return _Pack(Multigraph(9, tuple(edges)), steps,
                     ["wheel W4 joined to near-complete 4-block, hub-heavy"])
    k = n // 2
    p1 = _l31_ii(k)
    p2 = _l31_ii(n - k)
    u1 = _pick_by_degrees(p1.graph, [4])[0]
    u2 = _pick_by_degrees(p1.graph, [3])[0]
    b = _pick_by_degrees(p2.graph, [3, 3])
    return _glue(p1, p2, [(u1, b[0]), (u2, b[1])],
                 f"glue (4^{k - 4},3^4) and (4^{n - k - 4},3^4) raising one "
                 "4-vertex to degree 5")


def _t15_wheel_path(n: int, long_head: bool) -> _Pack:
    """(n-4, 4^(n-5), 3^4) on an even wheel with a pendant path of three
    vertices, or (n-5, 4^(n-5), 3^4) with a path of four."""
    if long_head:
        rim = n - 5
        xs = [n - 4, n - 3, n - 2, n - 1]
        hook_targets = [1, 2, 3, 4, 5, 6]
        if rim - 6 == 2:
            # two leftover rim vertices must not be rim-adjacent
            hook_targets = [1, 2, 3, 4, 5, 7]
        hooks = [(xs[0], hook_targets[0]), (xs[0], hook_targets[1]),
                 (xs[1], hook_targets[2]), (xs[2], hook_targets[3]),
                 (xs[3], hook_targets[4]), (xs[3], hook_targets[5])]
    else:
        rim = n - 4
        xs = [n - 3, n - 2, n - 1]
        hook_targets = [1, 2, 3, 4, 5]
        hooks = [(xs[0], 1), (xs[0], 2), (xs[1], 3), (xs[2], 4), (xs[2], 5)]
    edges = _wheel_edges(rim)
    edges += [(xs[i], xs[i + 1]) for i in range(len(xs) - 1)]
    edges += hooks
    leftover = [v for v in range(1, rim + 1) if v not in hook_targets]
    edges += _rim_safe_matching(leftover, drop_middle=len(leftover) % 2 == 1)
    steps = [wheel_step(0, tuple(range(1, rim + 1)))]
    steps += [two_cycle_step(0, x) for x in xs]
    return _Pack(Multigraph(n, tuple(edges)), steps,
                 [f"wheel W{rim} with pendant path of {len(xs)}"])


def _t15_squared_cycle(seq: DegreeSequence) -> _Pack:
    """(d1, 4^(n-5), 3^4) with 6 <= d1 <= n-6: an even wheel W_d1 bridged
    to a squared cycle missing one chord."""
    d1 = seq.degrees[0]
    n = seq.n
    m = n - d1 - 1
    if m < 5:
        raise ConstructionError("squared-cycle piece needs at least 5 vertices")
    u = [0] + [d1 + i for i in range(1, m + 1)]  # u[i] for i in 1..m
    edges = _wheel_edges(d1)
    edges += [(u[i], u[i + 1]) for i in range(1, m)] + [(u[m], u[1])]
    # distance-2 chords, except the one between u2 and the last cycle vertex
    edges += [(u[i], u[i + 2]) for i in range(1, m - 1)]
    edges.append((u[m - 1], u[1]))
    edges += [(1, u[m]), (2, u[2])]
    lo, hi = 3, d1
    # four consecutive rim vertices keep degree 3
    while hi - lo > 3:
        edges.append((lo, hi))
        lo += 1
        hi -= 1
    steps = [lift_step(u[1], u[2], u[3]), two_cycle_step(u[2], u[3])]
    steps += [two_cycle_step(u[2], u[i]) for i in range(4, m + 1)]
    steps.append(two_cycle_step(u[2], u[1]))
    steps.append(wheel_step(0, tuple(range(1, d1 + 1))))
    steps.append(two_cycle_step(1, u[2]))
    return _Pack(Multigraph(n, tuple(edges)), steps,
                 [f"wheel W{d1} bridged to squared {m}-cycle missing a chord"])


def _t15_inverse_lift(seq: DegreeSequence) -> _Pack:
    """(d1, 4^(n-6), 3^5) with odd d1 >= 7: start from the d1 = 5 member
    and pull (d1-5)/2 disjoint far edges onto the 5-vertex."""
    d1 = seq.degrees[0]
    n = seq.n
    sub = _l31_iii(n)
    G = sub.graph
    u = _pick_by_degrees(G, [5])[0]
    closed = set(G.neighbors(u)) | {u}
    picked = []
    used: set[int] = set(closed)
    for a, b in G.edges:
        if a in used or b in used:
            continue
        picked.append((a, b))
        used.add(a)
        used.add(b)
        if len(picked) == (d1 - 5) // 2:
            break
    if len(picked) < (d1 - 5) // 2:
        raise ConstructionError(
            f"not enough disjoint edges away from the 5-vertex in "
            f"{seq.render()}")
    edges = list(G.edges)
    for a, b in picked:
        edges.remove((a, b))
        edges += [(u, a), (u, b)]
    steps = None
    if sub.steps is not None:
        steps = [lift_step(u, a, b) for a, b in picked] + sub.steps
    return _Pack(Multigraph(n, tuple(edges)), steps,
                 [f"inverse lifts of {len(picked)} edges onto the 5-vertex"]
                 + sub.trace)


_ROUTES = {
    Route.T12: _build_t12,
    Route.L41: _build_l41,
    Route.T14: _build_t14,
    Route.T15: _build_t15,
}
