"""Reduction certificates: machine-checkable evidence of Z3-connectivity.

A certificate is a sequence of steps replayed against the input graph.
Steps keep the original vertex labels throughout: merged vertices form
classes, and any original member names its class.  Every step is sound on
its own (if the reduced graph is Z3-connected then so was the graph before
the step), so a replay that validates all preconditions and ends at a
single vertex, or at a triangular-rule terminal, proves the input graph
Z3-connected regardless of how the steps were found.

Step kinds and their preconditions:
  lift u v w            deg(u) >= 4 and edges uv, uw present (v != w);
                        replaces uv, uw by vw
  contract-2cycle u v   at least two parallel edges between the classes
  contract-even-wheel c r1..r2k
                        even rim length >= 4, spokes and rim edges present
  contract-base NAME v1..vk
                        the named catalog graph embeds on these classes
                        (every base edge present between the mapped classes)
  absorb v              the class of v sends >= 2 edges to the rest;
                        deletes the class
  triangular            terminal: remaining graph triangularly connected
                        with minimum degree >= 4
  done                  terminal: remaining graph is a single vertex
"""
from __future__ import annotations

import dataclasses

from .catalog import CERTIFIABLE_BASES, base_graph
from .graph import Multigraph, find_even_wheel, is_triangularly_connected


class CertificateError(ValueError):
    """Malformed certificate text."""


@dataclasses.dataclass(frozen=True)
class Step:
    kind: str
    args: tuple = ()

    def render(self) -> str:
        if self.kind == "lift":
            return "lift {} {} {}".format(*self.args)
        if self.kind == "contract-2cycle":
            return "contract-2cycle {} {}".format(*self.args)
        if self.kind == "contract-even-wheel":
            center, rim = self.args
            return "contract-even-wheel {} {}".format(center, " ".join(map(str, rim)))
        if self.kind == "contract-base":
            name, vertices = self.args
            return "contract-base {} {}".format(name, " ".join(map(str, vertices)))
        if self.kind == "absorb":
            return "absorb {}".format(self.args[0])
        if self.kind in ("triangular", "done"):
            return self.kind
        raise CertificateError(f"unknown step kind {self.kind!r}")


def lift_step(u, v, w) -> Step:
    return Step("lift", (u, v, w))


def two_cycle_step(u, v) -> Step:
    return Step("contract-2cycle", (u, v))


def wheel_step(center, rim) -> Step:
    return Step("contract-even-wheel", (center, tuple(rim)))


def base_step(name, vertices) -> Step:
    return Step("contract-base", (name, tuple(vertices)))


def absorb_step(v) -> Step:
    return Step("absorb", (v,))


@dataclasses.dataclass(frozen=True)
class Certificate:
    steps: tuple[Step, ...]

    def render(self) -> str:
        return "\n".join(step.render() for step in self.steps) + "\n"


def parse_certificate(text: str) -> Certificate:
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, rest = parts[0], parts[1:]
        try:
            if kind == "lift":
                steps.append(lift_step(*map(int, rest)))
            elif kind == "contract-2cycle":
                steps.append(two_cycle_step(*map(int, rest)))
            elif kind == "contract-even-wheel":
                steps.append(wheel_step(int(rest[0]), tuple(map(int, rest[1:]))))
            elif kind == "contract-base":
                steps.append(base_step(rest[0], tuple(map(int, rest[1:]))))
            elif kind == "absorb":
                steps.append(absorb_step(int(rest[0])))
            elif kind in ("triangular", "done"):
                if rest:
                    raise ValueError("unexpected arguments")
                steps.append(Step(kind))
            else:
                raise ValueError(f"unknown step {kind!r}")
        except (ValueError, TypeError, IndexError) as exc:
            raise CertificateError(f"line {lineno}: {exc}") from None
    if not steps:
        raise CertificateError("empty certificate")
    return Certificate(tuple(steps))


class _State:
    """Replay state: classes of original vertices plus surviving edges."""

    def __init__(self, G: Multigraph):
        self.n = G.n
        self.parent = list(range(G.n))
        self.alive = [True] * G.n
        self.edges: list[tuple[int, int]] = list(G.edges)

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def merge(self, u: int, v: int):
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[ru] = rv

    def valid_vertex(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and self.alive[self.find(v)]

    def class_edges(self) -> list[tuple[int, int]]:
        out = []
        for u, v in self.edges:
            ru, rv = self.find(u), self.find(v)
            if ru != rv:
                out.append((ru, rv))
        return out

    def classes(self) -> list[int]:
        return sorted({self.find(v) for v in range(self.n) if self.alive[self.find(v)]})

    def multiplicity(self, u: int, v: int) -> int:
        ru, rv = self.find(u), self.find(v)
        return sum(1 for a, b in self.class_edges() if {a, b} == {ru, rv})

    def delete_class(self, v: int):
        rv = self.find(v)
        self.alive[rv] = False
        self.edges = [(a, b) for a, b in self.edges
                      if self.find(a) != rv and self.find(b) != rv]

    def quotient(self) -> tuple[Multigraph, list[int]]:
        """Current graph on class representatives, relabeled 0..k-1."""
        reps = self.classes()
        index = {r: i for i, r in enumerate(reps)}
        edges = tuple((index[a], index[b]) for a, b in self.class_edges())
        return Multigraph(len(reps), edges), reps


def _apply_step(state: _State, step: Step) -> str | None:
    """Apply one step, validating preconditions; returns an error or None."""
    if step.kind == "lift":
        u, v, w = step.args
        for x in (u, v, w):
            if not state.valid_vertex(x):
                return f"vertex {x} invalid"
        ru, rv, rw = state.find(u), state.find(v), state.find(w)
        if rv == rw or ru in (rv, rw):
            return "lift endpoints must be three distinct classes"
        deg = sum(1 for a, b in state.class_edges() if ru in (a, b))
        if deg < 4:
            return f"lift center has degree {deg} < 4"
        if state.multiplicity(u, v) < 1 or state.multiplicity(u, w) < 1:
            return "lift edges missing"

        def drop_one(a, b):
            for i, e in enumerate(state.edges):
                if {state.find(e[0]), state.find(e[1])} == {a, b}:
                    del state.edges[i]
                    return
            raise AssertionError("edge vanished")

        drop_one(ru, rv)
        drop_one(ru, rw)
        state.edges.append((rv, rw))
        return None
    if step.kind == "contract-2cycle":
        u, v = step.args
        if not (state.valid_vertex(u) and state.valid_vertex(v)):
            return "vertex invalid"
        if state.find(u) == state.find(v):
            return "vertices already merged"
        if state.multiplicity(u, v) < 2:
            return "need two parallel edges"
        state.merge(u, v)
        return None
    if step.kind == "contract-even-wheel":
        center, rim = step.args
        vertices = (center, *rim)
        if len(rim) < 4 or len(rim) % 2 != 0:
            return "rim must have even length >= 4"
        reps = []
        for x in vertices:
            if not state.valid_vertex(x):
                return f"vertex {x} invalid"
            reps.append(state.find(x))
        if len(set(reps)) != len(reps):
            return "wheel vertices must be distinct classes"
        for r in rim:
            if state.multiplicity(center, r) < 1:
                return f"missing spoke to {r}"
        for a, b in zip(rim, rim[1:] + (rim[0],)):
            if state.multiplicity(a, b) < 1:
                return f"missing rim edge ({a},{b})"
        for x in rim:
            state.merge(center, x)
        return None
    if step.kind == "contract-base":
        name, vertices = step.args
        if name not in CERTIFIABLE_BASES:
            return f"base {name!r} not certifiable"
        base = base_graph(name)
        if len(vertices) != base.n:
            return f"base {name} needs {base.n} vertices"
        reps = []
        for x in vertices:
            if not state.valid_vertex(x):
                return f"vertex {x} invalid"
            reps.append(state.find(x))
        if len(set(reps)) != len(reps):
            return "base vertices must be distinct classes"
        for a, b in base.edges:
            if state.multiplicity(vertices[a], vertices[b]) < 1:
                return f"missing base edge ({vertices[a]},{vertices[b]})"
        for x in vertices[1:]:
            state.merge(vertices[0], x)
        return None
    if step.kind == "absorb":
        (v,) = step.args
        if not state.valid_vertex(v):
            return f"vertex {v} invalid"
        rv = state.find(v)
        deg = sum(1 for a, b in state.class_edges() if rv in (a, b))
        if deg < 2:
            return f"class of {v} has only {deg} outgoing edges"
        if len(state.classes()) < 2:
            return "cannot absorb the last class"
        state.delete_class(v)
        return None
    if step.kind == "triangular":
        Q, _ = state.quotient()
        if not is_triangularly_connected(Q):
            return "remaining graph not triangularly connected"
        if min(Q.degrees()) < 4:
            return "remaining graph has a vertex of degree < 4"
        return None
    if step.kind == "done":
        if len(state.classes()) != 1:
            return "more than one class remains"
        return None
    return f"unknown step kind {step.kind!r}"


@dataclasses.dataclass(frozen=True)
class ReplayResult:
    ok: bool
    failed_step: int | None = None
    message: str | None = None


def replay(G: Multigraph, cert: Certificate) -> ReplayResult:
    """Validate a certificate against a graph, step by step."""
    if not cert.steps:
        return ReplayResult(False, None, "empty certificate")
    state = _State(G)
    for i, step in enumerate(cert.steps):
        if step.kind in ("triangular", "done") and i != len(cert.steps) - 1:
            return ReplayResult(False, i, "terminal step before end")
        err = _apply_step(state, step)
        if err:
            return ReplayResult(False, i, err)
    last = cert.steps[-1]
    if last.kind not in ("triangular", "done"):
        return ReplayResult(False, len(cert.steps) - 1,
                            "certificate must end with 'done' or 'triangular'")
    return ReplayResult(True)


def _embed_base(base: Multigraph, Q: Multigraph) -> list[int] | None:
    """Subgraph embedding of a simple base into Q (extra edges allowed).

    Returns base-vertex -> Q-vertex, or None.  Deterministic backtracking:
    base vertices in a connectivity-respecting order, candidates ascending.
    """
    if base.n > Q.n:
        return None
    qadj = [set(Q.neighbors(v)) for v in range(Q.n)]
    qdeg = [len(a) for a in qadj]
    badj = [set(base.neighbors(v)) for v in range(base.n)]
    order = [max(range(base.n), key=lambda v: len(badj[v]))]
    placed = set(order)
    while len(order) < base.n:
        nxt = max((v for v in range(base.n) if v not in placed),
                  key=lambda v: (len(badj[v] & placed), len(badj[v]), -v))
        order.append(nxt)
        placed.add(nxt)
    assign: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        bv = order[i]
        anchors = [assign[x] for x in badj[bv] if x in assign]
        if anchors:
            cands = set(qadj[anchors[0]])
            for a in anchors[1:]:
                cands &= qadj[a]
            cands -= used
        else:
            cands = set(range(Q.n)) - used
        for qv in sorted(cands):
            if qdeg[qv] < len(badj[bv]):
                continue
            assign[bv] = qv
            used.add(qv)
            if backtrack(i + 1):
                return True
            del assign[bv]
            used.remove(qv)
        return False

    if backtrack(0):
        return [assign[v] for v in range(base.n)]
    return None


@dataclasses.dataclass(frozen=True)
class CertifyResult:
    proved: bool
    certificate: Certificate | None = None


def certify(G: Multigraph, budget: int = 20000) -> CertifyResult:
    """Search for a reduction certificate.  Sound but incomplete: a proved
    result always replays; an unproved result says nothing.

    Rule order per reduction state: contract a 2-cycle, contract an even
    wheel, contract an embedded catalog base, triangular-rule terminal,
    then absorption of a vertex tried with backtracking under a budget.
    """
    if not G.is_connected():
        return CertifyResult(False)
    state = _State(G)
    counter = [budget]
    steps = _search(state, counter)
    if steps is None:
        return CertifyResult(False)
    cert = Certificate(tuple(steps))
    check = replay(G, cert)
    if not check.ok:
        raise AssertionError(f"certify produced invalid certificate: {check.message}")
    return CertifyResult(True, cert)


def _search(state: _State, counter: list[int]) -> list[Step] | None:
    steps: list[Step] = []
    while True:
        if counter[0] <= 0:
            return None
        counter[0] -= 1
        Q, reps = state.quotient()
        if Q.n == 1:
            steps.append(Step("done"))
            return steps

        pair_counts: dict[tuple[int, int], int] = {}
        for u, v in Q.edges:
            key = (min(u, v), max(u, v))
            pair_counts[key] = pair_counts.get(key, 0) + 1
        parallel = sorted(k for k, c in pair_counts.items() if c >= 2)
        if parallel:
            u, v = parallel[0]
            step = two_cycle_step(reps[u], reps[v])
            _must_apply(state, step)
            steps.append(step)
            continue

        found = find_even_wheel(Q)
        if found is not None:
            hub, rim = found
            step = wheel_step(reps[hub], tuple(reps[x] for x in rim))
            _must_apply(state, step)
            steps.append(step)
            continue

        placed = None
        for name in CERTIFIABLE_BASES:
            mapping = _embed_base(base_graph(name), Q)
            if mapping is not None:
                placed = base_step(name, tuple(reps[x] for x in mapping))
                break
        if placed is not None:
            _must_apply(state, placed)
            steps.append(placed)
            continue

        if is_triangularly_connected(Q) and min(Q.degrees()) >= 4:
            steps.append(Step("triangular"))
            return steps

        degs = Q.degrees()
        for v in range(Q.n):
            if degs[v] < 2 or Q.n == 1:
                continue
            branch = _clone(state)
            branch.delete_class(reps[v])
            rest = _search(branch, counter)
            if rest is not None:
                _copy_into(state, branch)
                return steps + [absorb_step(reps[v])] + rest
        return None


def _must_apply(state: _State, step: Step):
    err = _apply_step(state, step)
    if err:
        raise AssertionError(f"internal step rejected: {step.render()}: {err}")


def _clone(state: _State) -> _State:
    clone = _State.__new__(_State)
    clone.n = state.n
    clone.parent = list(state.parent)
    clone.alive = list(state.alive)
    clone.edges = list(state.edges)
    return clone


def _copy_into(dst: _State, src: _State):
    dst.parent = src.parent
    dst.alive = src.alive
    dst.edges = src.edges
