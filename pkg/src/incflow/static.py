"""Exact static maximum flow on a snapshot of a unit-capacity multigraph.

``dinic_max_flow`` is the solver used for periodic rebuilds. ``edmonds_karp``
is deliberately plain and serves as the reference oracle in tests and in
verified replays. Both read a :class:`~incflow.network.Snapshot` (or any
network exposing ``snapshot()``) and never touch the live flow.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .network import Snapshot, check_flow


class InvalidFlowError(ValueError):
    """The assignment passed for certification is not a feasible flow."""


@dataclass
class FlowResult:
    value: int
    assignment: bytes
    arc_scans: int = 0


def _snapshot(net, s=None, t=None) -> Snapshot:
    snap = net if isinstance(net, Snapshot) else net.snapshot()
    if s is not None or t is not None:
        snap = snap._replace(
            source=snap.source if s is None else s,
            target=snap.target if t is None else t,
        )
    if snap.source == snap.target:
        raise ValueError("source and target must differ")
    return snap


def dinic_max_flow(net, s: int | None = None, t: int | None = None) -> FlowResult:
    """Dinic's blocking-flow algorithm specialised to unit capacities.

    Edge ``e`` owns residual arcs ``2e`` (along the edge) and ``2e + 1``
    (against it). Each phase builds BFS levels and then saturates a blocking
    flow with current-arc pointers, so a phase costs O(m) arc scans and
    there are O(sqrt(m)) phases.
    """
    snap = _snapshot(net, s, t)
    n, s, t = snap.n, snap.source, snap.target
    tails, heads = snap.tails, snap.heads
    m = len(tails)
    cap = bytearray(2 * m)
    to = [0] * (2 * m)
    adj: list[list[int]] = [[] for _ in range(n)]
    adj_to: list[list[int]] = [[] for _ in range(n)]  # adj_to[u][i] == to[adj[u][i]]
    for e in range(m):
        u, v = tails[e], heads[e]
        if u == v:
            continue
        a = 2 * e
        cap[a] = 1
        to[a] = v
        to[a + 1] = u
        adj[u].append(a)
        adj_to[u].append(v)
        adj[v].append(a + 1)
        adj_to[v].append(u)

    value = 0
    scans = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            lu = level[u] + 1
            scans += len(adj[u])
            for a, v in zip(adj[u], adj_to[u]):
                if cap[a] and level[v] < 0:
                    level[v] = lu
                    queue.append(v)
        if level[t] < 0:
            break

        it = [0] * n
        stack: list[int] = []
        u = s
        while True:
            if u == t:
                for a in stack:
                    cap[a] = 0
                    cap[a ^ 1] = 1
                value += 1
                stack.clear()
                u = s
                continue
            arcs = adj[u]
            ends = adj_to[u]
            i = start = it[u]
            k = len(arcs)
            want = level[u] + 1
            while i < k:
                if cap[arcs[i]] and level[ends[i]] == want:
                    break
                i += 1
            scans += min(i + 1, k) - start
            it[u] = i
            if i < k:
                a = arcs[i]
                stack.append(a)
                u = to[a]
                continue
            # dead end: prune u from this phase and retreat
            level[u] = -1
            if not stack:
                break
            a = stack.pop()
            u = to[a ^ 1]
            it[u] += 1

    assignment = bytes(cap[2 * e + 1] for e in range(m))
    return FlowResult(value, assignment, scans)


def edmonds_karp(
    net, s: int | None = None, t: int | None = None, initial: Sequence[int] | None = None
) -> FlowResult:
    """Shortest augmenting paths, one BFS per unit of flow.

    ``initial`` optionally supplies a feasible starting flow (for instance
    the maximum flow of a prefix of the edge list); the result is still an
    exact maximum flow of the whole snapshot.
    """
    snap = _snapshot(net, s, t)
    n, s, t = snap.n, snap.source, snap.target
    tails, heads = snap.tails, snap.heads
    m = len(tails)
    flow = [0] * m
    if initial is not None:
        flow[: len(initial)] = list(initial)
    out: list[list[int]] = [[] for _ in range(n)]
    inc: list[list[int]] = [[] for _ in range(n)]
    for e in range(m):
        if tails[e] != heads[e]:
            out[tails[e]].append(e)
            inc[heads[e]].append(e)
    value = sum(flow[e] for e in out[s]) - sum(flow[e] for e in inc[s])

    scans = 0
    while True:
        via = [None] * n  # (edge, pushed forward?) used to reach each vertex
        seen = [False] * n
        seen[s] = True
        queue = deque([s])
        while queue and not seen[t]:
            u = queue.popleft()
            for e in out[u]:
                scans += 1
                v = heads[e]
                if not flow[e] and not seen[v]:
                    seen[v] = True
                    via[v] = (e, True)
                    queue.append(v)
            for e in inc[u]:
                scans += 1
                v = tails[e]
                if flow[e] and not seen[v]:
                    seen[v] = True
                    via[v] = (e, False)
                    queue.append(v)
        if not seen[t]:
            break
        v = t
        while v != s:
            e, fwd = via[v]
            flow[e] = 1 if fwd else 0
            v = tails[e] if fwd else heads[e]
        value += 1
    return FlowResult(value, bytes(flow), scans)


def residual_reaches(snap: Snapshot, bits: Sequence[int]) -> bool:
    """Whether the target is reachable from the source in the residual graph."""
    n, s, t = snap.n, snap.source, snap.target
    adj: list[list[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(zip(snap.tails, snap.heads)):
        if u == v:
            continue
        if bits[e]:
            adj[v].append(u)
        else:
            adj[u].append(v)
    seen = bytearray(n)
    seen[s] = 1
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                if v == t:
                    return True
                seen[v] = 1
                queue.append(v)
    return False


def verify_optimal(net, assignment: Sequence[int] | None = None) -> bool:
    """Certify a flow as maximum: no s-t path may remain in its residual graph.

    Without ``assignment`` the live flow of ``net`` is checked. Infeasible
    assignments raise :class:`InvalidFlowError` rather than returning False.
    """
    if assignment is None:
        assignment = net.flows()
    snap = _snapshot(net)
    report = check_flow(snap, assignment)
    if not report.ok:
        raise InvalidFlowError("; ".join(f"{v.kind} at {v.where}: {v.detail}" for v in report.violations))
    return not residual_reaches(snap, assignment)
