"""Directed unit-capacity multigraph carrying an integral s-t flow.

Every edge has capacity one, so a flow is one bit per edge. The residual
graph is not stored as a separate object: each edge contributes exactly one
residual arc, ``tail -> head`` while its flow bit is 0 and ``head -> tail``
once it is saturated. A per-vertex index of residual out-arcs is kept in
sync with the flow bits so that path searches never rebuild it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

FORWARD = "forward"
BACKWARD = "backward"


class InvalidPathError(ValueError):
    """Raised when a path handed to :meth:`FlowNetwork.augment` is not augmenting."""


class ResidualArc(NamedTuple):
    src: int
    dst: int
    edge: int
    kind: str  # FORWARD or BACKWARD


class Snapshot(NamedTuple):
    """Immutable copy of the edge multiset, consumed by the static solvers."""

    n: int
    source: int
    target: int
    tails: tuple
    heads: tuple


@dataclass(frozen=True)
class Violation:
    kind: str  # "capacity" or "conservation"
    where: int  # edge id for capacity, vertex id for conservation
    detail: str


@dataclass
class ValidityReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


class FlowNetwork:
    """Growable unit-capacity multigraph on the fixed vertex set ``range(n)``.

    Parallel edges are distinct edges. Self-loops are accepted but never
    appear in the residual graph and never carry flow.
    """

    def __init__(self, n: int, source: int, target: int):
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        for name, x in (("source", source), ("target", target)):
            if not 0 <= x < n:
                raise ValueError(f"{name} {x} out of range for n={n}")
        if source == target:
            raise ValueError("source and target must differ")
        self.n = n
        self.source = source
        self.target = target
        self._tail: list[int] = []
        self._head: list[int] = []
        self._flow = bytearray()
        self._out: list[list[int]] = [[] for _ in range(n)]
        self._in: list[list[int]] = [[] for _ in range(n)]
        # residual out-arcs per vertex, as an insertion-ordered set of edge ids
        self._res: list[dict[int, None]] = [{} for _ in range(n)]
        self._value = 0

    def __repr__(self) -> str:
        return (
            f"FlowNetwork(n={self.n}, s={self.source}, t={self.target}, "
            f"edges={len(self._tail)}, value={self._value})"
        )

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- structure -----------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self._tail)

    def insert_edge(self, u: int, v: int) -> int:
        """Append the edge ``(u, v)`` with flow 0 and return its id."""
        self._check_vertex(u)
        self._check_vertex(v)
        e = len(self._tail)
        self._tail.append(u)
        self._head.append(v)
        self._flow.append(0)
        self._out[u].append(e)
        self._in[v].append(e)
        if u != v:
            self._res[u][e] = None
        return e

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._tail[e], self._head[e]

    def is_self_loop(self, e: int) -> bool:
        return self._tail[e] == self._head[e]

    def flow(self, e: int) -> int:
        return self._flow[e]

    def flows(self) -> bytes:
        return bytes(self._flow)

    def out_edges(self, v: int) -> Sequence[int]:
        return self._out[v]

    def in_edges(self, v: int) -> Sequence[int]:
        return self._in[v]

    def snapshot(self) -> Snapshot:
        return Snapshot(self.n, self.source, self.target, tuple(self._tail), tuple(self._head))

    # -- residual graph ------------------------------------------------

    def residual_arc(self, e: int) -> ResidualArc | None:
        """The single residual arc contributed by edge ``e`` (None for self-loops)."""
        u, v = self._tail[e], self._head[e]
        if u == v:
            return None
        if self._flow[e]:
            return ResidualArc(v, u, e, BACKWARD)
        return ResidualArc(u, v, e, FORWARD)

    def residual_out(self, v: int) -> list[ResidualArc]:
        self._check_vertex(v)
        arcs = []
        for e in self._res[v]:
            if self._flow[e]:
                arcs.append(ResidualArc(v, self._tail[e], e, BACKWARD))
            else:
                arcs.append(ResidualArc(v, self._head[e], e, FORWARD))
        return arcs

    def residual_arcs(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(src, dst, edge)`` for every residual arc, in edge order."""
        tail, head, flow = self._tail, self._head, self._flow
        for e in range(len(tail)):
            u, v = tail[e], head[e]
            if u == v:
                continue
            if flow[e]:
                yield v, u, e
            else:
                yield u, v, e

    def residual_index(self) -> list[list[int]]:
        """The incrementally maintained residual adjacency, as edge-id lists."""
        return [list(r) for r in self._res]

    def recompute_residual_index(self) -> list[list[int]]:
        """Residual adjacency rebuilt from edges and flow bits alone."""
        res: list[list[int]] = [[] for _ in range(self.n)]
        for src, _, e in self.residual_arcs():
            res[src].append(e)
        return res

    # -- flow ------------------------------------------------------------

    def _flip(self, e: int, bit: int) -> None:
        u, v = self._tail[e], self._head[e]
        old = self._flow[e]
        if old == bit:
            return
        self._flow[e] = bit
        if u == v:
            return
        src, dst = (u, v) if old == 0 else (v, u)
        del self._res[src][e]
        self._res[dst][e] = None
        s = self.source
        delta = 1 if bit else -1
        if u == s:
            self._value += delta
        if v == s:
            self._value -= delta

    def set_flow(self, e: int, bit: int) -> None:
        """Overwrite one flow bit without any validity check.

        Intended for tests and for loading externally computed flows; the
        result may violate conservation, see :meth:`check_valid`.
        """
        if bit not in (0, 1):
            raise ValueError("flow bits are 0 or 1")
        if bit and self.is_self_loop(e):
            raise ValueError(f"self-loop {e} cannot carry flow")
        self._flip(e, bit)

    def load_flow(self, bits: Iterable[int]) -> None:
        """Replace the whole flow assignment; missing trailing bits mean 0."""
        bits = list(bits)
        if len(bits) > self.num_edges:
            raise ValueError("assignment longer than edge list")
        bits += [0] * (self.num_edges - len(bits))
        for e, b in enumerate(bits):
            self.set_flow(e, b)

    def flow_value(self) -> int:
        """Outflow minus inflow at the source."""
        return self._value

    def augment(self, path: Sequence[ResidualArc]) -> None:
        """Push one unit along a simple s-t path of the residual graph."""
        if not path:
            raise InvalidPathError("empty path")
        if path[0].src != self.source:
            raise InvalidPathError(f"path starts at {path[0].src}, not the source")
        if path[-1].dst != self.target:
            raise InvalidPathError(f"path ends at {path[-1].dst}, not the target")
        seen = {self.source}
        prev = self.source
        for i, arc in enumerate(path):
            if arc.src != prev:
                raise InvalidPathError(f"arc {i} starts at {arc.src}, expected {prev}")
            if arc.dst in seen:
                raise InvalidPathError(f"vertex {arc.dst} repeated at arc {i}")
            seen.add(arc.dst)
            if self.residual_arc(arc.edge) != arc:
                raise InvalidPathError(
                    f"arc {i} {tuple(arc)} disagrees with edge {arc.edge} "
                    f"(flow {self._flow[arc.edge]})"
                )
            prev = arc.dst
        before = self._value
        for arc in path:
            self._flip(arc.edge, 1 if arc.kind == FORWARD else 0)
        assert self._value == before + 1

    def check_valid(self) -> ValidityReport:
        """Check capacity and conservation of the current flow bits."""
        return check_flow(self.snapshot(), self._flow)


def check_flow(snap: Snapshot, bits: Sequence[int]) -> ValidityReport:
    """Validate an arbitrary assignment against a snapshot's edges."""
    report = ValidityReport()
    if len(bits) != len(snap.tails):
        report.violations.append(
            Violation("capacity", -1, f"assignment has {len(bits)} bits for {len(snap.tails)} edges")
        )
        return report
    balance = [0] * snap.n
    for e, b in enumerate(bits):
        u, v = snap.tails[e], snap.heads[e]
        if b not in (0, 1):
            report.violations.append(Violation("capacity", e, f"flow {b} outside [0, 1]"))
            continue
        if b and u == v:
            report.violations.append(Violation("capacity", e, "self-loop carries flow"))
            continue
        balance[u] -= b
        balance[v] += b
    for x in range(snap.n):
        if x in (snap.source, snap.target):
            continue
        if balance[x]:
            report.violations.append(
                Violation("conservation", x, f"inflow - outflow = {balance[x]}")
            )
    return report
