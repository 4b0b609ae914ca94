"""Exact incremental maximum flow while the value stays within a cutoff.

Incremental Ford-Fulkerson: a :class:`~incflow.reach.ReachTree` over the
residual graph answers "is the target reachable yet?" after each insertion.
When it is, the tree path is an augmenting path; one unit is pushed and a
fresh tree is built for the next round. A round costs O(m) arc scans and
there are at most ``mu + 1`` rounds, for O(m * mu) total work.

Once the value exceeds ``mu`` the structure is *saturated*: it reports
``mu + 1`` forever and ignores further insertions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .network import BACKWARD, FORWARD, FlowNetwork, ResidualArc
from .reach import ReachTree


@dataclass
class BMFCounters:
    arc_scans: int = 0  # residual arcs enumerated, examined by the tree, or augmented along
    tree_rebuilds: int = 0
    update_calls: int = 0  # tree-update attempts, summed over all rounds
    augmentations: int = 0
    path_arcs: int = 0
    ignored_inserts: int = 0


@dataclass
class Epoch:
    """Tree accounting for one round, recorded when the round closes."""

    initial_arcs: int
    inserted_arcs: int
    update_calls: int


class BoundedMaxFlow:
    """Maintain the exact s-t max flow of an insert-only graph up to ``mu``.

    >>> bmf = BoundedMaxFlow(2, 0, 1, mu=5)
    >>> bmf.insert(0, 1)
    >>> bmf.value
    1
    """

    def __init__(self, n: int, s: int, t: int, mu: int):
        if mu < 0:
            raise ValueError(f"mu must be non-negative, got {mu}")
        self.net = FlowNetwork(n, s, t)
        self.mu = int(mu)
        self.value = 0
        self.counters = BMFCounters()
        self.epochs: list[Epoch] = []
        self._tree = self._new_tree()

    @property
    def saturated(self) -> bool:
        return self.value > self.mu

    @property
    def round_count(self) -> int:
        return self.value

    def _new_tree(self) -> ReachTree:
        net = self.net
        arcs = list(net.residual_arcs())
        self.counters.arc_scans += len(arcs)
        return ReachTree(net.n, net.source, arcs)

    def _close_epoch(self) -> None:
        tree = self._tree
        self.epochs.append(Epoch(tree.initial_arcs, tree.inserted_arcs, tree.update_calls))
        self.counters.update_calls += tree.update_calls
        self.counters.arc_scans += tree.update_calls

    def insert(self, u: int, v: int) -> None:
        if self.saturated:
            self.counters.ignored_inserts += 1
            return
        net = self.net
        e = net.insert_edge(u, v)
        if u != v:
            self._tree.insert_arc(u, v, e)
        t = net.target
        while not self.saturated and self._tree.reaches(t):
            self._augment()

    def _augment(self) -> None:
        net = self.net
        path = []
        for x, y, e in self._tree.extract_path(net.target):
            kind = BACKWARD if net.flow(e) else FORWARD
            path.append(ResidualArc(x, y, e, kind))
        net.augment(path)
        self.value += 1
        self.counters.augmentations += 1
        self.counters.path_arcs += len(path)
        self.counters.arc_scans += len(path)
        self._close_epoch()
        self._tree = self._new_tree()
        self.counters.tree_rebuilds += 1

    def flow(self) -> bytes:
        """Current per-edge flow bits (only edges accepted before saturation)."""
        return self.net.flows()

    def tree(self) -> ReachTree:
        return self._tree

    def current_epoch(self) -> Epoch:
        tree = self._tree
        return Epoch(tree.initial_arcs, tree.inserted_arcs, tree.update_calls)

    def total_update_calls(self) -> int:
        return self.counters.update_calls + self._tree.update_calls

    def total_arc_scans(self) -> int:
        """Arc scans including the still-open round."""
        return self.counters.arc_scans + self._tree.update_calls

    def stats(self) -> dict:
        c = self.counters
        return {
            "arc_scans": self.total_arc_scans(),
            "tree_rebuilds": c.tree_rebuilds,
            "update_calls": self.total_update_calls(),
            "augmentations": c.augmentations,
            "path_arcs": c.path_arcs,
            "ignored_inserts": c.ignored_inserts,
        }
