"""Incremental single-source reachability over an insert-only arc set.

A tree rooted at the source holds exactly the vertices reachable so far.
When an arc ``u -> v`` arrives with ``u`` in the tree and ``v`` outside, ``v``
is attached under ``u`` and the arcs already stored at ``v`` are scanned in
turn. Every stored arc is therefore examined at most twice over the life of
the tree: once when it is inserted and once when its tail is attached.
"""

from __future__ import annotations

from typing import Any, Iterable


class ReachTree:
    """Reachability tree from ``root`` supporting arc insertion.

    Arcs carry an opaque ``label`` that is handed back by
    :meth:`extract_path`.

    ``update_calls`` counts arc examinations (one per tree-update attempt,
    including the scans of the initial search); ``initial_arcs`` and
    ``inserted_arcs`` count arcs supplied at construction and afterwards.
    """

    def __init__(self, n: int, root: int, arcs: Iterable[tuple[int, int, Any]] = ()):
        if not 0 <= root < n:
            raise ValueError(f"root {root} out of range for n={n}")
        self.n = n
        self.root = root
        # stored arcs per tail: parallel lists of heads and labels
        self._heads: list[list[int]] = [[] for _ in range(n)]
        self._labels: list[list[Any]] = [[] for _ in range(n)]
        self._in_tree = bytearray(n)
        self._parent = [-1] * n
        self._label: list[Any] = [None] * n
        self._in_tree[root] = 1
        self.update_calls = 0
        self.inserted_arcs = 0
        self.initial_arcs = 0

        heads, labels = self._heads, self._labels
        count = 0
        for u, v, label in arcs:
            heads[u].append(v)
            labels[u].append(label)
            count += 1
        self.initial_arcs = count
        self._spread([root])

    def _spread(self, frontier: list[int]) -> None:
        # Explicit work list in place of the recursive UpdateTree.
        in_tree, parent, lab = self._in_tree, self._parent, self._label
        heads, labels = self._heads, self._labels
        calls = 0
        while frontier:
            x = frontier.pop()
            calls += len(heads[x])
            for w, label in zip(heads[x], labels[x]):
                if not in_tree[w]:
                    in_tree[w] = 1
                    parent[w] = x
                    lab[w] = label
                    frontier.append(w)
        self.update_calls += calls

    def insert_arc(self, u: int, v: int, label: Any = None) -> None:
        self._heads[u].append(v)
        self._labels[u].append(label)
        self.inserted_arcs += 1
        self.update_calls += 1
        if self._in_tree[u] and not self._in_tree[v]:
            self._in_tree[v] = 1
            self._parent[v] = u
            self._label[v] = label
            self._spread([v])

    def reaches(self, v: int) -> bool:
        return bool(self._in_tree[v])

    def parent(self, v: int) -> int:
        """Parent of ``v`` in the tree, -1 for the root or unreached vertices."""
        return self._parent[v]

    def vertices(self) -> list[int]:
        return [v for v in range(self.n) if self._in_tree[v]]

    def extract_path(self, v: int) -> list[tuple[int, int, Any]]:
        """Tree path from the root to ``v`` as ``(u, w, label)`` triples."""
        if not self._in_tree[v]:
            raise KeyError(f"vertex {v} is not reachable from {self.root}")
        path = []
        while v != self.root:
            p = self._parent[v]
            path.append((p, v, self._label[v]))
            v = p
        path.reverse()
        return path
