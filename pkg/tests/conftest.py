import random
from collections import deque
from itertools import product

import pytest

ACCEPTANCE_LINES = []


def min_cut_value(n, s, t, edges):
    """Brute-force minimum s-t cut: enumerate every vertex set S with s in S, t not in S.

    By max-flow/min-cut this equals the maximum flow; it shares no code with
    any augmenting-path solver. Exponential in n, keep n <= 14.
    """
    others = [v for v in range(n) if v not in (s, t)]
    best = len(edges)
    for bits in product((0, 1), repeat=len(others)):
        side = [False] * n
        side[s] = True
        for v, b in zip(others, bits):
            side[v] = bool(b)
        cut = sum(1 for u, v in edges if side[u] and not side[v])
        best = min(best, cut)
    return best


def bfs_reach(n, root, arcs):
    adj = [[] for _ in range(n)]
    for u, v in arcs:
        adj[u].append(v)
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def random_arcs(rng, n, m, loops=False):
    arcs = []
    while len(arcs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v or loops:
            arcs.append((u, v))
    return arcs


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
