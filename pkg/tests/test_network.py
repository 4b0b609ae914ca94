import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from incflow.network import BACKWARD, FORWARD, FlowNetwork, InvalidPathError, ResidualArc
from incflow.static import edmonds_karp

from conftest import min_cut_value


def test_new_network():
    net = FlowNetwork(2, 0, 1)
    assert net.flow_value() == 0
    assert net.num_edges == 0
    assert FlowNetwork(5, 4, 0).flow_value() == 0


@pytest.mark.parametrize("n,s,t", [(1, 0, 0), (3, 1, 1), (3, 0, 3), (3, -1, 2), (0, 0, 0)])
def test_new_network_rejects(n, s, t):
    with pytest.raises(ValueError):
        FlowNetwork(n, s, t)


def test_insert_parallel_and_self_loop():
    net = FlowNetwork(3, 0, 1)
    assert net.insert_edge(0, 1) == 0
    assert net.insert_edge(0, 1) == 1
    loop = net.insert_edge(2, 2)
    assert net.num_edges == 3
    assert net.is_self_loop(loop)
    assert net.residual_arc(loop) is None
    assert all(a.edge != loop for a in net.residual_out(2))
    with pytest.raises(ValueError):
        net.set_flow(loop, 1)
    with pytest.raises(ValueError):
        net.insert_edge(0, 3)


def test_residual_out_definition():
    s, a, t = 0, 1, 2
    net = FlowNetwork(3, s, t)
    e = net.insert_edge(s, a)
    assert net.residual_out(s) == [ResidualArc(s, a, e, FORWARD)]
    net.set_flow(e, 1)
    assert ResidualArc(a, s, e, BACKWARD) in net.residual_out(a)
    assert net.residual_out(s) == []
    f = net.insert_edge(a, t)
    net.set_flow(f, 1)
    # (s,a) and (a,t) both saturated: a only points back to s
    assert net.residual_out(a) == [ResidualArc(a, s, e, BACKWARD)]


def _backward_instance():
    s, a, b, t = 0, 1, 2, 3
    net = FlowNetwork(4, s, t)
    sa = net.insert_edge(s, a)
    ab = net.insert_edge(a, b)
    bt = net.insert_edge(b, t)
    net.augment([ResidualArc(s, a, sa, FORWARD), ResidualArc(a, b, ab, FORWARD), ResidualArc(b, t, bt, FORWARD)])
    sb = net.insert_edge(s, b)
    at = net.insert_edge(a, t)
    return net, (sa, ab, bt, sb, at)


def test_augment_through_backward_arc():
    net, (sa, ab, bt, sb, at) = _backward_instance()
    assert net.flow_value() == 1
    s, a, b, t = 0, 1, 2, 3
    net.augment([ResidualArc(s, b, sb, FORWARD), ResidualArc(b, a, ab, BACKWARD), ResidualArc(a, t, at, FORWARD)])
    assert net.flow_value() == 2
    assert net.flow(ab) == 0
    assert [net.flow(e) for e in (sa, bt, sb, at)] == [1, 1, 1, 1]
    assert net.check_valid().ok
    # independent oracle: minimum cut of the five edges
    assert min_cut_value(4, s, t, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]) == 2


def test_augment_single_and_disjoint():
    net = FlowNetwork(2, 0, 1)
    e = net.insert_edge(0, 1)
    net.augment([ResidualArc(0, 1, e, FORWARD)])
    assert net.flow_value() == 1

    net = FlowNetwork(4, 0, 3)
    sa, at, sb, bt = (net.insert_edge(*x) for x in [(0, 1), (1, 3), (0, 2), (2, 3)])
    net.augment([ResidualArc(0, 1, sa, FORWARD), ResidualArc(1, 3, at, FORWARD)])
    net.augment([ResidualArc(0, 2, sb, FORWARD), ResidualArc(2, 3, bt, FORWARD)])
    assert net.flow_value() == 2


@pytest.mark.parametrize(
    "path,msg",
    [
        ([], "empty"),
        ([ResidualArc(1, 3, 1, FORWARD)], "source"),
        ([ResidualArc(0, 1, 0, FORWARD)], "target"),
        ([ResidualArc(0, 1, 0, FORWARD), ResidualArc(2, 3, 3, FORWARD)], "expected"),
        ([ResidualArc(0, 1, 0, BACKWARD), ResidualArc(1, 3, 1, FORWARD)], "disagrees"),
        ([ResidualArc(0, 2, 1, FORWARD), ResidualArc(2, 3, 3, FORWARD)], "disagrees"),
    ],
)
def test_augment_rejects(path, msg):
    net = FlowNetwork(4, 0, 3)
    for u, v in [(0, 1), (1, 3), (0, 2), (2, 3)]:
        net.insert_edge(u, v)
    with pytest.raises(InvalidPathError, match=msg):
        net.augment(path)
    assert net.flow_value() == 0
    assert net.flows() == bytes(4)


def test_augment_rejects_repeated_vertex():
    net = FlowNetwork(4, 0, 3)
    e0 = net.insert_edge(0, 1)
    e1 = net.insert_edge(1, 0)
    e2 = net.insert_edge(0, 3)
    path = [ResidualArc(0, 1, e0, FORWARD), ResidualArc(1, 0, e1, FORWARD), ResidualArc(0, 3, e2, FORWARD)]
    with pytest.raises(InvalidPathError, match="repeated"):
        net.augment(path)


def test_check_valid_reports_vertex():
    assert FlowNetwork(3, 0, 2).check_valid().ok
    net = FlowNetwork(4, 0, 3)
    e = net.insert_edge(1, 2)
    net.insert_edge(2, 1)
    net.set_flow(e, 1)
    report = net.check_valid()
    assert not report.ok
    assert {(v.kind, v.where) for v in report.violations} == {("conservation", 1), ("conservation", 2)}


def test_flow_value_matches_oracle_on_random_instance(rng):
    from conftest import random_arcs

    n, s, t = 8, 0, 7
    arcs = random_arcs(rng, n, 20)
    net = FlowNetwork(n, s, t)
    for u, v in arcs:
        net.insert_edge(u, v)
    net.load_flow(edmonds_karp(net).assignment)
    assert net.check_valid().ok
    assert net.flow_value() == min_cut_value(n, s, t, arcs)


ops = st.lists(
    st.tuples(st.sampled_from(["edge", "flip"]), st.integers(0, 5), st.integers(0, 5)),
    max_size=40,
)


@settings(max_examples=200, deadline=None)
@given(ops)
def test_residual_index_matches_recompute(seq):
    net = FlowNetwork(6, 0, 5)
    for op, x, y in seq:
        if op == "edge":
            net.insert_edge(x, y)
        elif net.num_edges:
            e = (x * 7 + y) % net.num_edges
            if not net.is_self_loop(e):
                net.set_flow(e, 1 - net.flow(e))
        assert [sorted(r) for r in net.residual_index()] == [sorted(r) for r in net.recompute_residual_index()]
        out_minus_in = sum(net.flow(e) for e in net.out_edges(0) if not net.is_self_loop(e)) - sum(
            net.flow(e) for e in net.in_edges(0) if not net.is_self_loop(e)
        )
        assert net.flow_value() == out_minus_in


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=25))
def test_augmenting_with_shortest_paths_keeps_invariants(arcs):
    net = FlowNetwork(6, 0, 5)
    for u, v in arcs:
        before = net.flow_value()
        net.insert_edge(u, v)
        assert net.flow_value() == before
        # augment along BFS paths in the maintained residual graph
        while True:
            path = _bfs_path(net)
            if path is None:
                break
            before = net.flow_value()
            net.augment(path)
            assert net.flow_value() == before + 1
            assert net.check_valid().ok
    assert net.flow_value() == min_cut_value(6, 0, 5, arcs)


def _bfs_path(net):
    from collections import deque

    via = {net.source: None}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for arc in net.residual_out(u):
            if arc.dst not in via:
                via[arc.dst] = arc
                if arc.dst == net.target:
                    path = []
                    v = arc.dst
                    while via[v] is not None:
                        path.append(via[v])
                        v = via[v].src
                    return path[::-1]
                queue.append(arc.dst)
    return None
