import math
import random
from fractions import Fraction

import pytest

from incflow.approx import ApproxMaxFlow, as_fraction, suggested_mu
from incflow.network import FlowNetwork, check_flow
from incflow.static import edmonds_karp

from conftest import random_arcs


def test_init_and_guards():
    amf = ApproxMaxFlow(5, 0, 4, eps=0.5, mu=4)
    assert amf.value == 0
    assert amf.bmf.mu == 5
    with pytest.raises(ValueError):
        ApproxMaxFlow(5, 0, 4, eps=0, mu=4)
    with pytest.raises(ValueError):
        ApproxMaxFlow(5, 0, 4, eps=-1, mu=4)
    with pytest.raises(ValueError):
        ApproxMaxFlow(5, 0, 4, eps=1, mu=2.5)


def test_parallel_edges_trace():
    # mu=2, eps=1: three forwarded inserts, then stale ones rebuilding every
    # ceil(eps*mu) = 2 of them.
    amf = ApproxMaxFlow(2, 0, 1, eps=1, mu=2)
    values = []
    for _ in range(6):
        amf.insert(0, 1)
        values.append(amf.value)
    assert values == [1, 2, 3, 3, 5, 5]
    assert amf.rebuild_count == 1
    st = amf.stats()
    assert (st.inserts, st.forwarded, st.stale) == (6, 3, 3)
    assert Fraction(6, 5) <= 1 + amf.eps


def test_small_threshold_rebuilds_every_stale_insert():
    amf = ApproxMaxFlow(2, 0, 1, eps=0.1, mu=5)
    for k in range(1, 12):
        amf.insert(0, 1)
        assert amf.value == k
    assert amf.rebuild_count == 11 - 6


def test_eps_is_exact():
    # 0.1 * 30 is 3.0000000000000004 in binary floating point
    amf = ApproxMaxFlow(31, 0, 30, eps=0.1, mu=30)
    assert amf.threshold == 3 and amf.rebuild_period == 3
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction("0.25") == Fraction(1, 4)


@pytest.mark.parametrize(
    "m,eps,expected", [(10_000, 1, 100), (10_000, 0.01, 1000), (1, 1, 1), (300, 1, 17), (600, 1, 24), (3000, 1, 55)]
)
def test_suggested_mu(m, eps, expected):
    assert suggested_mu(m, eps) == expected
    assert expected == max(1, round(math.sqrt(m / eps)))


@pytest.mark.parametrize("m,eps", [(0, 1), (10, 0), (10, -0.5)])
def test_suggested_mu_rejects(m, eps):
    with pytest.raises(ValueError):
        suggested_mu(m, eps)


def _sweep(seed, n, m, eps, mu):
    rng = random.Random(seed)
    arcs = random_arcs(rng, n, m)
    amf = ApproxMaxFlow(n, 0, n - 1, eps, mu)
    oracle = FlowNetwork(n, 0, n - 1)
    bits = b""
    rebuilds = 0
    for u, v in arcs:
        amf.insert(u, v)
        oracle.insert_edge(u, v)
        res = edmonds_karp(oracle, initial=bits)
        bits, truth = res.assignment, res.value
        F = amf.value
        assert F <= truth <= (1 + amf.eps) * F or truth == F == 0
        if truth <= mu:
            assert F == truth
        if amf.rebuild_count != rebuilds:
            rebuilds = amf.rebuild_count
            assert F == truth
        flow = amf.flow()
        assert check_flow(oracle.snapshot(), flow).ok
        assert _value(oracle.snapshot(), flow) == F
        assert amf.tau < amf.threshold + 1
    return amf


def _value(snap, bits):
    s = snap.source
    return sum(b for b, u, v in zip(bits, snap.tails, snap.heads) if u == s and v != s) - sum(
        b for b, u, v in zip(bits, snap.tails, snap.heads) if v == s and u != s
    )


@pytest.mark.parametrize("seed", range(25))
def test_sandwich_with_small_mu(seed):
    amf = _sweep(seed, 30, 300, Fraction(1, 5), 8)
    st = amf.stats()
    assert st.inserts == st.forwarded + st.stale
    assert st.rebuilds <= Fraction(st.stale) / (amf.eps * amf.mu) + 1


@pytest.mark.parametrize("mu", [0, 1, 3])
@pytest.mark.parametrize("eps", [Fraction(1, 10), Fraction(1, 2), 1, 3])
def test_sandwich_extremes(mu, eps):
    _sweep(mu * 10 + int(eps * 10), 8, 80, eps, mu)


def test_flow_unchanged_by_stale_inserts():
    amf = ApproxMaxFlow(2, 0, 1, eps=1, mu=2)
    for _ in range(5):
        amf.insert(0, 1)
    witness = amf.flow()
    amf.insert(0, 1)
    assert amf.flow()[:5] == witness and amf.flow()[5] == 0
