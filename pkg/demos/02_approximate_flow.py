"""
(1 + eps)-approximate flow with periodic rebuilds
=================================================

Once the flow passes mu, insertions are only counted; every ceil(eps * mu)
of them trigger a static recomputation. The estimate stays within a factor
1 + eps of the true value throughout.
"""

from fractions import Fraction

from incflow import ApproxMaxFlow, FlowNetwork, dinic_max_flow, gen_workload, parse_stream

n, s, t, events = parse_stream(gen_workload("parallel-paths", seed=1, k=24, length=2))
eps, mu = Fraction(1, 4), 8
amf = ApproxMaxFlow(n, s, t, eps, mu)
truth = FlowNetwork(n, s, t)

for ev in events:
    if ev.kind != "a":
        continue
    amf.insert(ev.u, ev.v)
    truth.insert_edge(ev.u, ev.v)
    exact = dinic_max_flow(truth).value
    print(f"F={amf.value:3d}  F*={exact:3d}  tau={amf.tau}  rebuilds={amf.rebuild_count}")
    assert amf.value <= exact <= (1 + eps) * amf.value or exact == 0

print(amf.stats())
