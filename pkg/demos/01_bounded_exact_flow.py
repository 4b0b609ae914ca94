"""
Exact incremental max flow below a cutoff
=========================================

Feed edges one at a time into the bounded structure and watch it find
augmenting paths in the reachability tree. The fifth edge only helps
through a backward arc, which undoes flow on (a, b).
"""

from incflow import BoundedMaxFlow

s, a, b, t = 0, 1, 2, 3
bmf = BoundedMaxFlow(4, s, t, mu=5)

for u, v in [(s, a), (a, b), (b, t), (s, b), (a, t)]:
    bmf.insert(u, v)
    print(f"insert ({u},{v}) -> value {bmf.value}, flow bits {list(bmf.flow())}")

# Each augmentation closes one round of the reachability tree.
for i, ep in enumerate(bmf.epochs):
    print(f"round {i}: {ep.initial_arcs} initial arcs, {ep.inserted_arcs} inserted, {ep.update_calls} tree updates")

###############################################################################
# With a small cutoff the structure saturates at mu + 1 and ignores the rest.

capped = BoundedMaxFlow(2, 0, 1, mu=1)
for _ in range(3):
    capped.insert(0, 1)
print("capped value", capped.value, "saturated", capped.saturated)
