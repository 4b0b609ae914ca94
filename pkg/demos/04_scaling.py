"""
Amortized cost as the stream grows
==================================

For each stream length m the threshold is sqrt(m / eps). Counted arc scans
per insert roughly double for every 4x increase in m; wall time follows
with some extra overhead on the larger graphs.
"""

from incflow.stream import bench

for row in bench(sizes=(2_000, 8_000, 32_000)):
    print(row)
