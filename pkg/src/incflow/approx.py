"""(1 + eps)-approximate incremental maximum flow.

Below the threshold ``mu`` the value is maintained exactly by a
:class:`~incflow.bounded.BoundedMaxFlow` run with cutoff ``mu + 1``. Once the
flow exceeds ``mu`` every further insertion is *stale*: it is only recorded,
and after ``ceil(eps * mu)`` stale insertions the maximum flow is recomputed
from scratch with Dinic's algorithm. A single unit edge raises the maximum
flow by at most one, so the estimate never falls more than ``eps * mu``
below the truth, which is at most a factor ``1 + eps`` once the flow is
above ``mu``.

``eps`` is held as an exact :class:`fractions.Fraction`; a float argument is
read through its shortest decimal repr, so ``0.1`` means exactly 1/10.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from numbers import Rational

from .bounded import BoundedMaxFlow
from .network import FlowNetwork
from .static import FlowResult, dinic_max_flow


def as_fraction(x) -> Fraction:
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x}")
        return Fraction(repr(x))
    return Fraction(str(x))


def suggested_mu(m_expected: int, eps) -> int:
    """``max(1, round(sqrt(m / eps)))``, computed exactly.

    This balances the two cost terms when the static solver is near-linear.
    Callers clamp the result to the vertex count.
    """
    if m_expected < 1:
        raise ValueError(f"expected insert count must be positive, got {m_expected}")
    e = as_fraction(eps)
    if e <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    r = Fraction(m_expected) / e
    k = math.isqrt(r.numerator // r.denominator)
    # round half up: k + 1 iff (k + 1/2)^2 <= r
    if (Fraction(2 * k + 1, 2)) ** 2 <= r:
        k += 1
    return max(1, k)


@dataclass
class FrameworkStats:
    inserts: int = 0
    forwarded: int = 0
    stale: int = 0
    rebuilds: int = 0
    static_arc_scans: int = 0
    bmf_queries: int = 0
    bmf: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


class ApproxMaxFlow:
    """Incremental (1 + eps)-approximate s-t maximum flow.

    ``value`` always satisfies ``value <= F* <= (1 + eps) * value`` where
    ``F*`` is the true maximum flow of every edge inserted so far; while
    ``F* <= mu`` it is exact.
    """

    def __init__(self, n: int, s: int, t: int, eps, mu: int):
        self.eps = as_fraction(eps)
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {eps}")
        if mu != int(mu) or mu < 0:
            raise ValueError(f"mu must be a non-negative integer, got {mu}")
        self.mu = int(mu)
        self.net = FlowNetwork(n, s, t)
        self.bmf = BoundedMaxFlow(n, s, t, self.mu + 1)
        self.F = 0
        self.tau = 0
        self.threshold = self.eps * self.mu
        self.last_rebuild: FlowResult | None = None
        self._stats = FrameworkStats()

    @property
    def value(self) -> int:
        return self.F

    @property
    def rebuild_count(self) -> int:
        return self._stats.rebuilds

    @property
    def rebuild_period(self) -> int:
        """Stale insertions between rebuilds, ``ceil(eps * mu)`` (at least 1)."""
        return max(1, math.ceil(self.threshold))

    def insert(self, u: int, v: int) -> None:
        st = self._stats
        self.net.insert_edge(u, v)
        st.inserts += 1
        st.bmf_queries += 1
        if self.bmf.value <= self.mu:
            self.bmf.insert(u, v)
            st.bmf_queries += 1
            self.F = self.bmf.value
            st.forwarded += 1
            return
        st.stale += 1
        self.tau += 1
        if self.tau >= self.threshold:
            self.rebuild()

    def rebuild(self) -> None:
        result = dinic_max_flow(self.net.snapshot())
        self.F = result.value
        self.last_rebuild = result
        self.tau = 0
        self._stats.rebuilds += 1
        self._stats.static_arc_scans += result.arc_scans

    def flow(self) -> bytes:
        """A feasible flow of value ``self.value`` on the current edge set.

        Insertions never invalidate an old flow, so the most recent witness
        (the bounded structure's flow, or the last rebuild) is padded with
        zeros for edges added since.
        """
        bits = self.last_rebuild.assignment if self.last_rebuild else self.bmf.flow()
        return bits + bytes(self.net.num_edges - len(bits))

    def stats(self) -> FrameworkStats:
        st = self._stats
        st.bmf = self.bmf.stats()
        return st
