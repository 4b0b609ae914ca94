"""Insertion/query streams: parsing, generation, replay and reporting.

Stream format, one event per line, LF endings, 0-based decimal ids::

    p inc <n> <s> <t>     header, exactly once, before any event
    a <u> <v>             insert the directed edge u -> v
    q                     query the current flow value
    c <anything>          comment

Replay prints one line per ``q``: the value, or with verification
``<value> <exact> <ratio>`` where ratio is exact/value to six decimals.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .approx import ApproxMaxFlow, as_fraction, suggested_mu
from .bounded import BoundedMaxFlow
from .network import FlowNetwork
from .static import dinic_max_flow, edmonds_karp

STATS_SCHEMA = "incflow.stats/1"


class StreamError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class VerificationError(AssertionError):
    def __init__(self, index: int, msg: str):
        super().__init__(f"event {index}: {msg}")
        self.index = index


class Header(NamedTuple):
    n: int
    s: int
    t: int


class Event(NamedTuple):
    kind: str  # "a", "q" or "c"
    u: int = -1
    v: int = -1
    text: str = ""


def _ints(fields, lineno):
    try:
        return [int(x, 10) for x in fields]
    except ValueError:
        raise StreamError(lineno, f"expected decimal integers, got {' '.join(fields)!r}") from None


def iter_stream(lines: Iterable[str]) -> Iterator[Header | Event]:
    """Lazily parse a stream; yields the :class:`Header` first, then events.

    Suitable for live input: each event is yielded as soon as its line is read.
    """
    header = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        if line.endswith("\r"):
            raise StreamError(lineno, "CR line endings are not allowed")
        if not line.strip():
            raise StreamError(lineno, "empty line")
        fields = line.split()
        tag = fields[0]
        if tag == "c":
            continue
        if tag == "p":
            if header is not None:
                raise StreamError(lineno, "duplicate header")
            if len(fields) != 5 or fields[1] != "inc":
                raise StreamError(lineno, "header must read 'p inc <n> <s> <t>'")
            n, s, t = _ints(fields[2:], lineno)
            if n < 1 or not (0 <= s < n and 0 <= t < n):
                raise StreamError(lineno, f"terminals ({s}, {t}) out of range for n={n}")
            if s == t:
                raise StreamError(lineno, "source and target must differ")
            header = Header(n, s, t)
            yield header
            continue
        if header is None:
            raise StreamError(lineno, "event before 'p inc' header")
        if tag == "a":
            if len(fields) != 3:
                raise StreamError(lineno, "insert must read 'a <u> <v>'")
            u, v = _ints(fields[1:], lineno)
            for x in (u, v):
                if not 0 <= x < header.n:
                    raise StreamError(lineno, f"vertex {x} out of range for n={header.n}")
            yield Event("a", u, v)
        elif tag == "q":
            if len(fields) != 1:
                raise StreamError(lineno, "query takes no arguments")
            yield Event("q")
        else:
            raise StreamError(lineno, f"unknown event {tag!r}")
    if header is None:
        raise StreamError(0, "missing 'p inc' header")


def parse_stream(text: str) -> tuple[int, int, int, list[Event]]:
    """Parse a whole stream into ``(n, s, t, events)``; comments are dropped."""
    items = iter_stream(text.splitlines(keepends=True))
    n, s, t = next(items)
    return n, s, t, list(items)


def format_stream(n: int, s: int, t: int, events: Iterable[Event]) -> str:
    out = [f"p inc {n} {s} {t}"]
    for ev in events:
        if ev.kind == "a":
            out.append(f"a {ev.u} {ev.v}")
        elif ev.kind == "q":
            out.append("q")
        else:
            out.append(f"c {ev.text}".rstrip())
    return "\n".join(out) + "\n"


# -- workload generators -------------------------------------------------


def gnm_edges(n: int, m: int, rng: random.Random) -> list[tuple[int, int]]:
    """``m`` arcs drawn uniformly from ordered pairs u != v (repeats allowed)."""
    if n < 2 or m < 0:
        raise ValueError(f"gnm needs n >= 2 and m >= 0, got n={n}, m={m}")
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        edges.append((u, v))
    return edges


def layered_edges(
    width: int, depth: int, m: int | None, rng: random.Random
) -> tuple[int, list[tuple[int, int]]]:
    """Layered DAG with max flow exactly ``width``.

    Vertex 0 is the source and ``n - 1`` the target; layer ``i`` holds
    vertices ``1 + i*width .. (i+1)*width``. The source feeds each first-layer
    vertex once and each last-layer vertex feeds the target once, so the cut
    at the source has ``width`` edges; the identity matching between
    consecutive layers supplies ``width`` disjoint paths. With ``m`` given,
    random forward edges between consecutive layers top the count up to
    ``m``. Edges are returned in shuffled order.
    """
    if width < 1 or depth < 1:
        raise ValueError(f"layered needs width, depth >= 1, got {width}, {depth}")
    n = width * depth + 2
    s, t = 0, n - 1
    layer = [range(1 + i * width, 1 + (i + 1) * width) for i in range(depth)]
    edges = [(s, v) for v in layer[0]] + [(u, t) for u in layer[-1]]
    for i in range(depth - 1):
        edges += list(zip(layer[i], layer[i + 1]))
    if m is not None:
        if m < len(edges):
            raise ValueError(f"m={m} below the {len(edges)} skeleton edges")
        if depth < 2 and m > len(edges):
            raise ValueError("extra edges need depth >= 2")
        for _ in range(m - len(edges)):
            i = rng.randrange(depth - 1)
            edges.append((rng.choice(layer[i]), rng.choice(layer[i + 1])))
    rng.shuffle(edges)
    return n, edges


def parallel_paths_edges(k: int, length: int, rng: random.Random) -> tuple[int, list[tuple[int, int]]]:
    """``k`` internally disjoint s-t paths of ``length`` edges each, shuffled."""
    if k < 1 or length < 1:
        raise ValueError(f"parallel-paths needs k, length >= 1, got {k}, {length}")
    n = 2 + k * (length - 1)
    s, t = 0, n - 1
    edges = []
    for p in range(k):
        inner = [1 + p * (length - 1) + j for j in range(length - 1)]
        chain = [s] + inner + [t]
        edges += list(zip(chain, chain[1:]))
    rng.shuffle(edges)
    return n, edges


def gen_workload(model: str, seed: int = 0, query_every: int = 1, **params) -> str:
    """Generate a stream file.

    ``model`` is ``gnm`` (params ``n``, ``m``), ``layered`` (``width``,
    ``depth``, optional ``m``) or ``parallel-paths`` (``k``, ``length``).
    A query follows every ``query_every``-th insert; 0 emits only a final
    query. Output is a pure function of the arguments.
    """
    rng = random.Random(seed)
    if model == "gnm":
        n = params["n"]
        edges = gnm_edges(n, params["m"], rng)
        s, t = 0, n - 1
        desc = f"gnm n={n} m={params['m']}"
    elif model == "layered":
        n, edges = layered_edges(params["width"], params["depth"], params.get("m"), rng)
        s, t = 0, n - 1
        desc = f"layered width={params['width']} depth={params['depth']} m={len(edges)}"
    elif model == "parallel-paths":
        n, edges = parallel_paths_edges(params["k"], params["length"], rng)
        s, t = 0, n - 1
        desc = f"parallel-paths k={params['k']} length={params['length']}"
    else:
        raise ValueError(f"unknown workload model {model!r}")
    if query_every < 0:
        raise ValueError("query_every must be >= 0")

    events = [Event("c", text=f"{desc} seed={seed}")]
    for i, (u, v) in enumerate(edges, 1):
        events.append(Event("a", u, v))
        if query_every and i % query_every == 0:
            events.append(Event("q"))
    if not events or events[-1].kind != "q":
        events.append(Event("q"))
    return format_stream(n, s, t, events)


# -- replay ----------------------------------------------------------------


@dataclass
class Strategy:
    """Replay strategy: ``approx`` (eps, mu or "auto"), ``exact-bmf`` (mu) or ``naive-static``."""

    name: str = "approx"
    eps: object = Fraction(1, 2)
    mu: object = "auto"

    def __post_init__(self):
        if self.name not in ("approx", "exact-bmf", "naive-static"):
            raise ValueError(f"unknown strategy {self.name!r}")


@dataclass
class RunReport:
    strategy: str
    n: int
    s: int
    t: int
    eps: Fraction | None
    mu: int | None
    outputs: list = field(default_factory=list)  # one int per query
    exact: list = field(default_factory=list)  # oracle values when verifying
    stats: dict = field(default_factory=dict)
    wall_time: dict = field(default_factory=dict)
    verified: bool = False

    def output_lines(self) -> list[str]:
        if not self.verified:
            return [str(v) for v in self.outputs]
        return [f"{v} {x} {_ratio(v, x)}" for v, x in zip(self.outputs, self.exact)]


def _ratio(value: int, exact: int) -> str:
    if value == 0:
        return "1.000000" if exact == 0 else "inf"
    return f"{exact / value:.6f}"


class _Oracle:
    """Per-prefix exact max flow by Edmonds-Karp, warm-started from the last prefix."""

    def __init__(self, n, s, t):
        self.net = FlowNetwork(n, s, t)
        self.bits = b""
        self.value = 0
        self._dirty = False

    def insert(self, u, v):
        self.net.insert_edge(u, v)
        self._dirty = True

    def query(self) -> int:
        if self._dirty:
            res = edmonds_karp(self.net.snapshot(), initial=self.bits)
            self.bits, self.value = res.assignment, res.value
            self._dirty = False
        return self.value


class _NaiveStatic:
    def __init__(self, n, s, t):
        self.net = FlowNetwork(n, s, t)
        self.static_arc_scans = 0
        self.solves = 0

    def insert(self, u, v):
        self.net.insert_edge(u, v)

    @property
    def value(self):
        res = dinic_max_flow(self.net.snapshot())
        self.static_arc_scans += res.arc_scans
        self.solves += 1
        return res.value


def _resolve_mu(strategy: Strategy, n: int, total_inserts: int | None) -> int:
    mu = strategy.mu
    if mu == "auto":
        if total_inserts is None:
            raise ValueError("--mu auto needs the total insert count; pass an explicit mu for live input")
        if strategy.name == "exact-bmf":
            return n
        return min(n, suggested_mu(max(1, total_inserts), strategy.eps))
    return int(mu)


def run(
    lines: Iterable[str],
    strategy: Strategy | None = None,
    verify: bool = False,
    total_inserts: int | None = None,
    on_output=None,
) -> RunReport:
    """Replay a stream through ``strategy``.

    ``lines`` may be a string (a whole file) or any iterable of lines, such
    as a live pipe; with ``mu="auto"`` the insert count is taken from the
    text, so only whole files qualify. ``on_output`` receives each output
    line as soon as it is produced.
    """
    strategy = strategy or Strategy()
    if isinstance(lines, str):
        text = lines
        if total_inserts is None:
            total_inserts = sum(1 for ln in text.splitlines() if ln.startswith("a "))
        lines = text.splitlines(keepends=True)
    items = iter_stream(lines)
    n, s, t = next(items)

    eps = None
    if strategy.name == "naive-static":
        algo = _NaiveStatic(n, s, t)
        mu = None
    else:
        mu = _resolve_mu(strategy, n, total_inserts)
        if strategy.name == "approx":
            eps = as_fraction(strategy.eps)
            algo = ApproxMaxFlow(n, s, t, eps, mu)
        else:
            algo = BoundedMaxFlow(n, s, t, mu)
    oracle = _Oracle(n, s, t) if verify else None
    report = RunReport(strategy.name, n, s, t, eps, mu, verified=verify)

    t_replay = t_verify = 0.0
    inserts = queries = 0
    for index, ev in enumerate(items):
        if ev.kind == "a":
            t0 = time.perf_counter()
            algo.insert(ev.u, ev.v)
            t_replay += time.perf_counter() - t0
            inserts += 1
            if oracle:
                oracle.insert(ev.u, ev.v)
            continue
        queries += 1
        t0 = time.perf_counter()
        value = algo.value
        t_replay += time.perf_counter() - t0
        report.outputs.append(value)
        if oracle:
            t0 = time.perf_counter()
            exact = oracle.query()
            t_verify += time.perf_counter() - t0
            report.exact.append(exact)
            _check(strategy.name, value, exact, eps, mu, index)
        if on_output:
            on_output(report.output_lines()[-1] if verify else str(value))

    report.wall_time = {"replay": t_replay}
    if verify:
        report.wall_time["verify"] = t_verify
    report.stats = _collect_stats(algo, inserts, queries)
    return report


def _check(name, value, exact, eps, mu, index):
    if name == "approx":
        if not value <= exact <= (1 + eps) * value:
            raise VerificationError(index, f"value {value} violates {value} <= {exact} <= (1+{eps})*{value}")
    elif name == "exact-bmf":
        ok = value == exact if value <= mu else exact >= value == mu + 1
        if not ok:
            raise VerificationError(index, f"bounded value {value} inconsistent with exact {exact} (mu={mu})")
    elif value != exact:
        raise VerificationError(index, f"static value {value} != exact {exact}")


def _collect_stats(algo, inserts: int, queries: int) -> dict:
    if isinstance(algo, ApproxMaxFlow):
        st = algo.stats().as_dict()
    elif isinstance(algo, BoundedMaxFlow):
        st = {
            "inserts": inserts,
            "forwarded": inserts - algo.counters.ignored_inserts,
            "stale": algo.counters.ignored_inserts,
            "rebuilds": 0,
            "static_arc_scans": 0,
            "bmf_queries": queries,
            "bmf": algo.stats(),
        }
    else:
        st = {
            "inserts": inserts,
            "forwarded": 0,
            "stale": 0,
            "rebuilds": algo.solves,
            "static_arc_scans": algo.static_arc_scans,
            "bmf_queries": 0,
            "bmf": {},
        }
    st["queries"] = queries
    return st


def stats_dict(report: RunReport) -> dict:
    st = dict(report.stats)
    m = max(1, st["inserts"])
    bmf_scans = st["bmf"].get("arc_scans", 0)
    return {
        "schema": STATS_SCHEMA,
        "strategy": report.strategy,
        "n": report.n,
        "s": report.s,
        "t": report.t,
        "epsilon": None if report.eps is None else str(report.eps),
        "mu": report.mu,
        **st,
        "amortized": {
            "bmf_arc_scans_per_insert": bmf_scans / m,
            "static_arc_scans_per_insert": st["static_arc_scans"] / m,
            "replay_seconds_per_insert": report.wall_time.get("replay", 0.0) / m,
        },
        "wall_time": dict(report.wall_time),
    }


def stats_report(report: RunReport, fmt: str = "json") -> str:
    d = stats_dict(report)
    if fmt == "json":
        return json.dumps(d, indent=2, sort_keys=True)
    if fmt != "text":
        raise ValueError(f"unknown stats format {fmt!r}")
    lines = []
    for key, val in d.items():
        if isinstance(val, dict):
            for k2, v2 in val.items():
                lines.append(f"{key}.{k2}: {_fmt(v2)}")
        else:
            lines.append(f"{key}: {_fmt(val)}")
    return "\n".join(lines)


def _fmt(v):
    return f"{v:.6g}" if isinstance(v, float) else str(v)


# -- scaling benchmark ---------------------------------------------------


def bench(sizes=(10_000, 40_000, 160_000), eps=Fraction(1, 2), seed=0, depth=4, width_factor=Fraction(6, 5)):
    """Amortized replay cost of the approx strategy on layered workloads.

    For each ``m`` the threshold is ``suggested_mu(m, eps)`` and the layered
    graph has ``depth`` layers of ``width_factor * mu`` vertices, so the flow
    crosses the threshold during the stream and periodic rebuilds happen.
    Returns one dict per size; ``growth`` and ``op_growth`` compare seconds
    and counted arc scans per insert with the previous size.
    """
    rows = []
    prev = None
    for m in sizes:
        mu = suggested_mu(m, eps)
        width = max(1, int(width_factor * mu))
        text = gen_workload("layered", seed=seed, query_every=0, width=width, depth=depth, m=m)
        report = run(text, Strategy("approx", eps, mu))
        st = report.stats
        ops = (st["bmf"]["arc_scans"] + st["static_arc_scans"]) / m
        row = {
            "m": m,
            "mu": mu,
            "width": width,
            "depth": depth,
            "seconds": report.wall_time["replay"],
            "seconds_per_insert": report.wall_time["replay"] / m,
            "scans_per_insert": ops,
            "rebuilds": st["rebuilds"],
            "stale": st["stale"],
            "bmf_arc_scans": st["bmf"]["arc_scans"],
            "static_arc_scans": st["static_arc_scans"],
            "growth": None,
            "op_growth": None,
        }
        if prev is not None:
            row["growth"] = row["seconds_per_insert"] / prev["seconds_per_insert"]
            row["op_growth"] = ops / prev["scans_per_insert"]
        rows.append(row)
        prev = row
    return rows
