"""Incremental maximum s-t flow on directed unit-capacity graphs."""

from .approx import ApproxMaxFlow, FrameworkStats, suggested_mu
from .bounded import BoundedMaxFlow
from .network import BACKWARD, FORWARD, FlowNetwork, InvalidPathError, ResidualArc
from .reach import ReachTree
from .static import FlowResult, InvalidFlowError, dinic_max_flow, edmonds_karp, verify_optimal
from .stream import Strategy, gen_workload, parse_stream, run, stats_report

__all__ = [
    "ApproxMaxFlow",
    "BACKWARD",
    "BoundedMaxFlow",
    "FORWARD",
    "FlowNetwork",
    "FlowResult",
    "FrameworkStats",
    "InvalidFlowError",
    "InvalidPathError",
    "ReachTree",
    "ResidualArc",
    "Strategy",
    "dinic_max_flow",
    "edmonds_karp",
    "gen_workload",
    "parse_stream",
    "run",
    "stats_report",
    "suggested_mu",
    "verify_optimal",
]
