"""Command line: ``incflow run | gen | bench``."""

from __future__ import annotations

import argparse
import json
import sys

from .approx import as_fraction
from .stream import (
    StreamError,
    Strategy,
    VerificationError,
    bench,
    gen_workload,
    run,
    stats_report,
)


def _mu(text: str):
    if text == "auto":
        return text
    mu = int(text)
    if mu < 0:
        raise argparse.ArgumentTypeError("mu must be >= 0 or 'auto'")
    return mu


def _eps(text: str):
    eps = as_fraction(text)
    if eps <= 0:
        raise argparse.ArgumentTypeError("epsilon must be positive")
    return eps


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="incflow", description="Incremental s-t maximum flow on unit-capacity digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="replay a stream file")
    r.add_argument("--stream", required=True, help="stream file, or '-' to read stdin live")
    r.add_argument("--strategy", choices=["approx", "exact-bmf", "naive-static"], default="approx")
    r.add_argument("--epsilon", type=_eps, default=as_fraction("0.5"))
    r.add_argument("--mu", type=_mu, default="auto")
    r.add_argument("--verify", action="store_true", help="check every query against Edmonds-Karp")
    r.add_argument("--stats", choices=["json", "text"], help="print statistics to stderr")

    g = sub.add_parser("gen", help="generate a workload stream on stdout")
    g.add_argument("--model", choices=["gnm", "layered", "parallel-paths"], required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--width", type=int)
    g.add_argument("--depth", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--length", type=int, default=1)
    g.add_argument("--query-every", type=int, default=1, help="0 emits a single final query")

    b = sub.add_parser("bench", help="amortized cost per insert on layered workloads")
    b.add_argument("--sizes", type=int, nargs="+", default=[10_000, 40_000, 160_000])
    b.add_argument("--epsilon", type=_eps, default=as_fraction("0.5"))
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--stats", choices=["json", "text"], default="text")
    return p


def _cmd_run(args) -> int:
    strategy = Strategy(args.strategy, args.epsilon, args.mu)

    def emit(line):
        print(line, flush=live)

    if args.stream == "-":
        if args.mu == "auto":
            print("incflow: live input needs an explicit --mu", file=sys.stderr)
            return 2
        live = True
        report = run(sys.stdin, strategy, verify=args.verify, on_output=emit)
    else:
        live = False
        with open(args.stream, encoding="ascii", newline="") as fh:
            text = fh.read()
        report = run(text, strategy, verify=args.verify, on_output=emit)
    if args.stats:
        print(stats_report(report, args.stats), file=sys.stderr)
    return 0


REQUIRED = {"gnm": ("n", "m"), "layered": ("width", "depth"), "parallel-paths": ("k", "length")}


def _cmd_gen(args) -> int:
    for name in REQUIRED[args.model]:
        if getattr(args, name) is None:
            print(f"incflow: --{name} is required for model {args.model}", file=sys.stderr)
            return 2
    params = {name: getattr(args, name) for name in REQUIRED[args.model]}
    if args.model == "layered":
        params["m"] = args.m
    sys.stdout.write(gen_workload(args.model, seed=args.seed, query_every=args.query_every, **params))
    return 0


def _cmd_bench(args) -> int:
    rows = bench(args.sizes, args.epsilon, args.seed)
    if args.stats == "json":
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'m':>8} {'mu':>5} {'rebuilds':>8} {'us/insert':>10} {'growth':>7} {'scans/insert':>12} {'growth':>7}")
    for row in rows:
        g = "-" if row["growth"] is None else f"{row['growth']:.2f}"
        og = "-" if row["op_growth"] is None else f"{row['op_growth']:.2f}"
        print(
            f"{row['m']:>8} {row['mu']:>5} {row['rebuilds']:>8} {row['seconds_per_insert'] * 1e6:>10.2f} {g:>7}"
            f" {row['scans_per_insert']:>12.1f} {og:>7}"
        )
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return {"run": _cmd_run, "gen": _cmd_gen, "bench": _cmd_bench}[args.command](args)
    except (StreamError, ValueError, OSError) as exc:
        print(f"incflow: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"incflow: verification failed: {exc}", file=sys.stderr)
        return 1
