"""Command-line entry point: ``miuz generate|metrics|attack|batch``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Iterable, Optional

from miuz.attack import MODES, AttackError, r_a_index, r_index, run_attack
from miuz.graph import GraphError
from miuz.harness import ConfigError, ExperimentConfig, run_experiment
from miuz.io import (fmt, read_edge_list, write_curves_csv, write_edge_list,
                     write_metrics_csv, write_summary_csv, write_trace_csv)
from miuz.metrics import ATTACK_KINDS, METRIC_KINDS, compute
from miuz.netgen import GenSpec, GenSpecError, generate

REPORTED_A = (5, 10, 20, 30)


class CliError(Exception):
    pass


def _floats(text):
    return [float(x) for x in text.replace(",", " ").split()]


def _ints(text):
    return [int(x) for x in text.replace(",", " ").split()]


def _words(text):
    return text.replace(",", " ").split()


CONFIG_KEYS = {
    "alphas": _floats,
    "replicates": int,
    "n": int,
    "metrics": _words,
    "mode": str.strip,
    "a_values": _ints,
    "master_seed": int,
    "k_min": int,
    "k_max": int,
}
REQUIRED_KEYS = ("alphas",)


def parse_config_lines(lines: Iterable[str], source: str = "config") -> dict[str, str]:
    """``key = value`` pairs; ``#`` starts a comment.  Later keys win."""
    raw = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"{source}:{lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        raw[key.strip().replace("-", "_")] = value.strip()
    return raw


def build_config(raw: dict[str, str]) -> ExperimentConfig:
    unknown = sorted(set(raw) - set(CONFIG_KEYS))
    if unknown:
        raise CliError(f"unknown config keys: {', '.join(unknown)}")
    missing = [k for k in REQUIRED_KEYS if k not in raw]
    if missing:
        raise CliError(f"missing config keys: {', '.join(missing)}")
    values = {}
    for key, text in raw.items():
        try:
            values[key] = CONFIG_KEYS[key](text)
        except ValueError as exc:
            raise CliError(f"bad value for {key}: {text!r} ({exc})") from None
    return ExperimentConfig(**values)


def cmd_generate(args) -> int:
    spec = GenSpec(args.n, args.alpha, args.k_min, args.k_max, args.seed)
    g = generate(spec)
    write_edge_list(g, args.out)
    mean_degree = 2 * g.edge_count / g.node_count
    print(f"nodes {g.node_count}")
    print(f"edges {g.edge_count}")
    print(f"mean_degree {fmt(mean_degree)}")
    return 0


def cmd_metrics(args) -> int:
    g = read_edge_list(args.graph)
    kinds = METRIC_KINDS if args.metric == "all" else (args.metric,)
    vectors = [compute(g, k) for k in kinds]
    write_metrics_csv(vectors, args.out if args.out else sys.stdout)
    return 0


def cmd_attack(args) -> int:
    g = read_edge_list(args.graph)
    trace = run_attack(g, args.metric, args.mode, seed=args.seed)
    if args.trace_out:
        write_trace_csv(trace, args.trace_out)
    print(f"R {fmt(r_index(trace))}")
    for a in REPORTED_A:
        if a <= trace.original_n:
            print(f"R_{a} {fmt(r_a_index(trace, a))}")
    return 0


def cmd_batch(args) -> int:
    raw = {}
    if args.config:
        path = Path(args.config)
        raw.update(parse_config_lines(path.read_text().splitlines(), str(path)))
    raw.update(parse_config_lines(args.set or [], "--set"))
    config = build_config(raw)

    step = max(1, len(config.alphas) * config.replicates * len(config.metrics) // 20)

    def progress(done, total, cell):
        if not args.quiet and (done % step == 0 or done == total):
            alpha, rep, metric = cell
            print(f"[{done}/{total}] alpha={alpha} replicate={rep} metric={metric}",
                  file=sys.stderr)

    table = run_experiment(config, progress=progress, jobs=args.jobs)
    write_summary_csv(table, args.out)
    if args.curves_out:
        write_curves_csv(table, args.curves_out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="miuz", description="Miuz index, targeted attacks and R-index robustness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a scale-free network as an edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=None, help="default floor(sqrt(n))")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("metrics", help="per-node scores as CSV")
    p.add_argument("--graph", required=True)
    p.add_argument("--metric", choices=METRIC_KINDS + ("all",), default="all")
    p.add_argument("--out", help="CSV path (default: standard output)")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("attack", help="run one attack; print R and R_a")
    p.add_argument("--graph", required=True)
    p.add_argument("--metric", choices=ATTACK_KINDS, required=True)
    p.add_argument("--mode", choices=MODES, default="sequential")
    p.add_argument("--seed", type=int, default=None, help="required for --metric random")
    p.add_argument("--trace-out")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("batch", help="alpha sweep over generated networks")
    p.add_argument("--config", help="file of key=value lines")
    p.add_argument("--set", action="append", metavar="KEY=VALUE",
                   help="config entry; repeatable, overrides --config")
    p.add_argument("--out", required=True, help="summary CSV path")
    p.add_argument("--curves-out", help="mean s(q) curves CSV path")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ConfigError, GenSpecError, GraphError, AttackError, OSError) as exc:
        print(f"miuz {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
