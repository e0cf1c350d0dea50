"""Plain-text file formats: edge lists, attack traces, batch summaries."""
from __future__ import annotations

import csv
import re
from pathlib import Path
from typing import TextIO, Union

import numpy as np

from miuz.attack import AttackTrace
from miuz.graph import Graph, GraphError, build_graph
from miuz.harness import SummaryTable
from miuz.metrics import MetricVector

PathLike = Union[str, Path]

_NODES_HEADER = re.compile(r"#\s*nodes:\s*(\d+)\s*$")


def fmt(x: float) -> str:
    """Six significant digits, the one float format used in every CSV."""
    return f"{x:.6g}"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` lines and blank lines are skipped.

    A ``# nodes: N`` comment fixes the node count (so trailing isolated
    nodes survive a round trip); otherwise it is ``max id + 1``.
    """
    edges = []
    node_count = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _NODES_HEADER.match(line)
            if m and node_count is None:
                node_count = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected two non-negative integers, got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if node_count is None:
        node_count = max((max(e) for e in edges), default=-1) + 1
    return build_graph(edges, node_count)


def read_edge_list(path: PathLike) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"# nodes: {g.node_count}", f"# edges: {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g))


def _write_rows(header: list[str], rows, out: Union[PathLike, TextIO]) -> None:
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="") as fh:
            _write_rows(header, rows, fh)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def write_metrics_csv(vectors: list[MetricVector], out) -> None:
    """``node`` then one score column per vector; dead nodes are left out."""
    alive = np.flatnonzero(~np.isnan(vectors[0].scores))
    header = ["node"] + [v.kind for v in vectors] if len(vectors) > 1 else ["node", "score"]
    rows = ([str(i)] + [fmt(v.scores[i]) for v in vectors] for i in alive)
    _write_rows(header, rows, out)


def write_trace_csv(trace: AttackTrace, out) -> None:
    rows = ([str(st.q), str(st.node), trace.kind, fmt(st.score_at_selection),
             str(st.lcc_after), fmt(st.s)] for st in trace.strikes)
    _write_rows(["q", "node", "metric", "score", "lcc", "s"], rows, out)


def summary_header(a_values) -> list[str]:
    header = ["alpha", "metric", "replicates", "R_mean", "R_sd"]
    for a in a_values:
        header += [f"R{a}_mean", f"R{a}_sd"]
    return header


def write_summary_csv(table: SummaryTable, out) -> None:
    a_values = table.config.a_values

    def row(r):
        cells = [fmt(r.alpha), r.metric, str(r.replicates), fmt(r.r_mean), fmt(r.r_sd)]
        for a in a_values:
            cells += [fmt(r.ra_mean[a]), fmt(r.ra_sd[a])]
        return cells

    _write_rows(summary_header(a_values), (row(r) for r in table.rows), out)


def write_curves_csv(table: SummaryTable, out) -> None:
    curves = table.curves()

    def rows():
        for alpha, metric in sorted(curves):
            for q, s in enumerate(curves[alpha, metric], start=1):
                yield [fmt(alpha), metric, str(q), fmt(s)]

    _write_rows(["alpha", "metric", "q", "s_mean"], rows(), out)

