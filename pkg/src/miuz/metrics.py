"""Node scores used to rank attack targets.

Miuz compares the whole alive population with the largest component left
after a node's edges are stripped (the node itself stays in the census as
a singleton)::

    miuz(n) = T / L - 1     if stripping n yields more than one new component
            = 0             otherwise, and for isolated n

where ``T`` is the number of alive nodes and ``L`` the largest component
in that census.  Miuz is positive exactly on cut vertices.  Values are kept
as the integer pair ``(T, L)`` so rankings never depend on float rounding.

Degree, betweenness (unnormalised, unordered pairs) and harmonic
centrality are the comparison metrics.  All functions read the alive
subgraph and leave the graph untouched.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from miuz import _kernels
from miuz.graph import Graph, GraphError

METRIC_KINDS = ("miuz", "degree", "betweenness", "harmonic")
ATTACK_KINDS = METRIC_KINDS + ("random",)


@dataclass
class MetricVector:
    """Per-node scores for one metric kind; dead nodes hold ``nan``.

    For ``kind == "miuz"`` the exact value of node ``n`` is
    ``Fraction(total, largest[n]) - 1`` (0 where ``largest[n] == 0``).
    """

    kind: str
    scores: np.ndarray
    total: Optional[int] = None
    largest: Optional[np.ndarray] = None

    def exact(self, n: int) -> Fraction:
        if self.kind != "miuz":
            raise TypeError("exact values are only tracked for miuz")
        if np.isnan(self.scores[n]):
            raise GraphError(f"node {n} is not alive")
        if self.largest[n] == 0:
            return Fraction(0)
        return Fraction(self.total, int(self.largest[n])) - 1

    def ranking_key(self) -> np.ndarray:
        """Float key whose order equals the score order; dead nodes are ``-inf``.

        For miuz the key is ``T - L`` which orders nodes exactly like
        ``T / L - 1`` with no rounding involved.
        """
        if self.kind == "miuz":
            key = np.where(self.largest > 0, self.total - self.largest, 0).astype(float)
        else:
            key = self.scores.astype(float, copy=True)
        key[np.isnan(self.scores)] = -np.inf
        return key


def _dead_to_nan(g: Graph, values: np.ndarray) -> np.ndarray:
    scores = values.astype(float)
    scores[~g.alive] = np.nan
    return scores


def miuz_single(g: Graph, n: int) -> Fraction:
    """Miuz of one node by a direct before/after component census."""
    g._check_node(n)
    if not g.alive[n]:
        raise GraphError(f"node {n} is not alive")
    if not g.adjacency[n]:
        return Fraction(0)
    indptr, indices = g.csr
    _, before = _kernels.component_labels(indptr, indices, g.alive)
    without = g.alive.copy()
    without[n] = False
    _, after = _kernels.component_labels(indptr, indices, without)
    # census after stripping = len(after) + 1, since n stays as a singleton
    if len(after) + 1 == len(before) + 1:
        return Fraction(0)
    total = int(g.alive.sum())
    largest = max(int(after.max()), 1)
    return Fraction(total, largest) - 1


def miuz_all(g: Graph) -> MetricVector:
    """Miuz for every alive node in one DFS low-link pass."""
    indptr, indices = g.csr
    labels, sizes, is_cut, piece = _kernels.cut_vertex_split(indptr, indices, g.alive)
    total = int(g.alive.sum())
    largest = np.zeros(g.node_count, dtype=np.int64)
    if is_cut.any():
        # largest component other than the node's own
        order = np.argsort(-sizes, kind="stable")
        top_label = order[0]
        top = sizes[order[0]]
        second = sizes[order[1]] if len(order) > 1 else 0
        cut = np.flatnonzero(is_cut)
        others = np.where(labels[cut] == top_label, second, top)
        largest[cut] = np.maximum(np.maximum(piece[cut], others), 1)
    scores = np.zeros(g.node_count)
    nz = largest > 0
    scores[nz] = total / largest[nz] - 1.0
    scores[~g.alive] = np.nan
    return MetricVector("miuz", scores, total=total, largest=largest)


def degree_all(g: Graph) -> MetricVector:
    deg = np.fromiter((len(a) for a in g.adjacency), dtype=np.int64, count=g.node_count)
    return MetricVector("degree", _dead_to_nan(g, deg))


def betweenness_all(g: Graph) -> MetricVector:
    """Unnormalised betweenness over unordered alive pairs (Brandes)."""
    indptr, indices = g.csr
    out = np.zeros(g.node_count)
    _kernels.brandes_accumulate(indptr, indices, g.alive, np.flatnonzero(g.alive), out)
    return MetricVector("betweenness", _dead_to_nan(g, out / 2.0))


def harmonic_all(g: Graph) -> MetricVector:
    """Sum of reciprocal hop distances to the other alive nodes (1/inf = 0)."""
    indptr, indices = g.csr
    out = np.zeros(g.node_count)
    _kernels.harmonic_fill(indptr, indices, g.alive, np.flatnonzero(g.alive), out)
    return MetricVector("harmonic", _dead_to_nan(g, out))


_COMPUTE = {
    "miuz": miuz_all,
    "degree": degree_all,
    "betweenness": betweenness_all,
    "harmonic": harmonic_all,
}


def compute(g: Graph, kind: str) -> MetricVector:
    try:
        fn = _COMPUTE[kind]
    except KeyError:
        raise ValueError(f"unknown metric {kind!r}; expected one of {METRIC_KINDS}") from None
    return fn(g)
