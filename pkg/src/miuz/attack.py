"""Targeted node-disconnection attacks and robustness indices.

An attack strikes every node once, in an order chosen by a metric, and
records the largest alive component after each strike.  ``s(q)`` is that
size divided by the ORIGINAL node count, so ``s(N) == 0``.

Sequential attacks re-score the alive subgraph before every strike;
simultaneous attacks rank once on the intact graph.  Ties always go to
the lowest node id.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping, NamedTuple, Optional, Union

import numpy as np

from miuz import _kernels
from miuz.graph import Graph, disconnect_node, largest_component_size
from miuz.metrics import ATTACK_KINDS, compute, miuz_all

MODES = ("sequential", "simultaneous")

ScoreFn = Callable[[Graph], np.ndarray]


class AttackError(ValueError):
    pass


class Strike(NamedTuple):
    q: int
    node: int
    score_at_selection: float
    lcc_after: int
    s: float


@dataclass
class AttackTrace:
    """Strike-by-strike record of one attack, stored column-wise."""

    original_n: int
    kind: str
    mode: str
    seed: Optional[int] = None
    tie_break: str = "lowest-id"
    nodes: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))
    scores: np.ndarray = field(default_factory=lambda: np.empty(0))
    lcc: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))

    @property
    def s(self) -> np.ndarray:
        if self.original_n == 0:
            return np.zeros(0)
        return self.lcc / self.original_n

    @property
    def complete(self) -> bool:
        return len(self.nodes) == self.original_n

    @property
    def strikes(self) -> list[Strike]:
        s = self.s
        return [Strike(q + 1, int(self.nodes[q]), float(self.scores[q]),
                       int(self.lcc[q]), float(s[q]))
                for q in range(len(self.nodes))]

    def __len__(self):
        return len(self.nodes)


class _IncrementalScores:
    """Keeps one built-in metric current as nodes are struck.

    Degree, betweenness and harmonic centrality are component-local, so
    after a strike only the components that held the struck node's
    neighbours are re-scored.  Sources are visited in ascending id order
    exactly like a full recompute, so the values are bit-identical.
    Miuz depends on the global largest component and is recomputed whole.
    """

    def __init__(self, g: Graph, kind: str):
        self.g = g
        self.kind = kind
        self.vector = compute(g, kind)
        if kind == "betweenness":
            self.raw = np.nan_to_num(self.vector.scores) * 2.0
        elif kind == "harmonic":
            self.raw = np.nan_to_num(self.vector.scores)

    def pick(self) -> tuple[int, float]:
        if self.kind in ("betweenness", "harmonic"):
            key = np.where(self.g.alive, self.raw, -np.inf)
            v = int(np.argmax(key))
            score = self.raw[v] / 2.0 if self.kind == "betweenness" else self.raw[v]
            return v, float(score)
        key = self.vector.ranking_key()
        v = int(np.argmax(key))
        return v, float(self.vector.scores[v])

    def update(self, struck: int, neighbours: list[int]) -> None:
        g = self.g
        if self.kind == "miuz":
            self.vector = miuz_all(g)
            return
        if self.kind == "degree":
            scores = self.vector.scores
            scores[struck] = np.nan
            for u in neighbours:
                scores[u] -= 1
            return
        self.raw[struck] = 0.0
        if not neighbours:
            return
        indptr, indices = g.csr
        labels, _ = _kernels.component_labels(indptr, indices, g.alive)
        touched = np.isin(labels, labels[neighbours])
        # relabelling keeps id order, so the values match a full recompute bit for bit
        nodes, sub_indptr, sub_indices = _kernels.induced_csr(indptr, indices, touched)
        sub_alive = np.ones(len(nodes), dtype=bool)
        local = np.zeros(len(nodes))
        sources = np.arange(len(nodes))
        if self.kind == "betweenness":
            _kernels.brandes_accumulate(sub_indptr, sub_indices, sub_alive, sources, local)
        else:
            _kernels.harmonic_fill(sub_indptr, sub_indices, sub_alive, sources, local)
        self.raw[nodes] = local


class _CustomScores:
    """Full recompute with a caller-supplied ``Graph -> scores`` function."""

    def __init__(self, g: Graph, fn: ScoreFn):
        self.g = g
        self.fn = fn

    def pick(self) -> tuple[int, float]:
        scores = np.asarray(self.fn(self.g), dtype=float)
        key = np.where(self.g.alive, scores, -np.inf)
        v = int(np.argmax(key))
        return v, float(scores[v])

    def update(self, struck: int, neighbours: list[int]) -> None:
        pass


def _lcc_after(g: Graph) -> int:
    if g.edge_count == 0:
        return 1 if g.alive.any() else 0
    return largest_component_size(g)


def _strike(g: Graph, v: int) -> list[int]:
    neighbours = sorted(g.adjacency[v])
    disconnect_node(g, v)
    return neighbours


def _sequential(g: Graph, kind: Union[str, ScoreFn],
                seed: Optional[int] = None) -> Iterator[tuple[int, float, int]]:
    """Strike ``g`` in place until no node is alive.

    Yields ``(node, score_at_selection, lcc_after)`` after each strike.
    """
    if kind == "random":
        for v in _random_order(g.node_count, seed):
            _strike(g, int(v))
            yield int(v), float("nan"), _lcc_after(g)
        return
    scorer = _CustomScores(g, kind) if callable(kind) else _IncrementalScores(g, kind)
    while g.edge_count > 0:
        v, score = scorer.pick()
        neighbours = _strike(g, v)
        scorer.update(v, neighbours)
        yield v, score, _lcc_after(g)
    # every metric is 0 on an edgeless graph, so the rest go in id order
    for v in np.flatnonzero(g.alive):
        _strike(g, int(v))
        yield int(v), 0.0, _lcc_after(g)


def _random_order(n: int, seed: Optional[int]) -> np.ndarray:
    if seed is None:
        raise AttackError("the random strategy requires a seed")
    return np.random.default_rng(seed).permutation(n)


def _check_kind(kind) -> str:
    if callable(kind):
        return getattr(kind, "__name__", "custom")
    if kind not in ATTACK_KINDS:
        raise AttackError(f"unknown attack kind {kind!r}; expected one of {ATTACK_KINDS}")
    return kind


def run_attack(g: Graph, kind: Union[str, ScoreFn], mode: str = "sequential",
               seed: Optional[int] = None) -> AttackTrace:
    """Attack a fresh graph until every node has been struck.

    ``kind`` is one of ``miuz``, ``degree``, ``betweenness``, ``harmonic``,
    ``random`` (needs ``seed``), or a callable returning one score per node
    which is then fully recomputed before each sequential strike.  The
    input graph is not modified.
    """
    name = _check_kind(kind)
    if mode not in MODES:
        raise AttackError(f"unknown mode {mode!r}; expected one of {MODES}")
    if not g.is_fresh():
        raise AttackError("run_attack needs a fresh graph (some nodes are already dead)")
    if kind == "random" and seed is None:
        raise AttackError("the random strategy requires a seed")

    work = g.copy()
    n = g.node_count
    nodes = np.empty(n, np.int64)
    scores = np.empty(n)
    lcc = np.empty(n, np.int64)
    if mode == "sequential" or kind == "random":
        steps = _sequential(work, kind, seed)
    else:
        steps = _simultaneous(work, kind)
    for q, (v, score, size) in enumerate(steps):
        nodes[q], scores[q], lcc[q] = v, score, size
    return AttackTrace(n, name, mode, seed, nodes=nodes, scores=scores, lcc=lcc)


def _simultaneous(g: Graph, kind) -> Iterator[tuple[int, float, int]]:
    if callable(kind):
        scores = np.asarray(kind(g), dtype=float)
        key = scores.copy()
    else:
        vector = compute(g, kind)
        scores = vector.scores
        key = vector.ranking_key()
    order = np.lexsort((np.arange(g.node_count), -key))
    for v in order:
        v = int(v)
        _strike(g, v)
        yield v, float(scores[v]), _lcc_after(g)


def r_index(trace: AttackTrace) -> float:
    """Mean of s(q) over all ``original_n`` strikes."""
    if not trace.complete:
        raise AttackError(
            f"trace has {len(trace)} strikes, expected {trace.original_n}")
    if trace.original_n == 0:
        raise AttackError("empty trace")
    return float(trace.s.sum() / trace.original_n)


def r_a_index(trace: AttackTrace, a: int) -> float:
    """Mean of s(q) over the first ``a`` strikes."""
    if not 1 <= a <= trace.original_n:
        raise AttackError(f"a must lie in 1..{trace.original_n}, got {a}")
    if len(trace) < a:
        raise AttackError(f"trace has only {len(trace)} strikes, need {a}")
    return float(trace.s[:a].sum() / a)


def breaking_point(traces: Mapping[str, AttackTrace]) -> Optional[int]:
    """First strike at which miuz leaves a strictly larger component than some
    other strategy; ``None`` if it never does.  Ties keep miuz in front."""
    if "miuz" not in traces:
        raise AttackError("breaking_point needs a miuz trace")
    sizes = {t.original_n for t in traces.values()}
    if len(sizes) != 1:
        raise AttackError(f"traces disagree on original_n: {sorted(sizes)}")
    others = [t for k, t in traces.items() if k != "miuz"]
    if not others:
        return None
    miuz_s = traces["miuz"].s
    length = min(len(miuz_s), *(len(t) for t in others))
    best_other = np.min([t.s[:length] for t in others], axis=0)
    worse = np.flatnonzero(miuz_s[:length] > best_other)
    return int(worse[0]) + 1 if len(worse) else None


def _max_miuz(g: Graph) -> Fraction:
    vector = miuz_all(g)
    cut = vector.largest[vector.largest > 0]
    if len(cut) == 0:
        return Fraction(0)
    return Fraction(vector.total, int(cut.min())) - 1


def resilience_count(g: Graph, kind: Union[str, ScoreFn], threshold: float = 0.0,
                     seed: Optional[int] = None) -> tuple[int, bool]:
    """Disconnections (sequential attack by ``kind``) until max Miuz exceeds ``threshold``.

    Returns ``(count, exhausted)``; ``exhausted`` is True, with
    ``count == node_count``, when the threshold is never exceeded.
    """
    if threshold < 0:
        raise AttackError(f"threshold must be non-negative, got {threshold}")
    _check_kind(kind)
    if not g.is_fresh():
        raise AttackError("resilience_count needs a fresh graph")
    limit = Fraction(threshold)
    work = g.copy()
    if _max_miuz(work) > limit:
        return 0, False
    for count, _ in enumerate(_sequential(work, kind, seed), start=1):
        if _max_miuz(work) > limit:
            return count, False
    return g.node_count, True
