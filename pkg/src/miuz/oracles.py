"""Slow reference implementations for testing on small graphs.

Pure Python over the adjacency sets; none of the compiled kernels are used.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations

import numpy as np

from miuz.graph import Graph
from miuz.metrics import MetricVector


def _census(adjacency: list[set[int]], nodes: list[int]) -> list[int]:
    """Component sizes of the subgraph induced by ``nodes``."""
    inside = set(nodes)
    seen: set[int] = set()
    sizes = []
    for s in nodes:
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        size = 0
        while stack:
            v = stack.pop()
            size += 1
            for w in adjacency[v]:
                if w in inside and w not in seen:
                    seen.add(w)
                    stack.append(w)
        sizes.append(size)
    return sizes


def miuz_bruteforce(g: Graph, n: int) -> Fraction:
    alive = [v for v in range(g.node_count) if g.alive[v]]
    if not g.adjacency[n]:
        return Fraction(0)
    before = _census(g.adjacency, alive)
    stripped = [set(a) - {n} for a in g.adjacency]
    stripped[n] = set()
    after = _census(stripped, alive)
    if len(after) == len(before) + 1:
        return Fraction(0)
    return Fraction(sum(after), max(after)) - 1


def _layers(adjacency: list[set[int]], alive: set[int], s: int) -> tuple[dict, dict]:
    """BFS distances and shortest-path counts from ``s``, layer by layer."""
    dist = {s: 0}
    count = {s: 1}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adjacency[v]:
                if w not in alive:
                    continue
                if w not in dist:
                    dist[w] = dist[v] + 1
                    count[w] = 0
                    nxt.append(w)
                if dist[w] == dist[v] + 1:
                    count[w] += count[v]
        frontier = nxt
    return dist, count


def betweenness_bruteforce(g: Graph) -> MetricVector:
    """Pair-by-pair count: sigma_st(v) = sigma_sv * sigma_vt when v lies on a geodesic."""
    alive = {v for v in range(g.node_count) if g.alive[v]}
    info = {s: _layers(g.adjacency, alive, s) for s in alive}
    exact = {v: Fraction(0) for v in alive}
    for s, t in combinations(sorted(alive), 2):
        dist_s, cnt_s = info[s]
        if t not in dist_s:
            continue
        dist_t, cnt_t = info[t]
        d = dist_s[t]
        for v in alive:
            if v in (s, t) or v not in dist_s:
                continue
            if dist_s[v] + dist_t[v] == d:
                exact[v] += Fraction(cnt_s[v] * cnt_t[v], cnt_s[t])
    scores = np.full(g.node_count, np.nan)
    for v, value in exact.items():
        scores[v] = float(value)
    return MetricVector("betweenness", scores)


def harmonic_bruteforce(g: Graph) -> MetricVector:
    alive = {v for v in range(g.node_count) if g.alive[v]}
    scores = np.full(g.node_count, np.nan)
    for s in alive:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w in alive and w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        scores[s] = float(sum(Fraction(1, d) for d in dist.values() if d > 0))
    return MetricVector("harmonic", scores)


def articulation_bruteforce(g: Graph) -> set[int]:
    """Alive nodes whose removal leaves more components among the others."""
    alive = [v for v in range(g.node_count) if g.alive[v]]
    cut = set()
    for n in alive:
        rest = [v for v in alive if v != n]
        before = len(_census(g.adjacency, alive)) - (0 if g.adjacency[n] else 1)
        if len(_census(g.adjacency, rest)) > before:
            cut.add(n)
    return cut
