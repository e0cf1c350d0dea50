"""Undirected simple graph with an alive mask.

Nodes are the dense ids ``0..node_count-1``.  The only mutation is
:func:`disconnect_node`, which strips a node's edges and marks it dead.
Because nothing else ever changes the edge set, the current adjacency is
always the construction-time edge set restricted to alive nodes; the
compiled kernels exploit this by reading a frozen CSR copy plus the mask.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from miuz import _kernels


class GraphError(ValueError):
    """Raised on malformed edges or invalid node operations."""


class Graph:
    """Undirected simple graph over ``0..node_count-1``.

    Build it with :func:`build_graph`.  ``adjacency[u]`` is the set of
    neighbours of ``u`` in the current (possibly attacked) network and
    ``alive[u]`` is False once ``u`` has been disconnected.
    """

    def __init__(self, node_count: int, adjacency: list[set[int]],
                 indptr: np.ndarray, indices: np.ndarray):
        self.node_count = node_count
        self.adjacency = adjacency
        self.alive = np.ones(node_count, dtype=bool)
        self._indptr = indptr
        self._indices = indices
        self._edge_count = sum(len(a) for a in adjacency) // 2

    def __repr__(self):
        return (f"Graph(node_count={self.node_count}, edges={self.edge_count}, "
                f"alive={self.alive_count})")

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def alive_count(self) -> int:
        return int(self.alive.sum())

    @property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Construction-time CSR arrays; pair them with ``alive``."""
        return self._indptr, self._indices

    def is_fresh(self) -> bool:
        return bool(self.alive.all())

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edges(self) -> list[tuple[int, int]]:
        """Current edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.node_count)
                for v in sorted(self.adjacency[u]) if u < v]

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.node_count = self.node_count
        g.adjacency = [set(a) for a in self.adjacency]
        g.alive = self.alive.copy()
        g._indptr = self._indptr
        g._indices = self._indices
        g._edge_count = self._edge_count
        return g

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.node_count:
            raise GraphError(f"node {u} out of range 0..{self.node_count - 1}")


@dataclass(frozen=True)
class ComponentPartition:
    """Component labels (-1 for excluded nodes) and sizes in descending order."""

    label: np.ndarray
    sizes: list[int]

    @property
    def largest(self) -> int:
        return self.sizes[0] if self.sizes else 0

    @property
    def count(self) -> int:
        return len(self.sizes)


def build_graph(edges: Iterable[tuple[int, int]], node_count: int) -> Graph:
    """Build a :class:`Graph` from an edge list.

    Duplicate edges (in either orientation) collapse silently.  Self-loops
    and ids outside ``0..node_count-1`` raise :class:`GraphError`.
    """
    if node_count < 0:
        raise GraphError(f"node_count must be non-negative, got {node_count}")
    adjacency: list[set[int]] = [set() for _ in range(node_count)]
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        for x in (u, v):
            if not 0 <= x < node_count:
                raise GraphError(
                    f"edge ({u}, {v}) references node {x} outside 0..{node_count - 1}")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return _from_adjacency(adjacency)


def _from_adjacency(adjacency: list[set[int]]) -> Graph:
    node_count = len(adjacency)
    degrees = np.fromiter((len(a) for a in adjacency), dtype=np.int64, count=node_count)
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    indices = np.empty(int(indptr[-1]), dtype=np.int64)
    for u, nbrs in enumerate(adjacency):
        indices[indptr[u]:indptr[u + 1]] = sorted(nbrs)
    return Graph(node_count, adjacency, indptr, indices)


def disconnect_node(g: Graph, n: int) -> Graph:
    """Remove every edge incident to ``n`` and mark it dead, in place.

    Returns ``g`` for chaining.  Disconnecting a dead node is an error.
    """
    g._check_node(n)
    if not g.alive[n]:
        raise GraphError(f"node {n} has already been attacked")
    for m in g.adjacency[n]:
        g.adjacency[m].discard(n)
    g._edge_count -= len(g.adjacency[n])
    g.adjacency[n] = set()
    g.alive[n] = False
    return g


def connected_components(g: Graph, restrict_to_alive: bool = True) -> ComponentPartition:
    """Partition nodes into connected components.

    With ``restrict_to_alive`` dead nodes are labelled -1 and left out of
    the census; otherwise each dead node counts as its own singleton.
    """
    indptr, indices = g.csr
    labels, sizes = _kernels.component_labels(indptr, indices, g.alive)
    sizes = sizes.tolist()
    if not restrict_to_alive:
        dead = np.flatnonzero(~g.alive)
        labels[dead] = np.arange(len(sizes), len(sizes) + len(dead))
        sizes.extend([1] * len(dead))
    sizes.sort(reverse=True)
    return ComponentPartition(label=labels, sizes=sizes)


def largest_component_size(g: Graph) -> int:
    indptr, indices = g.csr
    _, sizes = _kernels.component_labels(indptr, indices, g.alive)
    return int(sizes.max()) if len(sizes) else 0


def articulation_points(g: Graph) -> set[int]:
    """Alive cut vertices of the alive subgraph (iterative DFS low-link)."""
    indptr, indices = g.csr
    _, _, is_cut, _ = _kernels.cut_vertex_split(indptr, indices, g.alive)
    return set(np.flatnonzero(is_cut).tolist())


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source`` over alive nodes; unreachable is ``inf``."""
    g._check_node(source)
    if not g.alive[source]:
        raise GraphError(f"source {source} is not alive")
    indptr, indices = g.csr
    hops = _kernels.bfs_hops(indptr, indices, g.alive, source)
    dist = hops.astype(float)
    dist[hops < 0] = np.inf
    return dist
