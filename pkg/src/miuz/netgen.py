"""Scale-free test networks: power-law degree sequence + erased configuration model.

Randomness comes from numpy's PCG64 bit generator, which produces the same
stream on every platform for a given seed.  Independent streams for a
batch of graphs are derived with :func:`mix_seed` (SplitMix64 finaliser).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from miuz.graph import Graph, _from_adjacency

_MASK64 = (1 << 64) - 1


class GenSpecError(ValueError):
    pass


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def mix_seed(master_seed: int, *indices: int) -> int:
    """Fold ``indices`` into ``master_seed`` with SplitMix64; returns a 64-bit int.

    ``mix_seed(s, i, j)`` = ``sm(sm(sm(s) ^ i) ^ j)`` where ``sm`` is the
    SplitMix64 step.  Depends only on the values, never on call order.
    """
    h = _splitmix64(master_seed & _MASK64)
    for i in indices:
        h = _splitmix64(h ^ (i & _MASK64))
    return h


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated network.

    ``k_max`` defaults to the structural cutoff ``floor(sqrt(n))``.
    """

    n: int
    alpha: float
    k_min: int = 1
    k_max: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise GenSpecError(f"n must be at least 2, got {self.n}")
        if not self.alpha > 1:
            raise GenSpecError(f"alpha must exceed 1, got {self.alpha}")
        if self.k_max is None:
            object.__setattr__(self, "k_max", max(math.isqrt(self.n), self.k_min))
        if self.k_min < 1:
            raise GenSpecError(f"k_min must be at least 1, got {self.k_min}")
        if self.k_min > self.k_max:
            raise GenSpecError(f"k_min ({self.k_min}) exceeds k_max ({self.k_max})")
        if self.k_max > self.n - 1:
            raise GenSpecError(f"k_max ({self.k_max}) exceeds n - 1 ({self.n - 1})")


def degree_pmf(alpha: float, k_min: int, k_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Support ``k_min..k_max`` and normalised probabilities ``k**-alpha``."""
    support = np.arange(k_min, k_max + 1)
    weights = support.astype(float) ** -alpha
    return support, weights / weights.sum()


def sample_degree_sequence(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    """Draw ``spec.n`` degrees by inverse CDF, then fix the parity of the sum.

    An odd total is made even by adding one stub to a uniformly chosen node
    below ``k_max``; if every node is saturated one node loses a stub instead.
    """
    if spec.k_min > spec.k_max:
        raise GenSpecError(f"k_min ({spec.k_min}) exceeds k_max ({spec.k_max})")
    support, pmf = degree_pmf(spec.alpha, spec.k_min, spec.k_max)
    cdf = np.cumsum(pmf)
    cdf[-1] = 1.0
    u = rng.random(spec.n)
    degrees = support[np.searchsorted(cdf, u, side="right")]
    if degrees.sum() % 2:
        room = np.flatnonzero(degrees < spec.k_max)
        if len(room):
            degrees[room[rng.integers(len(room))]] += 1
        else:
            degrees[rng.integers(spec.n)] -= 1
    return degrees.astype(np.int64)


def configuration_model(degrees, rng: np.random.Generator) -> Graph:
    """Uniform stub matching; self-loops and repeated edges are then dropped."""
    degrees = np.asarray(degrees, dtype=np.int64)
    n = len(degrees)
    if (degrees < 0).any():
        raise GenSpecError("degrees must be non-negative")
    if degrees.sum() % 2:
        raise GenSpecError(f"degree sum {degrees.sum()} is odd")
    if n and degrees.max() > n - 1:
        raise GenSpecError(f"degree {degrees.max()} exceeds n - 1 = {n - 1}")
    stubs = np.repeat(np.arange(n), degrees)
    stubs = stubs[rng.permutation(len(stubs))].reshape(-1, 2)
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for u, v in stubs.tolist():
        if u != v:
            adjacency[u].add(v)
            adjacency[v].add(u)
    return _from_adjacency(adjacency)


def generate(spec: GenSpec) -> Graph:
    """Same spec, same graph."""
    rng = make_rng(spec.seed)
    return configuration_model(sample_degree_sequence(spec, rng), rng)
