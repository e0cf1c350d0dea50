"""Small named graphs and a seeded random corpus shared by the tests."""
import numpy as np

from miuz.graph import build_graph


def path(n):
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def complete(n):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def star(n):
    """Center 0 with n - 1 leaves."""
    return build_graph([(0, i) for i in range(1, n)], n)


def empty(n):
    return build_graph([], n)


def random_graph(seed, max_n=50):
    """G(n, p) with n in 1..max_n and p drawn to mix sparse and dense graphs."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_n + 1))
    p = float(rng.choice([0.02, 0.05, 0.08, 0.15, 0.3, 0.6]))
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return build_graph(zip(iu[keep].tolist(), ju[keep].tolist()), n)


CORPUS_SEEDS = range(200)
