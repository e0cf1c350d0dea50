"""Batch experiments: alpha sweep x replicates x metrics on generated networks.

Every (alpha, replicate) pair gets its own generated graph, seeded by
``mix_seed(master_seed, alpha_index, replicate)``, and every metric attacks
a fresh copy of that same graph.  The cell grid can run in worker
processes; results are keyed by cell and reduced in a fixed order, so the
output never depends on scheduling.
"""
from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from miuz.attack import MODES, AttackTrace, breaking_point, r_a_index, r_index, run_attack
from miuz.metrics import ATTACK_KINDS, METRIC_KINDS
from miuz.netgen import GenSpec, generate, mix_seed

ProgressSink = Callable[[int, int, tuple], None]


class ConfigError(ValueError):
    pass


class CellError(RuntimeError):
    def __init__(self, alpha, replicate, metric, cause):
        super().__init__(f"cell alpha={alpha} replicate={replicate} metric={metric} "
                         f"failed: {cause!r}")
        self.alpha = alpha
        self.replicate = replicate
        self.metric = metric
        self.cause = cause


@dataclass(frozen=True)
class ExperimentConfig:
    alphas: Sequence[float]
    replicates: int = 50
    n: int = 1000
    metrics: Sequence[str] = METRIC_KINDS
    mode: str = "sequential"
    a_values: Sequence[int] = (5, 10, 20, 30)
    master_seed: int = 0
    k_min: int = 1
    k_max: Optional[int] = None

    def __post_init__(self):
        for name in ("alphas", "metrics", "a_values"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.alphas:
            raise ConfigError("alphas must not be empty")
        if len(set(self.alphas)) != len(self.alphas):
            raise ConfigError(f"duplicate alphas: {self.alphas}")
        if self.replicates < 1:
            raise ConfigError(f"replicates must be at least 1, got {self.replicates}")
        if not self.metrics:
            raise ConfigError("metrics must not be empty")
        bad = [m for m in self.metrics if m not in ATTACK_KINDS]
        if bad:
            raise ConfigError(f"unknown metrics {bad}; expected from {ATTACK_KINDS}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        bad = [a for a in self.a_values if not 1 <= a <= self.n]
        if bad:
            raise ConfigError(f"a_values must lie in 1..n={self.n}, got {bad}")
        # validates alpha / degree bounds up front
        for alpha in self.alphas:
            GenSpec(self.n, alpha, self.k_min, self.k_max)

    def graph_spec(self, alpha_index: int, replicate: int) -> GenSpec:
        return GenSpec(self.n, self.alphas[alpha_index], self.k_min, self.k_max,
                       seed=mix_seed(self.master_seed, alpha_index, replicate))

    def attack_seed(self, alpha_index: int, replicate: int) -> int:
        return mix_seed(self.master_seed, alpha_index, replicate, 1)


@dataclass
class SummaryRow:
    alpha: float
    metric: str
    replicates: int
    r_mean: float
    r_sd: float
    ra_mean: dict[int, float]
    ra_sd: dict[int, float]


@dataclass
class SummaryTable:
    """Mean/sd of R and R_a per (alpha, metric), plus the underlying traces."""

    config: ExperimentConfig
    rows: list[SummaryRow]
    traces: dict[tuple[float, str], list[AttackTrace]] = field(repr=False)

    def row(self, alpha: float, metric: str) -> SummaryRow:
        for r in self.rows:
            if r.alpha == alpha and r.metric == metric:
                return r
        raise KeyError((alpha, metric))

    def curves(self) -> dict[tuple[float, str], np.ndarray]:
        """Mean s(q) across replicates for every (alpha, metric)."""
        return {key: np.mean([t.s for t in ts], axis=0) for key, ts in self.traces.items()}

    def replicate_traces(self, alpha: float, replicate: int) -> dict[str, AttackTrace]:
        return {m: self.traces[alpha, m][replicate] for m in self.config.metrics}

    def breaking_points(self, alpha: float) -> list[Optional[int]]:
        return [breaking_point(self.replicate_traces(alpha, i))
                for i in range(self.config.replicates)]


@functools.lru_cache(maxsize=4)
def _graph(spec: GenSpec):
    return generate(spec)


def _run_cell(config: ExperimentConfig, alpha_index: int, replicate: int,
              metric: str) -> AttackTrace:
    g = _graph(config.graph_spec(alpha_index, replicate))
    seed = config.attack_seed(alpha_index, replicate) if metric == "random" else None
    return run_attack(g, metric, config.mode, seed=seed)


def _safe_cell(config, alpha_index, replicate, metric):
    try:
        return _run_cell(config, alpha_index, replicate, metric)
    except Exception as exc:
        raise CellError(config.alphas[alpha_index], replicate, metric, exc) from exc


def _sd(values: np.ndarray) -> float:
    return float(np.std(values, ddof=1)) if len(values) > 1 else 0.0


def run_experiment(config: ExperimentConfig, progress: Optional[ProgressSink] = None,
                   jobs: int = 1) -> SummaryTable:
    """Run the whole (alpha, replicate, metric) grid and aggregate it.

    ``progress(done, total, (alpha, replicate, metric))`` is called from the
    parent process after each finished cell, in completion order.
    """
    cells = [(ai, rep, m) for ai in range(len(config.alphas))
             for rep in range(config.replicates) for m in config.metrics]
    results: dict[tuple[int, int, str], AttackTrace] = {}

    def report(cell):
        if progress is not None:
            ai, rep, m = cell
            progress(len(results), len(cells), (config.alphas[ai], rep, m))

    if jobs <= 1:
        for cell in cells:
            results[cell] = _safe_cell(config, *cell)
            report(cell)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(_safe_cell, config, *cell): cell for cell in cells}
            for fut in as_completed(futures):
                cell = futures[fut]
                results[cell] = fut.result()
                report(cell)
    return _summarize(config, results)


def _summarize(config, results) -> SummaryTable:
    traces = {}
    rows = []
    for ai, alpha in enumerate(config.alphas):
        for m in config.metrics:
            ts = [results[ai, rep, m] for rep in range(config.replicates)]
            traces[alpha, m] = ts
            r = np.array([r_index(t) for t in ts])
            ra = {a: np.array([r_a_index(t, a) for t in ts]) for a in config.a_values}
            rows.append(SummaryRow(
                alpha=alpha, metric=m, replicates=len(ts),
                r_mean=float(r.mean()), r_sd=_sd(r),
                ra_mean={a: float(v.mean()) for a, v in ra.items()},
                ra_sd={a: _sd(v) for a, v in ra.items()}))
    rows.sort(key=lambda row: (row.alpha, row.metric))
    return SummaryTable(config, rows, traces)


def lcc_curves(config, jobs: int = 1) -> dict[tuple[float, str], np.ndarray]:
    """Mean s(q) series per (alpha, metric); accepts a config or a finished table."""
    table = config if isinstance(config, SummaryTable) else run_experiment(config, jobs=jobs)
    return table.curves()


def strikes_to_half(trace: AttackTrace) -> int:
    """First strike after which less than half the network is in the LCC."""
    below = np.flatnonzero(trace.s < 0.5)
    return int(below[0]) + 1 if len(below) else trace.original_n
