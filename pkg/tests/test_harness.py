import numpy as np
import pytest

from miuz.attack import AttackTrace, r_a_index, r_index, run_attack
from miuz.harness import (CellError, ConfigError, ExperimentConfig, lcc_curves,
                          run_experiment, strikes_to_half)
from miuz.netgen import generate


def s_trace(s):
    s = np.asarray(s, dtype=float)
    n = 100
    return AttackTrace(n, "x", "sequential", nodes=np.arange(len(s)),
                       scores=np.zeros(len(s)), lcc=np.round(s * n).astype(np.int64))


@pytest.fixture(scope="module")
def small_table():
    config = ExperimentConfig(alphas=[2.1], replicates=2, n=20, metrics=["degree"],
                              a_values=[5])
    return run_experiment(config)


def test_small_table_bookkeeping(small_table):
    assert len(small_table.rows) == 1
    row = small_table.rows[0]
    assert (row.alpha, row.metric, row.replicates) == (2.1, "degree", 2)
    traces = small_table.traces[2.1, "degree"]
    assert len(traces) == 2
    assert row.r_mean == pytest.approx(np.mean([r_index(t) for t in traces]))
    assert row.ra_mean[5] == pytest.approx(np.mean([r_a_index(t, 5) for t in traces]))
    assert row.r_sd == pytest.approx(np.std([r_index(t) for t in traces], ddof=1))


def test_cells_match_direct_attack(small_table):
    config = small_table.config
    g = generate(config.graph_spec(0, 1))
    direct = run_attack(g, "degree")
    assert np.array_equal(small_table.traces[2.1, "degree"][1].nodes, direct.nodes)


def test_deterministic(small_table):
    again = run_experiment(small_table.config)
    assert again.rows == small_table.rows


def test_parallel_matches_serial():
    config = ExperimentConfig(alphas=[2.1, 2.3], replicates=3, n=60,
                              metrics=["miuz", "degree", "random"], a_values=[5, 10])
    serial = run_experiment(config, jobs=1)
    parallel = run_experiment(config, jobs=3)
    assert serial.rows == parallel.rows


def test_progress_sink():
    calls = []
    config = ExperimentConfig(alphas=[2.2], replicates=2, n=30, metrics=["degree", "miuz"])
    run_experiment(config, progress=lambda d, t, c: calls.append((d, t, c)))
    assert [c[0] for c in calls] == [1, 2, 3, 4]
    assert all(c[1] == 4 for c in calls)


def test_rows_sorted_and_complete():
    config = ExperimentConfig(alphas=[2.3, 2.1], replicates=1, n=30,
                              metrics=["miuz", "betweenness"], a_values=[5])
    table = run_experiment(config)
    keys = [(r.alpha, r.metric) for r in table.rows]
    assert keys == sorted(keys)
    assert len(keys) == 4
    for r in table.rows:
        assert 0 <= r.r_mean <= 1
        assert 0 <= r.ra_mean[5] <= 1


def test_curves_single_replicate():
    config = ExperimentConfig(alphas=[2.1], replicates=1, n=40, metrics=["harmonic"],
                              a_values=[5])
    table = run_experiment(config)
    curve = lcc_curves(table)[2.1, "harmonic"]
    assert np.array_equal(curve, table.traces[2.1, "harmonic"][0].s)


def test_curves_non_increasing():
    config = ExperimentConfig(alphas=[2.2], replicates=4, n=80, metrics=["miuz", "degree"],
                              a_values=[5])
    for curve in lcc_curves(config).values():
        assert (np.diff(curve) <= 1e-15).all()


def test_breaking_points_per_replicate():
    config = ExperimentConfig(alphas=[2.1], replicates=3, n=60, metrics=["miuz", "degree"],
                              a_values=[5])
    table = run_experiment(config)
    points = table.breaking_points(2.1)
    assert len(points) == 3
    assert all(p is None or 1 <= p <= 60 for p in points)


@pytest.mark.parametrize("kwargs", [
    dict(alphas=[]),
    dict(alphas=[2.1], replicates=0),
    dict(alphas=[2.1], n=20, a_values=[30]),
    dict(alphas=[2.1], metrics=["pagerank"]),
    dict(alphas=[2.1], mode="batch"),
    dict(alphas=[0.9]),
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        ExperimentConfig(**kwargs)


def test_cell_errors_carry_coordinates(monkeypatch):
    import miuz.harness as harness

    def boom(*args, **kwargs):
        raise RuntimeError("kaboom")

    monkeypatch.setattr(harness, "run_attack", boom)
    config = ExperimentConfig(alphas=[2.1], replicates=1, n=20, metrics=["degree"],
                              a_values=[5])
    with pytest.raises(CellError) as info:
        run_experiment(config)
    assert (info.value.alpha, info.value.replicate, info.value.metric) == (2.1, 0, "degree")


def test_strikes_to_half():
    assert strikes_to_half(s_trace([.6, .45, .2])) == 2
    assert strikes_to_half(s_trace([.4, .3])) == 1
    assert strikes_to_half(s_trace([.9, .8])) == 100


def test_strikes_to_half_single_node():
    from miuz.graph import build_graph
    trace = run_attack(build_graph([], 1), "degree")
    assert trace.s.tolist() == [0.0]
    assert strikes_to_half(trace) == 1


def test_config_error_is_value_error():
    assert issubclass(ConfigError, ValueError)
