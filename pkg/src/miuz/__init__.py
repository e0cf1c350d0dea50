"""Miuz node-impact index, targeted attacks and R-index robustness."""
from miuz.attack import (AttackError, AttackTrace, Strike, breaking_point, r_a_index,
                         r_index, resilience_count, run_attack)
from miuz.graph import (ComponentPartition, Graph, GraphError, articulation_points,
                        bfs_distances, build_graph, connected_components, disconnect_node)
from miuz.harness import (ExperimentConfig, SummaryTable, lcc_curves, run_experiment,
                          strikes_to_half)
from miuz.metrics import (METRIC_KINDS, MetricVector, betweenness_all, degree_all,
                          harmonic_all, miuz_all, miuz_single)
from miuz.netgen import (GenSpec, configuration_model, generate, mix_seed,
                         sample_degree_sequence)

__version__ = "0.1.0"
