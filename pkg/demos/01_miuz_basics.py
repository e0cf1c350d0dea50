"""Miuz on small graphs.

A node's Miuz score is T/L - 1, where T counts the alive nodes and L is the
largest component left after cutting every edge of that node.  It is zero
unless the node is an articulation point, and a star centre reaches N - 1.

    python demos/01_miuz_basics.py
"""
from miuz import articulation_points, build_graph, metrics

# two triangles joined by a bridge 2-3, plus a pendant 6 on node 5
bowtie = build_graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)], 7)

print("cut vertices:", sorted(articulation_points(bowtie)))
vec = metrics.miuz_all(bowtie)
for n in range(bowtie.node_count):
    print(f"  node {n}: miuz = {vec.exact(n)}")

# the four metrics side by side
print("\nnode  miuz  degree  betweenness  harmonic")
table = {k: metrics.compute(bowtie, k) for k in metrics.METRIC_KINDS}
for n in range(bowtie.node_count):
    row = [table[k].scores[n] for k in metrics.METRIC_KINDS]
    print(f"{n:>4}  " + "  ".join(f"{x:.3g}" for x in row))

star = build_graph([(0, i) for i in range(1, 10)], 10)
print("\nstar K_1,9 centre:", metrics.miuz_all(star).exact(0))
