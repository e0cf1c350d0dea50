"""One network, five attack strategies.

Generates a 1000-node scale-free network, attacks it sequentially with each
metric plus a random baseline, and prints R and the early-damage index R_a.
Lower means the attack hurt more.

    python demos/02_attack_comparison.py [alpha] [seed]
"""
import sys

from miuz import GenSpec, generate, r_a_index, r_index, run_attack, strikes_to_half
from miuz.metrics import ATTACK_KINDS

alpha = float(sys.argv[1]) if len(sys.argv) > 1 else 2.1
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0

g = generate(GenSpec(1000, alpha, seed=seed))
print(f"n={g.node_count} edges={g.edge_count} alpha={alpha} seed={seed}\n")
print(f"{'strategy':<12} {'R':>8} {'R_5':>8} {'R_10':>8}  strikes to half")
for kind in ATTACK_KINDS:
    trace = run_attack(g, kind, seed=seed if kind == "random" else None)
    print(f"{kind:<12} {r_index(trace):8.4f} {r_a_index(trace, 5):8.4f} "
          f"{r_a_index(trace, 10):8.4f}  {strikes_to_half(trace)}")

# the first few Miuz strikes, with the giant component shrinking
trace = run_attack(g, "miuz")
print("\nfirst miuz strikes:")
for st in trace.strikes[:8]:
    print(f"  q={st.q} node={st.node} miuz={st.score_at_selection:.3f} "
          f"lcc={st.lcc_after} s={st.s:.3f}")
