"""
Closed forms against the exact solvers
======================================

Iteration time and monophonic gp on complete graphs, cycles, paths and wheels.
"""

from graphconvex import generate
from graphconvex.parameters import (closed_form, gp_number, iteration_time_graph,
                                    tree_iteration_time_p3)

print(f"{'family':>9} {'n':>2}  ti_p3 ti_geo ti_mono  gp_mono  closed")
for family in ("complete", "cycle", "path", "wheel"):
    for n in range(4, 10):
        g = generate(family, n)
        ti = [iteration_time_graph(k, g).value for k in ("p3", "geodesic", "monophonic")]
        gp = gp_number("monophonic", g).value
        print(f"{family:>9} {n:>2}  {ti[0]:>5} {ti[1]:>6} {ti[2]:>7}  {gp:>7}  "
              f"{closed_form('monophonic', (family, n), 'gp_mc')}")

# Trees: the degree pattern alone fixes the P3 iteration time
for seed in range(5):
    t = generate("random-tree", 11, seed=seed)
    print(seed, tree_iteration_time_p3(t), iteration_time_graph("p3", t).value)
