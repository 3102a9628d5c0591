"""
Watching the clause chain fire
==============================

Build the P3 gadget for a satisfiable 3-CNF and trace the seed a satisfying
assignment picks.
"""

from graphconvex import iteration_trace
from graphconvex.graph import graph_facts
from graphconvex.reductions import (build_sat_iteration_gadget, parse_dimacs, sat_witness_seed,
                                    verify_sat_forward)

f = parse_dimacs("""
c three clauses over four variables
p cnf 4 3
1 -2 3 0
-1 2 4 0
2 3 -4 0
""")
gad = build_sat_iteration_gadget(f)
print(gad.graph, "target", gad.target, "bipartite", graph_facts(gad.graph).is_bipartite)

assignment = {0: True, 1: True, 2: False, 3: False}
seed = sat_witness_seed(gad, assignment)
trace = iteration_trace("p3", gad.graph, seed)
for i in range(1, f.m + 1):
    primed, plain = gad["c'_" + str(i)], gad["c_" + str(i)]
    print(f"c'_{i} at {trace.time[primed]}, c_{i} at {trace.time[plain]}")
print(verify_sat_forward(gad, assignment))

# Drop p''_1 and the chain never starts
print(verify_sat_forward(gad, assignment, seed=seed - {gad["p''_1"]}).failure)
