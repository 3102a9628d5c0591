"""
Where the clique gadget comes up short
======================================

The monophonic gp of the clique gadget tracks omega(H) + 1, except when H is
itself complete: no outside vertex u_k is left to extend the clique.
"""

from graphconvex import generate, gp_number
from graphconvex.graph import Graph, clique_number
from graphconvex.reductions import build_monophonic_gp_gadget

cases = {
    "P3": generate("path", 3),
    "C5": generate("cycle", 5),
    "K4 minus an edge": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "K3": generate("complete", 3),
    "K5": generate("complete", 5),
}
for name, h in cases.items():
    gad = build_monophonic_gp_gadget(h)
    rep = gp_number("monophonic", gad.graph, cap=15)
    print(f"{name:>17}: omega+1 = {clique_number(h) + 1}, gp = {rep.value}, witness "
          f"{[gad.graph.labels[v] for v in sorted(rep.witness)]}")
