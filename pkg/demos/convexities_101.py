"""
Four convexities on small graphs
================================

Intervals, hulls and iteration traces side by side.
"""

from graphconvex import graph, convexity

KINDS = ["geodesic", "monophonic", "p3", "p3star"]

# A 5-cycle with two non-adjacent seeds
c5 = graph.generate("cycle", 5)
for kind in KINDS:
    print(f"{kind:>10}  I({{0,2}}) = {sorted(convexity.interval(kind, c5, {0, 2}))}")

# The monophonic interval grabs the long way round too: 0-4-3-2 has no chord.
print(convexity.find_induced_path_through(c5, 0, 2, 3))

# Hull and the layer in which each vertex first appears
w = graph.generate("wheel", 7)
trace = convexity.iteration_trace("p3", w, {0, 2})
print("hull", sorted(trace.hull), "in", trace.steps, "steps")
for k in range(trace.steps + 1):
    print("  layer", k, sorted(trace.layer(k)))

# General position: a violating triple comes back as a witness
chk = convexity.is_general_position("geodesic", graph.generate("path", 4), {0, 1, 3})
print(bool(chk), chk.witness)
