"""
Shrinking dissociation instances
================================
"""

import random

from graphconvex import dissociation_number
from graphconvex.kernels import nd_kernel, twin_partition, vc_kernel
from graphconvex.suites import random_twin_graph

rng = random.Random(3)
for _ in range(6):
    g = random_twin_graph(rng, 12)
    k = rng.randint(3, 5)
    nd, vc = nd_kernel(g, k), vc_kernel(g, k)
    print(f"n={g.n:>2} classes={len(twin_partition(g))} k={k} "
          f"diss={dissociation_number(g).value:>2} | "
          f"nd: {nd.decided if nd.decided is not None else f'{nd.graph.n} <= {nd.bound}'} | "
          f"vc: {vc.decided if vc.decided is not None else f'{vc.graph.n} <= {vc.bound}'}")
