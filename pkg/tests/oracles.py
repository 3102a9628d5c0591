"""Brute-force reference implementations built on networkx path enumeration.

Deliberately share nothing with graphconvex beyond the Graph container.
"""

import itertools

import networkx as nx


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _chordless(h, path):
    return all(not h.has_edge(path[i], path[j])
               for i in range(len(path)) for j in range(i + 2, len(path)))


def pair_interval(kind, g, x, y):
    h = to_nx(g)
    out = {x, y}
    if kind == "geodesic":
        if nx.has_path(h, x, y):
            for p in nx.all_shortest_paths(h, x, y):
                out |= set(p)
    elif kind == "monophonic":
        for p in nx.all_simple_paths(h, x, y):
            if _chordless(h, p):
                out |= set(p)
    elif kind == "p3":
        out |= set(h[x]) & set(h[y])
    elif kind == "p3star":
        if not h.has_edge(x, y):
            out |= set(h[x]) & set(h[y])
    return out


def interval(kind, g, s):
    s = set(s)
    out = set(s)
    for x, y in itertools.combinations(sorted(s), 2):
        out |= pair_interval(kind, g, x, y)
    return out


def all_pair_intervals(kind, g):
    return {(x, y): pair_interval(kind, g, x, y)
            for x, y in itertools.combinations(range(g.n), 2)}


def in_general_position(table, s):
    for x, y in itertools.combinations(sorted(s), 2):
        if any(z in table[(x, y)] for z in s if z not in (x, y)):
            return False
    return True


def gp(kind, g):
    table = all_pair_intervals(kind, g)
    for size in range(g.n, -1, -1):
        for s in itertools.combinations(range(g.n), size):
            if in_general_position(table, s):
                return size
    return 0


def ti_set(kind, g, s):
    cur = set(s)
    steps = 0
    while True:
        nxt = interval(kind, g, cur)
        if nxt == cur:
            return steps
        cur = nxt
        steps += 1


def ti_graph(kind, g):
    return max(ti_set(kind, g, s) for size in range(g.n + 1)
               for s in itertools.combinations(range(g.n), size))


def dissociation(g):
    h = to_nx(g)
    for size in range(g.n, -1, -1):
        for s in itertools.combinations(range(g.n), size):
            if max((d for _, d in h.subgraph(s).degree()), default=0) <= 1:
                return size
    return 0


def induced_path_through(g, x, y, z):
    h = to_nx(g)
    return any(z in p and _chordless(h, p) for p in nx.all_simple_paths(h, x, y))
