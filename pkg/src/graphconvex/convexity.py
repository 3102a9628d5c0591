"""Interval functions, hulls and iteration traces for four path convexities.

* ``geodesic``: vertices on shortest paths between members,
* ``monophonic``: vertices on induced (chordless) paths,
* ``p3``: vertices with at least two neighbours in the set,
* ``p3star``: vertices with two non-adjacent neighbours in the set.

Per-graph tables (all-pairs distances, geodesic and monophonic pair
intervals) are cached on the :class:`~graphconvex.graph.Graph` instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import UsageError
from .graph import Graph, VertexSet, all_pairs_distances, iter_bits

__all__ = [
    "ConvexityKind",
    "IterationTrace",
    "PositionCheck",
    "interval",
    "pair_interval",
    "exists_induced_path_through",
    "find_induced_path_through",
    "hull",
    "iteration_trace",
    "is_convex",
    "is_general_position",
    "engine",
]


class ConvexityKind(str, Enum):
    GEODESIC = "geodesic"
    MONOPHONIC = "monophonic"
    P3 = "p3"
    P3STAR = "p3star"

    def __str__(self) -> str:
        return self.value


def as_kind(kind) -> ConvexityKind:
    try:
        return ConvexityKind(kind)
    except ValueError:
        raise UsageError(f"unknown convexity {kind!r}; expected one of "
                         f"{[k.value for k in ConvexityKind]}") from None


# -- induced path search -----------------------------------------------------

def _reach(adj, start: int, region: int) -> int:
    """Vertices reachable from ``start`` moving only through ``region``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & region & ~seen
        seen |= frontier
    return seen


def _shortest_path_within(adj, start: int, target: int, region: int) -> list[int]:
    parent = {start: None}
    frontier = [start]
    while frontier and target not in parent:
        nxt = []
        for v in frontier:
            for w in iter_bits(adj[v] & region):
                if w not in parent:
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def _search_induced_path(g: Graph, x: int, y: int, z: int) -> list[int] | None:
    adj = g.adj
    full = g.full_mask
    ybit, zbit = 1 << y, 1 << z

    # forb: closed neighbourhoods of every path vertex except the current end v.
    # Any later vertex must avoid forb, which keeps the path chordless.
    def extend(path: list[int], forb: int) -> list[int] | None:
        v = path[-1]
        region = full & ~forb & ~(1 << v)
        reach = _reach(adj, v, region)
        if not reach & ybit or not reach & zbit:
            return None
        forb_next = forb | adj[v] | (1 << v)
        for w in iter_bits(adj[v] & region & ~ybit):
            if w == z:
                # once z is on the path any shortest completion stays chordless
                tail_region = full & ~forb_next
                if _reach(adj, z, tail_region) & ybit:
                    return path + _shortest_path_within(adj, z, y, tail_region)
                continue
            found = extend(path + [w], forb_next)
            if found is not None:
                return found
        return None

    return extend([x], 0)


def find_induced_path_through(g: Graph, x: int, y: int, z: int) -> list[int] | None:
    """Return a chordless x-y path through ``z``, or ``None`` if there is none."""
    for v in (x, y, z):
        g.check_vertex(v)
    if len({x, y, z}) != 3:
        raise UsageError("x, y and z must be pairwise distinct")
    return _search_induced_path(g, x, y, z)


def exists_induced_path_through(g: Graph, x: int, y: int, z: int) -> bool:
    """Whether some induced path from ``x`` to ``y`` contains ``z``.

    Exhaustive backtracking over chordless extensions of a path starting at
    ``x``, visiting neighbours in ascending order.  A branch is cut as soon as
    ``y`` or ``z`` is unreachable from the current end inside the vertices not
    yet dominated by the earlier path.
    """
    return find_induced_path_through(g, x, y, z) is not None


# -- per-graph engines -------------------------------------------------------

class _Engine:
    def __init__(self, g: Graph):
        self.g = g

    def pair_mask(self, x: int, y: int) -> int:
        raise NotImplementedError

    def interval_mask(self, s: int) -> int:
        acc = s
        members = list(iter_bits(s))
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                acc |= self.pair_mask(x, y)
        return acc


class _P3Engine(_Engine):
    def pair_mask(self, x, y):
        adj = self.g.adj
        return (1 << x) | (1 << y) | (adj[x] & adj[y])

    def interval_mask(self, s):
        acc = s
        for z, row in enumerate(self.g.adj):
            if (row & s).bit_count() >= 2:
                acc |= 1 << z
        return acc


class _P3StarEngine(_Engine):
    def pair_mask(self, x, y):
        adj = self.g.adj
        if adj[x] >> y & 1:
            return (1 << x) | (1 << y)
        return (1 << x) | (1 << y) | (adj[x] & adj[y])

    def interval_mask(self, s):
        adj = self.g.adj
        acc = s
        for z in iter_bits(self.g.full_mask & ~s):
            nb = adj[z] & s
            for a in iter_bits(nb):
                if nb & ~adj[a] & ~(1 << a):
                    acc |= 1 << z
                    break
        return acc


class _GeodesicEngine(_Engine):
    def __init__(self, g):
        super().__init__(g)
        dist = all_pairs_distances(g)
        n = g.n
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                m = (1 << x) | (1 << y)
                d = dist[x][y]
                if d != math.inf:
                    dx, dy = dist[x], dist[y]
                    for z in range(n):
                        if dx[z] + dy[z] == d:
                            m |= 1 << z
                table[x][y] = table[y][x] = m
        self.table = table

    def pair_mask(self, x, y):
        return self.table[x][y]

    def interval_mask(self, s):
        acc = s
        table = self.table
        for x in iter_bits(s):
            row = table[x]
            for y in iter_bits(s >> (x + 1) << (x + 1)):
                acc |= row[y]
        return acc


class _MonophonicEngine(_Engine):
    def __init__(self, g):
        super().__init__(g)
        self.memo: dict[tuple[int, int], int] = {}

    def pair_mask(self, x, y):
        key = (x, y) if x < y else (y, x)
        m = self.memo.get(key)
        if m is None:
            m = self._compute(*key)
            self.memo[key] = m
        return m

    def _compute(self, x, y):
        g = self.g
        m = (1 << x) | (1 << y)
        if g.adj[x] >> y & 1:
            return m
        for z in range(g.n):
            if m >> z & 1:
                continue
            path = _search_induced_path(g, x, y, z)
            if path is not None:
                # every vertex on a found path is certified at once
                for v in path:
                    m |= 1 << v
        return m


_ENGINES = {
    ConvexityKind.GEODESIC: _GeodesicEngine,
    ConvexityKind.MONOPHONIC: _MonophonicEngine,
    ConvexityKind.P3: _P3Engine,
    ConvexityKind.P3STAR: _P3StarEngine,
}


def engine(kind, g: Graph) -> _Engine:
    """The cached interval engine for ``(kind, g)``."""
    kind = as_kind(kind)
    key = ("engine", kind)
    eng = g._cache.get(key)
    if eng is None:
        eng = g._cache[key] = _ENGINES[kind](g)
    return eng


# -- public operations ------------------------------------------------------

def interval(kind, g: Graph, s: Iterable[int]) -> VertexSet:
    """One application of the interval function of ``kind`` to ``s``."""
    return VertexSet.from_mask(engine(kind, g).interval_mask(g.to_mask(s)))


def pair_interval(kind, g: Graph, x: int, y: int) -> VertexSet:
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise UsageError("pair_interval needs two distinct vertices")
    return VertexSet.from_mask(engine(kind, g).pair_mask(x, y))


def hull_mask(eng: _Engine, s: int) -> int:
    while True:
        nxt = eng.interval_mask(s)
        if nxt == s:
            return s
        s = nxt


def hull(kind, g: Graph, s: Iterable[int]) -> VertexSet:
    """Convex hull: the least fixpoint of the interval function above ``s``."""
    return VertexSet.from_mask(hull_mask(engine(kind, g), g.to_mask(s)))


def iteration_steps(eng: _Engine, s: int) -> int:
    steps = 0
    while True:
        nxt = eng.interval_mask(s)
        if nxt == s:
            return steps
        s = nxt
        steps += 1


@dataclass(frozen=True)
class IterationTrace:
    """First-appearance times of the hull iteration.

    ``time[v]`` is ``None`` for vertices that never enter the hull.
    """

    seed: VertexSet
    time: dict
    hull: VertexSet
    steps: int

    def layer(self, k: int) -> VertexSet:
        """Vertices whose iteration time is exactly ``k``."""
        return VertexSet(v for v, t in self.time.items() if t == k)


def iteration_trace(kind, g: Graph, s: Iterable[int]) -> IterationTrace:
    eng = engine(kind, g)
    cur = g.to_mask(s)
    seed = cur
    time: dict[int, int | None] = {v: None for v in range(g.n)}
    for v in iter_bits(cur):
        time[v] = 0
    steps = 0
    while True:
        nxt = eng.interval_mask(cur)
        if nxt == cur:
            break
        steps += 1
        for v in iter_bits(nxt & ~cur):
            time[v] = steps
        cur = nxt
    return IterationTrace(VertexSet.from_mask(seed), time, VertexSet.from_mask(cur), steps)


def is_convex(kind, g: Graph, s: Iterable[int]) -> bool:
    m = g.to_mask(s)
    return engine(kind, g).interval_mask(m) == m


@dataclass(frozen=True)
class PositionCheck:
    """Outcome of a general-position test; falsy when a violation exists.

    ``witness`` is ``(x, y, z)`` with ``z`` in the interval of ``{x, y}``.
    """

    ok: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def find_violation(eng: _Engine, s: int) -> tuple[int, int, int] | None:
    members = list(iter_bits(s))
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            inside = eng.pair_mask(x, y) & s & ~((1 << x) | (1 << y))
            if inside:
                return x, y, (inside & -inside).bit_length() - 1
    return None


def is_general_position(kind, g: Graph, s: Iterable[int]) -> PositionCheck:
    """No member of ``s`` lies in the interval of two other members."""
    m = g.to_mask(s)
    if m.bit_count() <= 2:
        return PositionCheck(True)
    witness = find_violation(engine(kind, g), m)
    return PositionCheck(witness is None, witness)
