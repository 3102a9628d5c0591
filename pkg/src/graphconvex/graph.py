"""Simple undirected graphs on vertices ``0..n-1`` with bitmask adjacency rows.

Vertex subsets are plain Python ints internally (bit ``v`` set means vertex
``v`` is a member).  :class:`VertexSet` is the public, hashable face of such a
mask.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, UsageError

__all__ = [
    "Graph",
    "VertexSet",
    "GraphFamily",
    "GraphFacts",
    "iter_bits",
    "mask_of",
    "parse_edge_list",
    "serialize_edge_list",
    "read_edge_list",
    "write_edge_list",
    "generate",
    "add_universal_vertex",
    "simplicial_closure",
    "graph_facts",
    "induced_subgraph",
    "clique_number",
    "FAMILIES",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class VertexSet(frozenset):
    """Immutable set of vertex indices that also knows its bitmask."""

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        vs = cls(iter_bits(mask))
        return vs

    @property
    def mask(self) -> int:
        return mask_of(self)

    def __or__(self, other):
        return VertexSet(frozenset.__or__(self, frozenset(other)))

    def __and__(self, other):
        return VertexSet(frozenset.__and__(self, frozenset(other)))

    def __sub__(self, other):
        return VertexSet(frozenset.__sub__(self, frozenset(other)))

    union = __or__
    intersection = __and__
    difference = __sub__

    def __repr__(self) -> str:
        return "VertexSet({%s})" % ", ".join(map(str, sorted(self)))


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  ``labels`` optionally
    maps vertex indices to role names such as ``"c_3"`` or ``"u"``.
    """

    __slots__ = ("n", "adj", "labels", "_cache")

    def __init__(self, n: int, adj: Iterable[int], labels: Mapping[int, str] | None = None):
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise UsageError(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise UsageError(f"vertex {v} has a neighbour outside [0, {n})")
            if row >> v & 1:
                raise UsageError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise UsageError(f"edge {v}-{w} is not symmetric")
        self.n = n
        self.adj = adj
        self.labels = dict(labels or {})
        self._cache: dict = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Mapping[int, str] | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise UsageError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    # -- basic queries -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def label_index(self) -> dict[str, int]:
        return {name: v for v, name in self.labels.items()}

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise UsageError(f"vertex {v!r} out of range [0, {self.n})")

    def to_mask(self, vertices: Iterable[int] | int) -> int:
        """Coerce an iterable of vertices (or a mask) to a bitmask, range-checked."""
        if isinstance(vertices, VertexSet):
            m = vertices.mask
        elif isinstance(vertices, int):
            m = vertices
        else:
            m = 0
            for v in vertices:
                self.check_vertex(v)
                m |= 1 << v
        if m < 0 or m & ~self.full_mask:
            raise UsageError(f"vertex set {m:#x} not contained in [0, {self.n})")
        return m

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- edge-list I/O -----------------------------------------------------

def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the ``"n m"`` header + ``"u v"`` lines format.

    ``#`` lines are comments, except ``# label <v> <name>`` which restores a
    vertex label written by :func:`serialize_edge_list`.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    header = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    label_lines: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if len(parts) == 3 and parts[0] == "label":
                try:
                    v = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad label vertex {parts[1]!r}", lineno) from None
                labels[v] = parts[2]
                label_lines.append((v, lineno))
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) != 2:
            raise ParseError(f"expected two integers, got {len(nums)}", lineno)
        if header is None:
            if nums[0] < 0 or nums[1] < 0:
                raise ParseError("negative count in header", lineno)
            header = (nums[0], nums[1], lineno)
            continue
        u, v = nums
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range [0, {n}) in edge {u} {v}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'n m' header", 1)
    n, m, hline = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were listed", hline)
    for v, lineno in label_lines:
        if not 0 <= v < n:
            raise ParseError(f"label for vertex {v} out of range", lineno)
    return Graph.from_edges(n, edges, labels)


def serialize_edge_list(g: Graph) -> str:
    out = []
    for v in sorted(g.labels):
        out.append(f"# label {v} {g.labels[v]}")
    es = g.edges()
    out.append(f"{g.n} {len(es)}")
    out.extend(f"{u} {v}" for u, v in es)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_edge_list(g))


# -- generators --------------------------------------------------------

FAMILIES = ("complete", "cycle", "path", "wheel", "star", "random-tree", "gnp",
            "random-triangle-free")

_MIN_N = {"cycle": 3, "wheel": 4}


@dataclass(frozen=True)
class GraphFamily:
    family: str
    n: int
    p: float = 0.5
    seed: int = 0


def generate(family: GraphFamily | str, n: int | None = None, p: float = 0.5,
             seed: int = 0) -> Graph:
    """Build a member of a named family.

    Accepts either a :class:`GraphFamily` or the same fields as arguments.
    Random families are a pure function of ``seed``.
    """
    if isinstance(family, GraphFamily):
        fam = family
    else:
        if n is None:
            raise UsageError("n is required")
        fam = GraphFamily(family, n, p, seed)
    name, n = fam.family, fam.n
    if name not in FAMILIES:
        raise UsageError(f"unknown graph family {name!r}")
    if n < max(1, _MIN_N.get(name, 1)):
        raise UsageError(f"{name} needs n >= {max(1, _MIN_N.get(name, 1))}, got {n}")
    if not 0.0 <= fam.p <= 1.0:
        raise UsageError(f"p must lie in [0, 1], got {fam.p}")
    rng = random.Random(fam.seed)

    if name == "complete":
        return Graph(n, [((1 << n) - 1) ^ (1 << v) for v in range(n)])
    if name == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "wheel":
        return add_universal_vertex(generate("cycle", n - 1))
    if name == "star":
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if name == "random-tree":
        return _prufer_tree(n, rng)
    g = _gnp(n, fam.p, rng)
    if name == "gnp":
        return g
    return _break_triangles(g)


def _gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _prufer_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph.empty(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def _first_triangle(rows: list[int]) -> tuple[int, int, int] | None:
    n = len(rows)
    for a in range(n):
        for b in iter_bits(rows[a] >> (a + 1) << (a + 1)):
            common = rows[a] & rows[b] & ~((1 << (b + 1)) - 1)
            if common:
                return a, b, (common & -common).bit_length() - 1
    return None


def _break_triangles(g: Graph) -> Graph:
    # delete the lexicographically largest edge (b, c) of the first triangle a<b<c
    rows = list(g.adj)
    while (tri := _first_triangle(rows)) is not None:
        _, b, c = tri
        rows[b] &= ~(1 << c)
        rows[c] &= ~(1 << b)
    return Graph(g.n, rows)


# -- transforms ----------------------------------------------------------

def add_universal_vertex(g: Graph) -> Graph:
    """Return ``G_u``: a copy of ``g`` plus vertex ``n`` (label ``"u"``) adjacent to all."""
    n = g.n
    rows = [row | (1 << n) for row in g.adj]
    rows.append((1 << n) - 1)
    labels = dict(g.labels)
    labels[n] = "u"
    return Graph(n + 1, rows, labels)


def simplicial_closure(h: Graph, x: int, y: int) -> Graph:
    """Complete ``N(x)`` and ``N(y)`` into cliques so both become simplicial."""
    h.check_vertex(x)
    h.check_vertex(y)
    if x == y:
        raise UsageError("x and y must be distinct")
    rows = list(h.adj)
    for s in (x, y):
        nb = h.adj[s]
        for a in iter_bits(nb):
            rows[a] |= nb & ~(1 << a)
    return Graph(h.n, rows, h.labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` relabelled ``0..k-1`` in ascending order.

    Returns the subgraph and the list mapping new index -> original vertex.
    """
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(pos[w] for w in iter_bits(g.adj[v]) if w in pos))
    labels = {pos[v]: name for v, name in g.labels.items() if v in pos}
    return Graph(len(keep), rows, labels), keep


# -- facts ---------------------------------------------------------------

@dataclass(frozen=True)
class GraphFacts:
    is_bipartite: bool
    is_triangle_free: bool
    diameter: float            # math.inf when disconnected
    degrees: tuple[int, ...]
    components: int
    distances: tuple[tuple[float, ...], ...] = field(repr=False)

    @property
    def is_connected(self) -> bool:
        return self.components <= 1


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adj[v]):
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> tuple[tuple[float, ...], ...]:
    if "apsp" not in g._cache:
        g._cache["apsp"] = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    return g._cache["apsp"]


def graph_facts(g: Graph) -> GraphFacts:
    dist = all_pairs_distances(g)
    finite = [d for row in dist for d in row if d != math.inf]
    diameter = max(finite, default=0)
    seen = 0
    components = 0
    colour = [-1] * g.n
    bipartite = True
    for s in range(g.n):
        if seen >> s & 1:
            continue
        components += 1
        colour[s] = 0
        stack = [s]
        seen |= 1 << s
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adj[v]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    seen |= 1 << w
                    stack.append(w)
                elif colour[w] == colour[v]:
                    bipartite = False
    if components > 1:
        diameter = math.inf
    return GraphFacts(
        is_bipartite=bipartite,
        is_triangle_free=_first_triangle(list(g.adj)) is None,
        diameter=diameter,
        degrees=tuple(g.degrees()),
        components=components,
        distances=dist,
    )


def clique_number(g: Graph) -> int:
    """Exact clique number by simple branch and bound (fine for desk-scale graphs)."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            expand(size + 1, cand & g.adj[v])

    expand(0, g.full_mask)
    return best
