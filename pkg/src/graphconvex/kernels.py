"""Kernelizations for deciding ``gp_p3(G) >= k`` (equivalently, whether G has a
dissociation set of size k)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .graph import Graph, VertexSet, induced_subgraph

__all__ = ["TwinClass", "KernelOutcome", "twin_partition", "nd_kernel",
           "vertex_cover_2approx", "vc_kernel"]


@dataclass(frozen=True)
class TwinClass:
    vertices: tuple[int, ...]
    kind: str  # "clique" or "independent"


@dataclass(frozen=True)
class KernelOutcome:
    """Either a decided answer or an equivalent reduced instance.

    ``decided`` is ``True``/``False`` when the kernel settled the question and
    ``None`` when ``graph`` (with ``origin`` mapping kernel -> original
    vertices) must still be solved.  ``bound`` is the size guarantee the
    reduced instance satisfies.
    """

    k: int
    decided: bool | None = None
    reason: str = ""
    graph: Graph | None = None
    origin: tuple[int, ...] = ()
    bound: int | None = None


def twin_partition(g: Graph) -> list[TwinClass]:
    """Group vertices into twin classes.

    True twins (equal closed neighbourhoods) form clique classes; the remaining
    vertices are grouped by open neighbourhood into independent classes.
    Singletons are tagged independent.  Classes are ordered by smallest member.
    """
    closed: dict[int, list[int]] = {}
    for v in range(g.n):
        closed.setdefault(g.adj[v] | (1 << v), []).append(v)
    classes = []
    rest = []
    for members in closed.values():
        if len(members) > 1:
            classes.append(TwinClass(tuple(members), "clique"))
        else:
            rest.append(members[0])
    opened: dict[int, list[int]] = {}
    for v in rest:
        opened.setdefault(g.adj[v], []).append(v)
    classes += [TwinClass(tuple(members), "independent") for members in opened.values()]
    classes.sort(key=lambda c: c.vertices[0])
    return classes


def _trivial(g: Graph, k: int) -> KernelOutcome | None:
    if k < 0:
        raise UsageError("k must be non-negative")
    if k > g.n:
        return KernelOutcome(k, False, f"k={k} exceeds n={g.n}")
    if k <= 2:
        # any set of at most two vertices is in general position
        return KernelOutcome(k, True, f"k={k} <= 2 and n={g.n} >= k")
    return None


def nd_kernel(g: Graph, k: int) -> KernelOutcome:
    """Neighbourhood-diversity kernel with at most ``nd(G) * (k - 1)`` vertices."""
    early = _trivial(g, k)
    if early is not None:
        return early
    classes = twin_partition(g)
    for c in classes:
        if c.kind == "independent" and len(c.vertices) >= k:
            return KernelOutcome(k, True, f"independent twin class {list(c.vertices)} has >= {k} vertices")
    keep = []
    for c in classes:
        keep.extend(c.vertices[:2] if c.kind == "clique" else c.vertices)
    reduced, origin = induced_subgraph(g, keep)
    return KernelOutcome(k, None, "clique classes shrunk to two vertices", reduced,
                         tuple(origin), len(classes) * (k - 1))


def vertex_cover_2approx(g: Graph) -> VertexSet:
    """Endpoints of a greedy maximal matching (edges scanned lexicographically)."""
    matched = 0
    for u, v in g.edges():
        if not (matched >> u & 1 or matched >> v & 1):
            matched |= (1 << u) | (1 << v)
    return VertexSet.from_mask(matched)


def vc_kernel(g: Graph, k: int) -> KernelOutcome:
    """Vertex-cover kernel: YES if the complement of a 2-approximate cover has
    ``k`` vertices, else the graph itself with ``n <= |S| + k - 1``."""
    if k < 1:
        raise UsageError("k must be positive")
    early = _trivial(g, k)
    if early is not None:
        return early
    cover = vertex_cover_2approx(g)
    outside = g.n - len(cover)
    if outside >= k:
        return KernelOutcome(k, True, f"{outside} vertices outside the cover form an independent set")
    return KernelOutcome(k, None, f"n={g.n} <= |S| + k - 1 = {len(cover) + k - 1}", g,
                         tuple(range(g.n)), len(cover) + k - 1)
