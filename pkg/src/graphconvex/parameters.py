"""Exact graph-level parameters: iteration time, general position number,
dissociation number, plus the closed forms known for small families."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .convexity import ConvexityKind, as_kind, engine, find_violation, hull_mask
from .errors import InfeasibleError, UsageError
from .graph import Graph, GraphFamily, VertexSet, bfs_distances, iter_bits

__all__ = [
    "SolverCaps",
    "DEFAULT_CAPS",
    "SolverReport",
    "Decision",
    "iteration_time_graph",
    "gp_number",
    "dissociation_number",
    "gp_decision_xp",
    "tree_iteration_time_p3",
    "closed_form",
    "lema2_path_exists",
    "conflict_triples",
]


@dataclass
class SolverCaps:
    """Largest vertex count each exact solver accepts."""

    ti: dict = field(default_factory=lambda: {
        ConvexityKind.GEODESIC: 16, ConvexityKind.MONOPHONIC: 10,
        ConvexityKind.P3: 16, ConvexityKind.P3STAR: 16})
    gp: dict = field(default_factory=lambda: {
        ConvexityKind.GEODESIC: 16, ConvexityKind.MONOPHONIC: 12,
        ConvexityKind.P3: 16, ConvexityKind.P3STAR: 16})
    diss: int = 24


DEFAULT_CAPS = SolverCaps()


@dataclass(frozen=True)
class SolverReport:
    value: int
    witness: VertexSet
    explored: int
    elapsed: float  # seconds


@dataclass(frozen=True)
class Decision:
    """A yes/no answer with an optional certificate; truthiness is the answer."""

    answer: bool
    witness: VertexSet | None = None

    def __bool__(self) -> bool:
        return self.answer


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise InfeasibleError(f"{what}: n={g.n} exceeds the exact-solver cap {cap}", cap)


# -- iteration time ---------------------------------------------------------

def iteration_time_graph(kind, g: Graph, cap: int | None = None) -> SolverReport:
    """Maximum iteration time over all ``2^n`` seed sets.

    Seeds are visited in Gray-code order; the witness is the first maximiser
    in that order.  Iteration times are memoised along interval chains, since
    ``ti(S) = 1 + ti(I(S))`` whenever ``S`` is not convex.
    """
    kind = as_kind(kind)
    _check_cap(g, DEFAULT_CAPS.ti[kind] if cap is None else cap, f"ti[{kind}]")
    start = time.perf_counter()
    eng = engine(kind, g)
    memo: dict[int, int] = {}
    best, witness = -1, 0
    total = 1 << g.n
    for i in range(total):
        s = i ^ (i >> 1)
        chain = []
        cur = s
        while cur not in memo:
            nxt = eng.interval_mask(cur)
            if nxt == cur:
                memo[cur] = 0
                break
            chain.append(cur)
            cur = nxt
        t = memo[cur]
        for c in reversed(chain):
            t += 1
            memo[c] = t
        t = memo[s]
        if t > best:
            best, witness = t, s
    return SolverReport(best, VertexSet.from_mask(witness), total,
                        time.perf_counter() - start)


# -- general position number ------------------------------------------------

def conflict_triples(kind, g: Graph) -> list[int]:
    """Masks of the 3-sets ``{x, y, z}`` with ``z`` in the interval of ``{x, y}``.

    A vertex set is in general position exactly when it contains none of them.
    """
    eng = engine(kind, g)
    triples = set()
    for x in range(g.n):
        for y in range(x + 1, g.n):
            inside = eng.pair_mask(x, y) & ~((1 << x) | (1 << y))
            for z in iter_bits(inside):
                triples.add((1 << x) | (1 << y) | (1 << z))
    return sorted(triples)


def gp_number(kind, g: Graph, cap: int | None = None) -> SolverReport:
    """Maximum general-position set by branch and bound on the triple conflicts."""
    kind = as_kind(kind)
    _check_cap(g, DEFAULT_CAPS.gp[kind] if cap is None else cap, f"gp[{kind}]")
    start = time.perf_counter()
    n = g.n
    # conflicts[v]: for each violating triple through v, the mask of the other two
    conflicts: list[list[int]] = [[] for _ in range(n)]
    for t in conflict_triples(kind, g):
        for v in iter_bits(t):
            conflicts[v].append(t & ~(1 << v))

    def compatible(v: int, chosen: int) -> bool:
        for other in conflicts[v]:
            if other & chosen == other:
                return False
        return True

    best = 0
    for v in range(n):
        if compatible(v, best):
            best |= 1 << v
    best_size = best.bit_count()
    explored = 0

    def branch(chosen: int, size: int, cand: int) -> None:
        nonlocal best, best_size, explored
        explored += 1
        if cand == 0:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + cand.bit_count() <= best_size:
            return
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        with_v = chosen | (1 << v)
        keep = 0
        for w in iter_bits(rest):
            if compatible(w, with_v):
                keep |= 1 << w
        branch(with_v, size + 1, keep)
        branch(chosen, size, rest)

    branch(0, 0, g.full_mask)
    return SolverReport(best_size, VertexSet.from_mask(best), explored,
                        time.perf_counter() - start)


def dissociation_number(g: Graph, cap: int | None = None) -> SolverReport:
    """Largest vertex set inducing maximum degree at most one.

    Branches on a residual vertex ``v`` of degree >= 2: drop ``v``, keep ``v``
    alone, or keep ``v`` together with exactly one neighbour ``w``.  Once every
    residual degree is <= 1 the whole residual graph is a dissociation set.
    """
    _check_cap(g, DEFAULT_CAPS.diss if cap is None else cap, "diss")
    start = time.perf_counter()
    adj = g.adj
    memo: dict[int, int] = {}
    explored = 0

    def solve(r: int) -> int:
        nonlocal explored
        if r in memo:
            return memo[r]
        explored += 1
        pick, pick_deg = -1, 1
        for v in iter_bits(r):
            d = (adj[v] & r).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick < 0:
            memo[r] = r
            return r
        v = pick
        nv = adj[v] & r
        options = [r & ~(1 << v), r & ~nv]
        for w in iter_bits(nv):
            options.append(r & ~(nv & ~(1 << w)) & ~(adj[w] & r & ~(1 << v)))
        best = None
        for opt in options:
            res = solve(opt)
            if best is None or res.bit_count() > best.bit_count():
                best = res
        memo[r] = best
        return best

    witness = solve(g.full_mask)
    return SolverReport(witness.bit_count(), VertexSet.from_mask(witness), explored,
                        time.perf_counter() - start)


def gp_decision_xp(kind, g: Graph, k: int) -> Decision:
    """Is there a ``k``-subset in general position?  Lexicographic ``n choose k`` scan."""
    if k < 0:
        raise UsageError("k must be non-negative")
    if k > g.n:
        return Decision(False)
    eng = engine(kind, g)
    chosen: list[int] = []

    def fits(v: int) -> bool:
        vb = 1 << v
        cmask = 0
        for a in chosen:
            cmask |= 1 << a
        for i, a in enumerate(chosen):
            if eng.pair_mask(a, v) & cmask & ~(1 << a):
                return False
            for b in chosen[i + 1:]:
                if eng.pair_mask(a, b) & vb:
                    return False
        return True

    def search(first: int) -> bool:
        if len(chosen) == k:
            return True
        for v in range(first, g.n - (k - len(chosen)) + 1):
            if fits(v):
                chosen.append(v)
                if search(v + 1):
                    return True
                chosen.pop()
        return False

    if search(0):
        return Decision(True, VertexSet(chosen))
    return Decision(False)


# -- trees and structural lemmas --------------------------------------------

def _is_tree(g: Graph) -> bool:
    if g.n == 0 or g.m != g.n - 1:
        return False
    return all(d != float("inf") for d in bfs_distances(g, 0))


def tree_iteration_time_p3(t: Graph) -> int:
    """P3 iteration time of a tree from its degree pattern.

    The answer is the longest path ``v_1..v_k`` whose vertices all have degree
    at least 3 except ``v_k``, which needs degree at least 2.
    """
    if t.n < 3 or not _is_tree(t):
        raise UsageError("input must be a tree with at least three vertices")
    deg = t.degrees()
    best = 0
    for s in range(t.n):
        parent = {s: None}
        order = [s]
        for v in order:
            for w in iter_bits(t.adj[v]):
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        for end in range(t.n):
            path = [end]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            # path runs end -> s; read it as v_1 = s, ..., v_k = end
            if deg[end] >= 2 and all(deg[v] >= 3 for v in path[1:]):
                best = max(best, len(path))
    return best


def lema2_path_exists(g: Graph, s: Iterable[int], k: int) -> bool:
    """Necessary condition for a P3 seed to need at least ``k`` iterations.

    Looks inside the P3 hull ``H`` of ``s`` for a path ``v_1..v_k`` avoiding
    ``s`` where ``v_1`` has two neighbours in ``s``, ``v_1..v_{k-1}`` have
    degree >= 3 in ``H`` and ``v_k`` has degree >= 2 in ``H``.
    """
    if k < 1:
        raise UsageError("k must be positive")
    seed = g.to_mask(s)
    h = hull_mask(engine(ConvexityKind.P3, g), seed)
    free = h & ~seed
    adj = g.adj
    deg_h = {v: (adj[v] & h).bit_count() for v in iter_bits(h)}

    def extend(v: int, length: int, used: int) -> bool:
        if length == k:
            return deg_h[v] >= 2
        if deg_h[v] < 3:
            return False
        for w in iter_bits(adj[v] & free & ~used):
            if extend(w, length + 1, used | (1 << w)):
                return True
        return False

    for v1 in iter_bits(free):
        if (adj[v1] & seed).bit_count() >= 2 and extend(v1, 1, 1 << v1):
            return True
    return False


def closed_form(kind, family: GraphFamily | tuple[str, int], parameter: str) -> int | None:
    """Exact values known in closed form; ``None`` when the case is not covered.

    ``parameter`` is ``"ti"`` (iteration time) or ``"gp_mc"`` (monophonic
    general position number).
    """
    kind = as_kind(kind)
    if isinstance(family, GraphFamily):
        name, n = family.family, family.n
    else:
        name, n = family
    if parameter == "ti":
        if name == "complete" and n >= 4:
            return {ConvexityKind.P3: 1, ConvexityKind.GEODESIC: 0,
                    ConvexityKind.MONOPHONIC: 0}.get(kind)
        if name == "cycle" and n >= 4 and kind is not ConvexityKind.P3STAR:
            return 1
        if name == "path" and n >= 3 and kind is not ConvexityKind.P3STAR:
            # paths are trees with no vertex of degree 3
            return 1
        return None
    if parameter == "gp_mc":
        if kind is not ConvexityKind.MONOPHONIC or n < 4:
            return None
        if name == "complete":
            return n
        if name in ("cycle", "path"):
            return 2
        if name == "wheel":
            return 4 if n == 4 else 3
        return None
    raise UsageError(f"unknown parameter {parameter!r}; expected 'ti' or 'gp_mc'")


def brute_force_gp(kind, g: Graph) -> int:
    """Definitional gp by scanning all subsets largest-first (tiny graphs only)."""
    from itertools import combinations

    eng = engine(kind, g)
    for size in range(g.n, 2, -1):
        for combo in combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            if find_violation(eng, m) is None:
                return size
    return min(g.n, 2)
