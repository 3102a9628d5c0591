"""Gadget constructions behind the hardness results, with witness builders and
harnesses that check each construction's biconditional on small instances.

Gadget graphs carry human-readable role labels (``c_1``, ``l_{2,3}``,
``w_{1,2,1,3}``, ``u``...) in :attr:`Graph.labels`; :class:`GadgetOutput`
also exposes the inverse map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .convexity import ConvexityKind, exists_induced_path_through, is_general_position, iteration_trace
from .errors import InfeasibleError, ParseError, UsageError
from .graph import (Graph, VertexSet, add_universal_vertex, clique_number, graph_facts,
                    simplicial_closure)
from .parameters import gp_decision_xp, gp_number, iteration_time_graph

__all__ = [
    "CnfFormula",
    "MulticoloredInstance",
    "GadgetOutput",
    "VerificationReport",
    "parse_dimacs",
    "format_dimacs",
    "parse_colors",
    "build_sat_iteration_gadget",
    "complementary_pairs",
    "sat_witness_seed",
    "verify_sat_forward",
    "build_monophonic_gp_gadget",
    "build_mcis_gp_gadget",
    "has_multicolored_independent_set",
    "verify_equivalence",
]


# -- instances -------------------------------------------------------------

Literal = tuple[int, bool]  # (0-based variable, True for a positive literal)


@dataclass(frozen=True)
class CnfFormula:
    n_vars: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        if not self.clauses:
            raise UsageError("formula needs at least one clause")
        for i, clause in enumerate(self.clauses, 1):
            for var, _ in clause:
                if not 0 <= var < self.n_vars:
                    raise UsageError(f"clause {i}: variable {var + 1} outside 1..{self.n_vars}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(any(assignment[v] == pol for v, pol in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Read DIMACS CNF (``p cnf n m``; signed 1-based literals ending in ``0``)."""
    n_vars = n_clauses = None
    clauses: list[tuple[Literal, ...]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", lineno)
            try:
                n_vars, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno) from None
            continue
        if n_vars is None:
            raise ParseError("clause before the 'p cnf' line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if len(pending) != 3:
                    raise ParseError(f"clause {len(clauses) + 1} has {len(pending)} literals; "
                                     "exactly 3 are required", lineno)
                clauses.append(tuple((abs(x) - 1, x > 0) for x in pending))
                pending = []
            else:
                if abs(lit) > n_vars:
                    raise ParseError(f"literal {lit} exceeds {n_vars} variables", lineno)
                pending.append(lit)
    if n_vars is None:
        raise ParseError("missing 'p cnf' line")
    if pending:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != n_clauses:
        raise ParseError(f"problem line declares {n_clauses} clauses, found {len(clauses)}")
    return CnfFormula(n_vars, tuple(clauses))


def format_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.n_vars} {f.m}"]
    for clause in f.clauses:
        lines.append(" ".join(str((v + 1) if pol else -(v + 1)) for v, pol in clause) + " 0")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MulticoloredInstance:
    graph: Graph
    color: Mapping[int, int]  # vertex -> colour in 1..k
    k: int

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.k)]
        for v in range(self.graph.n):
            c = self.color.get(v)
            if c is None or not 1 <= c <= self.k:
                raise UsageError(f"vertex {v} has colour {c!r}, expected 1..{self.k}")
            out[c - 1].append(v)
        for i, cls in enumerate(out, 1):
            if not cls:
                raise UsageError(f"colour class {i} is empty")
        return out


def parse_colors(text: str, n: int) -> tuple[dict[int, int], int]:
    """Read ``vertex colour`` lines; returns the colour map and ``k``."""
    color: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'vertex colour'", lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("expected integers", lineno) from None
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range [0, {n})", lineno)
        if c < 1:
            raise ParseError(f"colour {c} must be >= 1", lineno)
        color[v] = c
    missing = [v for v in range(n) if v not in color]
    if missing:
        raise ParseError(f"no colour given for vertices {missing}")
    return color, max(color.values(), default=0)


@dataclass(frozen=True)
class GadgetOutput:
    graph: Graph
    target: int
    roles: dict  # role name -> vertex
    source: object = field(default=None, repr=False)

    def __getitem__(self, role: str) -> int:
        return self.roles[role]


# -- SAT -> P3 iteration time ------------------------------------------------

def complementary_pairs(f: CnfFormula) -> list[tuple[int, int, int, int]]:
    """Unordered pairs of literal occurrences ``(i, j, a, b)`` (1-based) with
    ``l_{i,a}`` the negation of ``l_{j,b}``; ``(i, a) < (j, b)``.  Pairs inside
    one clause are included."""
    occ = [(i, a, lit) for i, clause in enumerate(f.clauses, 1)
           for a, lit in enumerate(clause, 1)]
    pairs = []
    for (i, a, (v1, p1)), (j, b, (v2, p2)) in itertools.combinations(occ, 2):
        if v1 == v2 and p1 != p2:
            pairs.append((i, j, a, b))
    return pairs


def build_sat_iteration_gadget(f: CnfFormula) -> GadgetOutput:
    """Bipartite graph whose P3 iteration time reaches ``2m`` when ``f`` is satisfiable.

    Vertex blocks, in order: per clause ``c_i, c'_i, p'_i, l_{i,1..3}``; then
    ``p''_1``; then ``w_i, w'_i`` per clause; then ``w_{i,j,a,b}, w'_{i,j,a,b}``
    per complementary pair; then ``z, z'``.
    """
    for i, clause in enumerate(f.clauses, 1):
        if len(clause) != 3:
            raise UsageError(f"clause {i} has {len(clause)} literals; exactly 3 are required")
    roles: dict[str, int] = {}

    def new(name: str) -> int:
        roles[name] = len(roles)
        return roles[name]

    m = f.m
    edges = []
    for i in range(1, m + 1):
        c, cp, pp = new(f"c_{i}"), new(f"c'_{i}"), new(f"p'_{i}")
        edges += [(pp, cp), (cp, c)]
        for a in (1, 2, 3):
            edges.append((c, new(f"l_{{{i},{a}}}")))
    edges.append((new("p''_1"), roles["c'_1"]))
    for i in range(1, m):
        edges.append((roles[f"c_{i}"], roles[f"c'_{i + 1}"]))
    w_all = []
    for i in range(1, m + 1):
        for name in (f"w_{i}", f"w'_{i}"):
            w = new(name)
            w_all.append(w)
            edges += [(w, roles[f"l_{{{i},{a}}}"]) for a in (1, 2, 3)]
    for i, j, a, b in complementary_pairs(f):
        for prime in ("", "'"):
            w = new(f"w{prime}_{{{i},{j},{a},{b}}}")
            w_all.append(w)
            edges += [(w, roles[f"l_{{{i},{a}}}"]), (w, roles[f"l_{{{j},{b}}}"])]
    for name in ("z", "z'"):
        zv = new(name)
        edges += [(zv, w) for w in w_all]
    n = len(roles)
    g = Graph.from_edges(n, edges, {v: name for name, v in roles.items()})
    return GadgetOutput(g, 2 * m, roles, source=f)


def sat_witness_seed(gadget: GadgetOutput, assignment: Mapping[int, bool]) -> VertexSet:
    """Seed ``{l_{i,a_i}, p'_i} + {p''_1}`` with ``a_i`` the first true literal of clause ``i``."""
    f = gadget.source
    if not isinstance(f, CnfFormula):
        raise UsageError("gadget was not built from a CNF formula")
    seed = [gadget["p''_1"]]
    for i, clause in enumerate(f.clauses, 1):
        true_at = [a for a, (v, pol) in enumerate(clause, 1) if bool(assignment[v]) == pol]
        if not true_at:
            raise UsageError(f"assignment leaves clause {i} unsatisfied")
        seed += [gadget[f"l_{{{i},{true_at[0]}}}"], gadget[f"p'_{i}"]]
    return VertexSet(seed)


@dataclass
class VerificationReport:
    ok: bool
    checks: int = 0
    failure: str | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def w_vertices(gadget: GadgetOutput) -> list[int]:
    return [v for name, v in gadget.roles.items() if name.startswith("w")]


def verify_sat_forward(gadget: GadgetOutput, assignment: Mapping[int, bool],
                       seed: Iterable[int] | None = None) -> VerificationReport:
    """Trace the P3 iteration from the witness seed and check the clause chain.

    Expects ``time(c'_i) = 2i - 1``, ``time(c_i) = 2i``, at least ``2m`` steps,
    and no ``w``/``z`` vertex in the hull.  ``seed`` overrides the witness seed.
    """
    m = gadget.source.m
    s = sat_witness_seed(gadget, assignment) if seed is None else seed
    trace = iteration_trace(ConvexityKind.P3, gadget.graph, s)
    report = VerificationReport(True, details={"steps": trace.steps})
    for i in range(1, m + 1):
        for name, want in ((f"c'_{i}", 2 * i - 1), (f"c_{i}", 2 * i)):
            report.checks += 1
            got = trace.time[gadget[name]]
            if got != want:
                report.ok = False
                report.failure = f"time({name}) = {got}, expected {want}"
                return report
    report.checks += 1
    if trace.steps < 2 * m:
        report.ok = False
        report.failure = f"steps = {trace.steps} < {2 * m}"
        return report
    for v in w_vertices(gadget) + [gadget["z"], gadget["z'"]]:
        report.checks += 1
        if v in trace.hull:
            report.ok = False
            report.failure = f"{gadget.graph.labels[v]} entered the hull"
            return report
    return report


# -- Clique -> monophonic general position --------------------------------

def build_monophonic_gp_gadget(h: Graph, k: int | None = None) -> GadgetOutput:
    """``H`` plus anti-twins ``u_i`` (adjacent to all of ``H`` except ``v_i``)
    plus ``u`` adjacent to every ``u_i``.

    Cliques of size ``k`` in ``H`` correspond to monophonic general-position
    sets of size ``k + 1``, so ``target`` is ``k + 1``; with ``k`` omitted the
    clique number of ``H`` is used.  The correspondence fails when ``H`` is
    complete: then the gadget's monophonic gp number is ``n``, not ``n + 1``.
    """
    n = h.n
    if n < 3:
        raise UsageError("H needs at least 3 vertices")
    if any(d == 0 for d in h.degrees()):
        raise UsageError("H must not have isolated vertices")
    edges = list(h.edges())
    roles = {f"v_{i + 1}": i for i in range(n)}
    for i in range(n):
        ui = n + i
        roles[f"u_{i + 1}"] = ui
        edges += [(ui, j) for j in range(n) if j != i]
        edges.append((ui, 2 * n))
    roles["u"] = 2 * n
    g = Graph.from_edges(2 * n + 1, edges, {v: name for name, v in roles.items()})
    target = (clique_number(h) if k is None else k) + 1
    return GadgetOutput(g, target, roles, source=h)


# -- Multicoloured IS -> P3 general position --------------------------------

def build_mcis_gp_gadget(inst: MulticoloredInstance) -> GadgetOutput:
    """Complete every colour class to a clique and hang ``u_i`` on class ``i``.

    ``gp_p3(G') >= 2k`` iff the instance has a multicoloured independent set.
    """
    classes = inst.classes()
    g = inst.graph
    n = g.n
    edges = set(g.edges())
    for cls in classes:
        edges.update(itertools.combinations(cls, 2))
    roles = {f"v_{v}": v for v in range(n)}
    for i, cls in enumerate(classes, 1):
        ui = n + i - 1
        roles[f"u_{i}"] = ui
        edges.update((v, ui) for v in cls)
    out = Graph.from_edges(n + inst.k, sorted(edges), {v: name for name, v in roles.items()})
    return GadgetOutput(out, 2 * inst.k, roles, source=inst)


def has_multicolored_independent_set(inst: MulticoloredInstance) -> VertexSet | None:
    """Brute force over one vertex per colour class."""
    adj = inst.graph.adj
    for pick in itertools.product(*inst.classes()):
        if all(not adj[a] >> b & 1 for a, b in itertools.combinations(pick, 2)):
            return VertexSet(pick)
    return None


# -- equivalence harness -----------------------------------------------------

def verify_equivalence(which: str, instance, budget: int = 16) -> VerificationReport:
    """Check one gadget's biconditional exactly on a small instance.

    ``which`` / ``instance``:

    * ``"mono1"``: ``(H, x, y, z)``; an induced x-y path through z in ``H``
      iff ``{x, y, z}`` is not in monophonic general position once ``x`` and
      ``y`` are made simplicial.
    * ``"mono2"``: ``H``; monophonic gp of the clique gadget equals ``omega(H) + 1``.
    * ``"mcis"``: :class:`MulticoloredInstance`; ``gp_p3(G') >= 2k`` iff a
      multicoloured independent set exists.
    * ``"lift"``: triangle-free ``G`` with >= 3 vertices; geodesic ti and gp
      of ``G + universal vertex`` against the P3 values of ``G``.

    ``budget`` caps the vertex count of the largest graph an exact solver sees.
    """
    if which == "mono1":
        h, x, y, z = instance
        _within(h, budget)
        lhs = exists_induced_path_through(h, x, y, z)
        closed = simplicial_closure(h, x, y)
        rhs = not is_general_position(ConvexityKind.MONOPHONIC, closed, [x, y, z])
        return _report(lhs == rhs, lhs=lhs, rhs=rhs)
    if which == "mono2":
        gadget = build_monophonic_gp_gadget(instance)
        _within(gadget.graph, budget)
        gp = gp_number(ConvexityKind.MONOPHONIC, gadget.graph, cap=budget).value
        omega = clique_number(instance)
        return _report(gp == omega + 1, lhs=gp, rhs=omega + 1, omega=omega)
    if which == "mcis":
        gadget = build_mcis_gp_gadget(instance)
        _within(gadget.graph, budget)
        lhs = bool(gp_decision_xp(ConvexityKind.P3, gadget.graph, gadget.target))
        rhs = has_multicolored_independent_set(instance) is not None
        return _report(lhs == rhs, lhs=lhs, rhs=rhs)
    if which == "lift":
        g = instance
        facts = graph_facts(g)
        if g.n < 3 or not facts.is_triangle_free:
            raise UsageError("lift needs a triangle-free graph with at least 3 vertices")
        gu = add_universal_vertex(g)
        _within(gu, budget)
        ti_g = iteration_time_graph(ConvexityKind.GEODESIC, gu, cap=budget).value
        ti_p = iteration_time_graph(ConvexityKind.P3, g, cap=budget).value
        gp_g = gp_number(ConvexityKind.GEODESIC, gu, cap=budget).value
        gp_p = gp_number(ConvexityKind.P3, g, cap=budget).value
        omega = 2 if g.m else 1
        ok = ti_g == max(ti_p, 1) and gp_g == max(gp_p, omega + 1)
        return _report(ok, ti_gc_lift=ti_g, ti_pc=ti_p, gp_gc_lift=gp_g, gp_pc=gp_p, omega=omega)
    raise UsageError(f"unknown equivalence {which!r}; expected mono1, mono2, mcis or lift")


def _within(g: Graph, budget: int) -> None:
    if g.n > budget:
        raise InfeasibleError(f"instance has {g.n} vertices, over the oracle budget {budget}", budget)


def _report(ok: bool, **details) -> VerificationReport:
    failure = None if ok else ", ".join(f"{k}={v}" for k, v in details.items())
    return VerificationReport(ok, 1, failure, details)
