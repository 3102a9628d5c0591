"""Randomised verification suites.

Each suite draws seeded random instances, checks a family of identities
against brute-force oracles, and returns per-check pass/fail counts.  The
``verify`` CLI command and the acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .convexity import ConvexityKind, hull, interval
from .errors import UsageError
from .graph import Graph, GraphFamily, add_universal_vertex, generate, graph_facts
from .kernels import nd_kernel, twin_partition, vc_kernel, vertex_cover_2approx
from .parameters import (closed_form, gp_decision_xp, gp_number, iteration_time_graph,
                         tree_iteration_time_p3)
from .reductions import (CnfFormula, MulticoloredInstance, build_sat_iteration_gadget,
                         complementary_pairs, verify_equivalence, verify_sat_forward, w_vertices)

__all__ = ["CheckResult", "SuiteResult", "SUITES", "run_suite",
           "random_graph", "random_triangle_free", "random_tree",
           "random_satisfiable_cnf", "random_mcis", "random_twin_graph", "min_vertex_cover"]

KINDS = tuple(ConvexityKind)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail: Callable[[], str] | str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = detail() if callable(detail) else detail

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteResult:
    suite: str
    checks: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def check(self, name: str) -> CheckResult:
        if name not in self.checks:
            self.checks[name] = CheckResult(name)
        return self.checks[name]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def lines(self) -> list[str]:
        out = []
        for c in self.checks.values():
            status = "PASS" if c.ok else "FAIL"
            line = f"[{status}] {self.suite}/{c.name}: {c.passed} passed, {c.failed} failed"
            if c.first_failure:
                line += f"  (first failure: {c.first_failure})"
            out.append(line)
        return out


# -- instance generators --------------------------------------------------

def random_graph(rng: random.Random, n_lo: int, n_hi: int,
                 p_lo: float = 0.15, p_hi: float = 0.85) -> Graph:
    n = rng.randint(n_lo, n_hi)
    return generate("gnp", n, rng.uniform(p_lo, p_hi), rng.randrange(2 ** 32))


def random_triangle_free(rng: random.Random, n_lo: int, n_hi: int) -> Graph:
    n = rng.randint(n_lo, n_hi)
    return generate("random-triangle-free", n, rng.uniform(0.1, 0.9), rng.randrange(2 ** 32))


def random_tree(rng: random.Random, n_lo: int, n_hi: int) -> Graph:
    return generate("random-tree", rng.randint(n_lo, n_hi), seed=rng.randrange(2 ** 32))


def random_satisfiable_cnf(rng: random.Random, m: int, n_vars: int) -> tuple[CnfFormula, dict]:
    """Random 3-CNF with a planted satisfying assignment (distinct variables per clause)."""
    n_vars = max(n_vars, 3)
    planted = {v: rng.random() < 0.5 for v in range(n_vars)}
    clauses = []
    while len(clauses) < m:
        vs = rng.sample(range(n_vars), 3)
        clause = tuple((v, rng.random() < 0.5) for v in vs)
        if any(planted[v] == pol for v, pol in clause):
            clauses.append(clause)
    return CnfFormula(n_vars, tuple(clauses)), planted


def random_mcis(rng: random.Random, k_hi: int = 3, n_hi: int = 9) -> MulticoloredInstance:
    k = rng.randint(1, k_hi)
    n = rng.randint(k, n_hi)
    colours = list(range(1, k + 1)) + [rng.randint(1, k) for _ in range(n - k)]
    rng.shuffle(colours)
    g = generate("gnp", n, rng.uniform(0.15, 0.85), rng.randrange(2 ** 32))
    return MulticoloredInstance(g, {v: c for v, c in enumerate(colours)}, k)


def random_twin_graph(rng: random.Random, n_hi: int = 12) -> Graph:
    """Blow-up of a random quotient graph: parts become cliques or independent sets."""
    d = rng.randint(1, 5)
    sizes = [rng.randint(1, 4) for _ in range(d)]
    while sum(sizes) > n_hi:
        i = max(range(d), key=lambda j: sizes[j])
        sizes[i] -= 1
    sizes = [s for s in sizes if s] or [1]
    d = len(sizes)
    parts, start = [], 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    edges = []
    for i, part in enumerate(parts):
        if rng.random() < 0.5:
            edges += list(itertools.combinations(part, 2))
        for j in range(i + 1, d):
            if rng.random() < 0.5:
                edges += [(a, b) for a in part for b in parts[j]]
    return Graph.from_edges(start, edges)


def min_vertex_cover(g: Graph) -> int:
    """Exact vertex cover number by trying masks in order of increasing size."""
    edges = g.edges()
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            if all(m >> u & 1 or m >> v & 1 for u, v in edges):
                return size
    return g.n


# -- suites ----------------------------------------------------------------

def suite_axioms(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        g = random_graph(rng, 1, 10)
        s_big = [v for v in range(g.n) if rng.random() < 0.5]
        s = [v for v in s_big if rng.random() < 0.6]
        sm, bm = set(s), set(s_big)
        for kind in KINDS:
            h = hull(kind, g, s)
            hb = hull(kind, g, s_big)
            tag = lambda: f"trial {t}, {kind}, n={g.n}, S={sorted(sm)}, S'={sorted(bm)}"
            res.check("extensivity").record(sm <= h, tag)
            res.check("monotonicity").record(h <= hb, tag)
            res.check("idempotence").record(hull(kind, g, h) == h, tag)
            res.check("normalization").record(not hull(kind, g, []), tag)
            i_s, i_b = interval(kind, g, s), interval(kind, g, s_big)
            res.check("interval-extensive-monotone").record(sm <= i_s <= i_b, tag)
        res.check("geodesic-within-monophonic").record(
            interval("geodesic", g, s_big) <= interval("monophonic", g, s_big),
            lambda: f"trial {t}")
        res.check("p3star-within-p3").record(
            interval("p3star", g, s_big) <= interval("p3", g, s_big), lambda: f"trial {t}")


LEMMA_RANGE = range(4, 10)


def suite_lemmas(res: SuiteResult, trials: int, rng: random.Random) -> None:
    ti_rows = [("complete", k) for k in ("p3", "geodesic", "monophonic")]
    ti_rows += [("cycle", k) for k in ("p3", "geodesic", "monophonic")]
    for n in LEMMA_RANGE:
        for family, kind in ti_rows:
            g = generate(family, n)
            want = closed_form(kind, GraphFamily(family, n), "ti")
            got = iteration_time_graph(kind, g).value
            res.check(f"ti_{kind}({family})").record(
                got == want, f"n={n}: solver {got}, closed form {want}")
        for family in ("complete", "cycle", "path", "wheel"):
            g = generate(family, n)
            want = closed_form("monophonic", GraphFamily(family, n), "gp_mc")
            got = gp_number("monophonic", g).value
            res.check(f"gp_monophonic({family})").record(
                got == want, f"n={n}: solver {got}, closed form {want}")
    for t in range(trials):
        tree = random_tree(rng, 3, 12)
        got = tree_iteration_time_p3(tree)
        want = iteration_time_graph("p3", tree).value
        res.check("tree-formula").record(got == want, lambda: f"trial {t}: edges {tree.edges()}: "
                                                             f"formula {got}, solver {want}")


def suite_lift(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        g = random_triangle_free(rng, 3, 9)
        rep = verify_equivalence("lift", g)
        d = rep.details
        res.check("ti").record(d["ti_gc_lift"] == max(d["ti_pc"], 1),
                               lambda: f"trial {t}: {g.edges()} {d}")
        res.check("gp").record(d["gp_gc_lift"] == max(d["gp_pc"], d["omega"] + 1),
                               lambda: f"trial {t}: {g.edges()} {d}")
        res.check("diameter<=2").record(graph_facts(add_universal_vertex(g)).diameter <= 2, f"trial {t}")


def suite_mono1(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        h = random_graph(rng, 3, 8)
        x, y, z = rng.sample(range(h.n), 3)
        rep = verify_equivalence("mono1", (h, x, y, z))
        res.check("biconditional").record(
            rep.ok, lambda: f"trial {t}: H={h.edges()} x={x} y={y} z={z} {rep.details}")


def random_h_without_isolated(rng: random.Random, n_lo: int, n_hi: int) -> Graph:
    while True:
        h = random_graph(rng, n_lo, n_hi, 0.2, 0.9)
        if all(h.degrees()):
            return h


def suite_mono2(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        h = random_h_without_isolated(rng, 3, 7)
        rep = verify_equivalence("mono2", h, budget=15)
        res.check("gp=omega+1").record(
            rep.ok, lambda: f"trial {t}: H(n={h.n})={h.edges()} {rep.details}")


def suite_mcis(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        inst = random_mcis(rng)
        rep = verify_equivalence("mcis", inst)
        res.check("biconditional").record(
            rep.ok, lambda: f"trial {t}: {inst.graph.edges()} {dict(inst.color)} {rep.details}")


def suite_sat(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        m = rng.randint(1, 6)
        f, planted = random_satisfiable_cnf(rng, m, rng.randint(3, 6))
        gadget = build_sat_iteration_gadget(f)
        rep = verify_sat_forward(gadget, planted)
        res.check("forward-trace").record(rep.ok, lambda: f"trial {t}: {f.clauses}: {rep.failure}")
        _sat_structure(res, f, gadget, t)
    for t in range(max(1, trials // 10) if trials else 0):
        m = rng.randint(10, 12)
        f, _ = random_satisfiable_cnf(rng, m, rng.randint(5, 10))
        _sat_structure(res, f, build_sat_iteration_gadget(f), f"large {t}")


def _sat_structure(res: SuiteResult, f: CnfFormula, gadget, t) -> None:
    g = gadget.graph
    p = len(complementary_pairs(f))
    res.check("bipartite").record(graph_facts(g).is_bipartite, f"trial {t}")
    res.check("vertex-count").record(g.n == 8 * f.m + 2 * p + 3,
                                     lambda: f"trial {t}: n={g.n}, m={f.m}, pairs={p}")
    w = w_vertices(gadget)
    ok = (len(w) == 2 * f.m + 2 * p
          and all(g.degree(gadget[z]) == len(w) for z in ("z", "z'"))
          and g.degree(gadget["p''_1"]) == 1
          and all(g.degree(gadget[f"c_{i}"]) == (5 if i < f.m else 4) for i in range(1, f.m + 1)))
    res.check("label-degrees").record(ok, f"trial {t}")


def suite_kernels(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        g = random_twin_graph(rng, 12) if t % 2 else random_graph(rng, 3, 12)
        k = rng.randint(3, 5)
        truth = bool(gp_decision_xp("p3", g, k))
        nd = nd_kernel(g, k)
        nd_answer = nd.decided if nd.decided is not None else bool(gp_decision_xp("p3", nd.graph, k))
        res.check("nd-answer").record(nd_answer == truth, lambda: f"trial {t}: k={k} {g.edges()}")
        if nd.decided is None:
            bound = len(twin_partition(g)) * (k - 1)
            res.check("nd-size").record(nd.graph.n <= bound, lambda: f"trial {t}: {nd.graph.n} > {bound}")
        vc = vc_kernel(g, k)
        vc_answer = vc.decided if vc.decided is not None else bool(gp_decision_xp("p3", vc.graph, k))
        res.check("vc-answer").record(vc_answer == truth, lambda: f"trial {t}: k={k} {g.edges()}")
        if vc.decided is None:
            cover = len(vertex_cover_2approx(g))
            res.check("vc-size").record(vc.graph.n <= cover + k - 1, f"trial {t}")
    for t in range(trials):
        g = random_graph(rng, 1, 14, 0.05, 0.6)
        cover = vertex_cover_2approx(g)
        covers = all(u in cover or v in cover for u, v in g.edges())
        res.check("cover-valid").record(covers, f"trial {t}")
        res.check("cover<=2vc").record(len(cover) <= 2 * min_vertex_cover(g), f"trial {t}")
    for t in range(trials):
        g = random_twin_graph(rng, 12) if t % 2 else random_graph(rng, 1, 10)
        res.check("twin-classes-uniform").record(_classes_uniform(g), lambda: f"trial {t}: {g.edges()}")


def _classes_uniform(g: Graph) -> bool:
    classes = twin_partition(g)
    for c in classes:
        vs = c.vertices
        for a, b in itertools.combinations(vs, 2):
            if g.has_edge(a, b) != (c.kind == "clique"):
                return False
        for other in classes:
            if other is c:
                continue
            rows = {g.adj[v] & sum(1 << w for w in other.vertices) for v in vs}
            if len(rows) != 1:
                return False
    return True


def suite_xp(res: SuiteResult, trials: int, rng: random.Random) -> None:
    for t in range(trials):
        g = random_graph(rng, 1, 8)
        for kind in KINDS:
            gp = gp_number(kind, g).value
            for k in range(g.n + 1):
                got = bool(gp_decision_xp(kind, g, k))
                res.check(f"xp-vs-gp[{kind}]").record(
                    got == (gp >= k), lambda: f"trial {t}: k={k}, gp={gp}, xp={got}, {g.edges()}")


SUITES: dict[str, tuple[Callable, int]] = {
    "axioms": (suite_axioms, 500),
    "lemmas": (suite_lemmas, 100),
    "lift": (suite_lift, 200),
    "mono1": (suite_mono1, 100),
    "mono2": (suite_mono2, 100),
    "mcis": (suite_mcis, 100),
    "sat": (suite_sat, 30),
    "kernels": (suite_kernels, 200),
    "xp": (suite_xp, 60),
}


def run_suite(name: str, trials: int | None = None, seed: int = 0) -> SuiteResult:
    """Run one named suite; ``trials=None`` uses the suite's default count."""
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    fn, default = SUITES[name]
    res = SuiteResult(name)
    start = time.perf_counter()
    fn(res, default if trials is None else trials, random.Random(seed))
    res.elapsed = time.perf_counter() - start
    return res
