"""Acceptance criteria, one test each.  Every test prints a single
``[PASS]``/``[FAIL] criterion N`` line (shown even under output capture)."""

import random
import time

import pytest

from graphconvex.graph import clique_number, generate
from graphconvex.parameters import gp_number, iteration_time_graph, tree_iteration_time_p3
from graphconvex.reductions import build_monophonic_gp_gadget
from graphconvex.suites import random_h_without_isolated, random_tree, run_suite

SEED = 0


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}")
    return emit


def _suite_ok(res, limit=None):
    bad = [line for line in res.lines() if line.startswith("[FAIL]")]
    ok = not bad and (limit is None or res.elapsed < limit)
    total = sum(c.passed + c.failed for c in res.checks.values())
    detail = f"{total} checks, {res.elapsed:.1f}s" + (f" (limit {limit}s)" if limit else "")
    if bad:
        detail += "; " + bad[0]
    return ok, detail


def test_criterion_1_lemma_tables(report):
    start = time.perf_counter()
    rows, wrong = 0, []
    for n in range(4, 10):
        k, c, p, w = (generate(f, n) for f in ("complete", "cycle", "path", "wheel"))
        expect = [
            (iteration_time_graph("p3", k).value, 1),
            (iteration_time_graph("geodesic", k).value, 0),
            (iteration_time_graph("monophonic", k).value, 0),
            (iteration_time_graph("p3", c).value, 1),
            (iteration_time_graph("geodesic", c).value, 1),
            (iteration_time_graph("monophonic", c).value, 1),
            (gp_number("monophonic", k).value, n),
            (gp_number("monophonic", c).value, 2),
            (gp_number("monophonic", p).value, 2),
            (gp_number("monophonic", w).value, 4 if n == 4 else 3),
        ]
        for i, (got, want) in enumerate(expect):
            rows += 1
            if got != want:
                wrong.append(f"n={n} row {i}: {got} != {want}")
    elapsed = time.perf_counter() - start
    ok = not wrong and elapsed < 120
    report(1, "lemma tables", ok, f"{rows} rows, {len(wrong)} wrong, {elapsed:.1f}s (limit 120s)"
           + (f"; {wrong[0]}" if wrong else ""))
    assert ok, wrong


def test_criterion_2_closure_axioms(report):
    res = run_suite("axioms", 500, SEED)
    ok, detail = _suite_ok(res, 60)
    report(2, "closure axioms", ok, detail)
    assert ok, detail


def test_criterion_3_tree_formula(report):
    rng = random.Random(SEED)
    wrong = []
    for t in range(100):
        tree = random_tree(rng, 3, 12)
        got, want = tree_iteration_time_p3(tree), iteration_time_graph("p3", tree).value
        if got != want:
            wrong.append(f"trial {t}: {tree.edges()} formula {got}, solver {want}")
    ok = not wrong
    report(3, "tree formula", ok, f"100 trees, {len(wrong)} mismatches" + (f"; {wrong[0]}" if wrong else ""))
    assert ok, wrong


def test_criterion_4_universal_vertex_lift(report):
    res = run_suite("lift", 200, SEED)
    ok, detail = _suite_ok(res, 180)
    report(4, "universal-vertex lift", ok, detail)
    assert ok, detail


def test_criterion_5_sat_gadget(report):
    res = run_suite("sat", 30, SEED)
    ok, detail = _suite_ok(res)
    report(5, "SAT gadget forward direction", ok, detail)
    assert ok, detail


def test_criterion_6_monophonic_reductions(report):
    start = time.perf_counter()
    mono1 = run_suite("mono1", 100, SEED)
    rng = random.Random(SEED)
    failures, complete_failures = [], 0
    for t in range(100):
        h = random_h_without_isolated(rng, 3, 7)
        gp = gp_number("monophonic", build_monophonic_gp_gadget(h).graph, cap=15).value
        omega = clique_number(h)
        if gp != omega + 1:
            failures.append(f"trial {t}: n={h.n} edges={h.m} gp={gp} omega+1={omega + 1}")
            complete_failures += h.m == h.n * (h.n - 1) // 2
    elapsed = time.perf_counter() - start
    ok = mono1.ok and not failures and elapsed < 300
    detail = (f"mono1 {'ok' if mono1.ok else 'FAILED'}; mono2 {100 - len(failures)}/100 equal "
              f"({complete_failures} of {len(failures)} mismatches have complete H); "
              f"{elapsed:.1f}s (limit 300s)")
    if failures:
        detail += f"; first: {failures[0]}"
    report(6, "monophonic reductions", ok, detail)
    assert ok, detail


def test_criterion_7_multicolored_is(report):
    res = run_suite("mcis", 100, SEED)
    ok, detail = _suite_ok(res)
    report(7, "multicolored-IS gadget", ok, detail)
    assert ok, detail


def test_criterion_8_kernels(report):
    res = run_suite("kernels", 200, SEED)
    ok, detail = _suite_ok(res)
    report(8, "kernels", ok, detail)
    assert ok, detail


def test_criterion_9_xp(report):
    res = run_suite("xp", 60, SEED)
    ok, detail = _suite_ok(res)
    report(9, "XP procedure", ok, detail)
    assert ok, detail
