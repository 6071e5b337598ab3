"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line."""

import time

import pytest

from conftest import all_graphs
from harary import CompleteBipartite, generate, rho_closed_form
from harary.enumeration import canonical_code, enumerate_connected
from harary.errors import EmptyClassError
from harary.graph import complete_graph
from harary.invariants import covering_number, matching_number, odd_components, tutte_berge_deficiency
from harary.io import decode_graph6
from harary.spectral import harary_of, spectral_radius
from harary import verify
from harary.verify import (
    ClassSpec,
    Family,
    LEMMAS,
    bipartite_chain_key,
    check_bipartite_chain,
    class_specs,
    extremal_search,
    run_lemma,
)
from oracles import brute_matching_number, two_colorable

MARGIN = 1e-9


@pytest.fixture
def announce(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else ""))

    return emit


def test_criterion_1_closed_form_bipartite(announce):
    start = time.perf_counter()
    worst = 0.0
    count = 0
    for n1 in range(1, 12):
        for n2 in range(n1, 13 - n1):
            r = spectral_radius(harary_of(generate(CompleteBipartite(n1, n2)))).radius
            worst = max(worst, abs(r - rho_closed_form(CompleteBipartite(n1, n2))))
            count += 1
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 5
    announce(1, "K_{n1,n2} closed form, n1+n2 <= 12", ok, f"{count} pairs, max dev {worst:.2e}, {elapsed:.2f}s")
    assert worst <= 1e-8
    assert elapsed < 5


def test_criterion_2_clique_radii(announce):
    start = time.perf_counter()
    worst = max(abs(spectral_radius(harary_of(complete_graph(n))).radius - (n - 1)) for n in range(2, 21))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 5
    announce(2, "rho(K_n) = n - 1, 2 <= n <= 20", ok, f"max dev {worst:.2e}, {elapsed:.2f}s")
    assert worst <= 1e-8
    assert elapsed < 5


def _cold_start():
    verify._CATALOG.clear()
    verify.radii.cache_clear()


def _exhaustive(family: Family):
    start = time.perf_counter()
    reports, empty = [], []
    for n in range(4, 8):
        for spec in class_specs(family, n):
            try:
                reports.append(extremal_search(spec, tol=MARGIN))
            except EmptyClassError:
                empty.append(spec)
    return reports, empty, time.perf_counter() - start


def test_criterion_3_matching_number_extremal(announce):
    _cold_start()
    reports, empty, elapsed = _exhaustive(Family.MATCHING)
    bad = [r.spec.params() for r in reports if not (r.theorem_feasible and r.matches_theorem and r.runner_up_gap > MARGIN)]
    # the named graph is K_n at p = n // 2 and K_p v co-K_{n-p} below it
    for r in reports:
        n, p = r.spec.n, r.spec.p
        expected = complete_graph(n) if p == n // 2 else generate(verify.SplitJoin(p, (1,) * (n - p)))
        if canonical_code(r.maximizers[0]) != canonical_code(expected):
            bad.append(r.spec.params())
    ok = not bad and not empty and elapsed < 600
    announce(3, "matching-number maximizers, n = 4..7", ok, f"{len(reports)} classes, {elapsed:.1f}s, failures {bad}")
    assert not empty and not bad
    assert elapsed < 600


def test_criterion_4_bipartite_extremal(announce):
    reports, empty, elapsed = _exhaustive(Family.BIPARTITE)
    bad = []
    checked = 0
    for r in reports:
        target = rho_closed_form(CompleteBipartite(r.spec.p, r.spec.n - r.spec.p))
        if not r.matches_theorem or abs(r.maximizer_radius - target) > 1e-8:
            bad.append(r.spec.params())
        checked += len(r.margins)
        bad.extend({**r.spec.params(), **params} for params, m in r.margins if not m > MARGIN)
    ok = not bad and not empty and elapsed < 600
    announce(4, "bipartite maximizers are K_{p,n-p}, n = 4..7", ok,
             f"{len(reports)} classes, {checked} competitors, {elapsed:.1f}s")
    assert not empty and not bad
    assert elapsed < 600


def test_criterion_5_cut_edge_extremal(announce):
    reports, empty, elapsed = _exhaustive(Family.CUT_EDGES)
    bad = [r.spec.params() for r in reports if not (r.theorem_feasible and r.matches_theorem and r.runner_up_gap > MARGIN)]
    infeasible = [(s.n, s.p) for s in empty] + [(r.spec.n, r.spec.p) for r in reports if not r.theorem_feasible]
    # exactly the p = n - 2 classes are empty: a 2-vertex block cannot be 2-edge-connected
    expected_empty = [(n, n - 2) for n in range(4, 8)]
    trees = [extremal_search(ClassSpec(Family.TREES, n)) for n in range(4, 8)]
    bad_trees = [r.spec.n for r in trees if not (r.matches_theorem and r.runner_up_gap > MARGIN)]
    ok = not bad and not bad_trees and infeasible == expected_empty and elapsed < 600
    announce(5, "cut-edge maximizers K_{n-p}(p) and the star among trees, n = 4..7", ok,
             f"{len(reports)} feasible classes, infeasible {infeasible}, {elapsed:.1f}s")
    assert not bad and not bad_trees
    assert infeasible == expected_empty
    assert elapsed < 600


def test_criterion_6_lemma_margin_suites(announce):
    start = time.perf_counter()
    suites = ["3.1", "3.2", "4.4", "5.1", "5.2"]
    tuples = 0
    failures = {}
    for lemma in suites:
        tuples += len(LEMMAS[lemma].grid(12))
        report = run_lemma(lemma, 12, MARGIN)
        bad = [(c.params, round(c.value, 6)) for c in report.cases if not c.passed]
        if bad:
            failures[lemma] = bad
    elapsed = time.perf_counter() - start
    ok = not failures and tuples >= 100 and elapsed < 120
    announce(6, "lemma margins > 1e-9 over grids with at most 12 vertices", ok,
             f"{tuples} tuples, {elapsed:.1f}s, failing cases {failures}")
    assert tuples >= 100
    assert elapsed < 120
    assert not failures, f"negative or tiny margins: {failures}"


def test_criterion_7_property_suites(announce):
    monotone = run_lemma("2.2", 10, MARGIN)
    symmetric = run_lemma("2.4", 6, 1e-8)
    worst_residual = 0.0
    graphs = [g for n in range(2, 8) for g in enumerate_connected(n)]
    graphs += [decode_graph6(c.params["graph"]) for c in monotone.cases]
    for g in graphs:
        worst_residual = max(worst_residual, spectral_radius(harary_of(g)).residual)
    ok = (
        len(monotone.cases) == 500 and monotone.ok and symmetric.ok and symmetric.cases
        and worst_residual <= 1e-10
    )
    announce(7, "edge monotonicity, twin symmetry, Perron residual", bool(ok),
             f"{len(monotone.cases)} edge additions, {len(symmetric.cases)} twin pairs, "
             f"max residual {worst_residual:.1e}")
    assert len(monotone.cases) == 500 and monotone.ok
    assert symmetric.cases and symmetric.ok
    assert worst_residual <= 1e-10


def test_criterion_8_combinatorial_oracles(announce):
    blossom_bad = [g for n in range(2, 8) for g in enumerate_connected(n)
                   if matching_number(g).size != brute_matching_number(g)]
    tutte_bad = []
    for n in range(1, 7):
        for g in all_graphs(n):
            w = tutte_berge_deficiency(g)
            if w.value != n - 2 * matching_number(g).size or odd_components(g, w.witness_set) - len(w.witness_set) != w.value:
                tutte_bad.append(g)
    konig_bad = [g for n in range(1, 8) for g in all_graphs(n)
                 if two_colorable(g) and covering_number(g) != matching_number(g).size]
    ok = not blossom_bad and not tutte_bad and not konig_bad
    announce(8, "blossom vs brute force, Tutte-Berge, Konig-Egervary", ok,
             f"mismatches {len(blossom_bad)}/{len(tutte_bad)}/{len(konig_bad)}")
    assert not blossom_bad
    assert not tutte_bad
    assert not konig_bad


def test_criterion_9_bipartite_chain(announce):
    bad = []
    for n in range(4, 31):
        keys = [bipartite_chain_key(n, k) for k in range(1, n // 2 + 1)]
        if any(b <= a for a, b in zip(keys, keys[1:])):
            bad.append(n)
        if not check_bipartite_chain(n, MARGIN).ok:
            bad.append(n)
    announce(9, "K_{k,n-k} chain strictly increasing, n <= 30", not bad, f"failures {bad}")
    assert not bad
