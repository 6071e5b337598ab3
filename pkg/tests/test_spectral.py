import math

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from harary import (
    Complete,
    CompleteBipartite,
    GraphError,
    SplitJoin,
    apsp,
    full_spectrum,
    generate,
    harary_matrix,
    rho_closed_form,
    spectral_radius,
)
from harary.graph import complete_graph, path_graph
from harary.invariants import cut_edges
from harary.spectral import HararyMatrix, harary_of, jacobi_eigenvalues


def test_harary_matrix_examples():
    h = harary_matrix(apsp(path_graph(3))).entries
    assert np.array_equal(h, [[0, 1, 0.5], [1, 0, 1], [0.5, 1, 0]])
    k5 = harary_of(complete_graph(5)).entries
    assert np.array_equal(k5, np.ones((5, 5)) - np.eye(5))
    c4 = harary_of(generate(CompleteBipartite(2, 2))).entries
    assert c4[0, 1] == 0.5 and c4[0, 2] == 1.0


def test_radius_k2():
    r = spectral_radius(harary_of(complete_graph(2)))
    assert r.radius == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(r.vector, [1 / math.sqrt(2)] * 2)


def test_radius_k22_and_p3():
    assert spectral_radius(harary_of(generate(CompleteBipartite(2, 2)))).radius == pytest.approx(2.5, abs=1e-12)
    assert spectral_radius(harary_of(path_graph(3))).radius == pytest.approx((1 + math.sqrt(33)) / 4, abs=1e-12)


def test_single_vertex():
    r = spectral_radius(HararyMatrix(1, np.zeros((1, 1))))
    assert r.radius == 0.0


def test_full_spectrum_examples():
    assert full_spectrum(harary_of(complete_graph(3))) == pytest.approx([2, -1, -1], abs=1e-12)
    assert full_spectrum(harary_of(complete_graph(2))) == pytest.approx([1, -1], abs=1e-12)
    # oracle: characteristic polynomial of RD(P_3) is x^3 - 9/4 x - 1
    roots = sorted(np.roots([1, 0, -9 / 4, -1]).real, reverse=True)
    spec = full_spectrum(harary_of(path_graph(3)))
    assert spec == pytest.approx(roots, abs=1e-12)
    assert spec[0] == pytest.approx(1.686141, abs=1e-6)
    assert abs(sum(spec)) < 1e-9


@settings(max_examples=60)
@given(connected_graphs(max_n=12))
def test_jacobi_matches_numpy(g):
    h = harary_of(g).entries
    assert np.allclose(sorted(jacobi_eigenvalues(h)), np.linalg.eigvalsh(h), atol=1e-10)


@settings(max_examples=80)
@given(connected_graphs(max_n=12))
def test_perron_pair(g):
    h = harary_of(g)
    r = spectral_radius(h)
    a = h.entries
    assert r.residual <= 1e-10
    assert np.max(np.abs(a @ r.vector - r.radius * r.vector)) <= 1e-10
    assert (r.vector > 0).all()
    assert np.linalg.norm(r.vector) == pytest.approx(1.0, abs=1e-12)
    sums = h.row_sums()
    assert sums.min() - 1e-12 <= r.radius <= sums.max() + 1e-12
    assert r.radius >= sums.mean() - 1e-12
    spec = full_spectrum(h)
    assert abs(r.radius - spec[0]) <= 1e-8
    assert abs(sum(spec)) <= 1e-9


def test_shifted_fallback_converges():
    # periodic nonnegative matrix with spectrum {sqrt 2, 0, -sqrt 2}: the plain
    # iteration oscillates forever from the all-ones start
    a = np.array([[0.0, 1, 0], [1, 0, 1], [0, 1, 0]])
    r = spectral_radius(HararyMatrix(3, a))
    assert r.shifted
    assert r.radius == pytest.approx(math.sqrt(2), abs=1e-12)
    assert r.residual <= 1e-12


def test_non_convergence_reported():
    from harary import NonConvergenceError

    a = np.array([[0.0, 1, 0], [1, 0, 1], [0, 1, 0]])
    with pytest.raises(NonConvergenceError) as err:
        spectral_radius(HararyMatrix(3, a), max_iter=50)
    assert err.value.iterations == 50


def test_closed_forms():
    assert rho_closed_form(Complete(5)) == 4
    assert rho_closed_form(CompleteBipartite(3, 3)) == 4
    assert rho_closed_form(CompleteBipartite(2, 5)) == 4.5
    with pytest.raises(GraphError):
        rho_closed_form(SplitJoin(1, (2,)))


@pytest.mark.parametrize("n1, n2", [(a, b) for a in range(1, 7) for b in range(a, 13 - a)])
def test_closed_form_bipartite_agreement(n1, n2):
    r = spectral_radius(harary_of(generate(CompleteBipartite(n1, n2)))).radius
    assert abs(r - rho_closed_form(CompleteBipartite(n1, n2))) <= 1e-8


@pytest.mark.parametrize("g", [complete_graph(n) for n in (2, 5, 9)] + [generate(CompleteBipartite(m, m)) for m in (1, 3, 5)])
def test_row_regular_radius_exact(g):
    h = harary_of(g)
    c = h.row_sums()[0]
    assert np.allclose(h.row_sums(), c)
    assert abs(spectral_radius(h).radius - c) <= 1e-12


@settings(max_examples=60)
@given(connected_graphs(min_n=3, max_n=10))
def test_edge_monotonicity(g):
    base = spectral_radius(harary_of(g)).radius
    for u, v in g.non_edges()[:5]:
        assert spectral_radius(harary_of(g.add_edge(u, v))).radius - base > 1e-9


@settings(max_examples=60)
@given(connected_graphs(min_n=3, max_n=10))
def test_deleting_non_bridge_decreases(g):
    base = spectral_radius(harary_of(g)).radius
    bridges = set(cut_edges(g))
    for e in [e for e in g.edges() if e not in bridges][:5]:
        assert base - spectral_radius(harary_of(g.remove_edge(*e))).radius > 1e-9
