import math

import networkx as nx
import numpy as np
import pytest
import scipy.linalg

import gtrans


def k4():
    return gtrans.generate("complete", n=4)


def test_graph_roundtrip():
    g = gtrans.generate("erdos", n=30, p=0.2, seed=4, weight_range=(0.5, 2.0))
    assert g.is_connected()
    text = gtrans.to_edge_list(g, "roundtrip")
    assert text.startswith("# roundtrip")
    assert gtrans.load_graph(text) == g


def test_hop_distances_match_networkx():
    g = gtrans.generate("geometric", n=40, radius=0.3, seed=2)
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from((u, v) for u, v, _ in g.edges)
    expected = nx.single_source_shortest_path_length(ng, 0)
    assert gtrans.hop_distances(g, 0) == [expected[i] for i in range(g.n)]


@pytest.mark.parametrize("kind", ["laplacian", "normalized_laplacian", "adjacency"])
def test_exact_translation_matches_matrix_exponential(kind):
    g = gtrans.generate("erdos", n=12, p=0.4, seed=7, weight_range=(0.5, 2.0))
    alpha = 1.3
    if kind == "laplacian":
        m = gtrans.laplacian_matrix(g) / gtrans.laplacian_scale(g)
        expected = scipy.linalg.expm(-1j * alpha * math.pi * scipy.linalg.sqrtm(m))
    elif kind == "normalized_laplacian":
        m = gtrans.normalized_laplacian_matrix(g) / 2.0
        expected = scipy.linalg.expm(-1j * alpha * math.pi * scipy.linalg.sqrtm(m))
    else:
        a = gtrans.adjacency_matrix(g)
        m = np.eye(g.n) - a / np.max(np.linalg.eigvalsh(a))
        expected = scipy.linalg.expm(-1j * alpha * math.pi * m)
    t = gtrans.build_exact(g, kind, alpha).matrix()
    assert np.max(np.abs(t - expected)) < 1e-8
    assert np.max(np.abs(t.conj().T @ t - np.eye(g.n))) < 1e-10


def test_swap_on_two_vertices():
    g = gtrans.Graph(2, [(0, 1, 1.0)])
    t = gtrans.build_exact(g, "laplacian").matrix()
    assert np.allclose(t, [[0, 1], [1, 0]], atol=1e-12)
    assert np.allclose(gtrans.build_exact(g, "adjacency").matrix(), np.eye(2), atol=1e-12)


def test_eigensolver_against_numpy():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(20, 20))
    a = a + a.T
    values, vectors = gtrans.eig_sym(a)
    assert np.allclose(values, np.linalg.eigvalsh(a), atol=1e-10)
    assert np.allclose(vectors @ np.diag(values) @ vectors.T, a, atol=1e-10)


def test_approximation_within_oracle():
    g = gtrans.generate("grid", rows=4, cols=5)
    basis = gtrans.make_basis(g, "laplacian")
    gap, eps = gtrans.spectral_gap(basis)
    x = np.zeros(g.n, dtype=complex)
    x[3] = 1.0
    exact = gtrans.build_exact(g, "laplacian").apply(x)
    approx = gtrans.apply_laplacian_approx(g, "laplacian", 5, 2, 1.0, x)
    sup = gtrans.empirical_sup_error_laplacian(5, 2, 1.0, eps, gtrans.scaled_eigenvalues(basis), True)
    assert np.linalg.norm(exact - approx) <= sup + 1e-10
    assert gtrans.support_radius(g, approx, 3) <= 7


def test_bounds_and_min_order():
    eps = 9 / 11
    report = gtrans.total_bound_laplacian(5, 1, 1.0, eps)
    assert report.total_paper == pytest.approx(7.2115e-3, rel=1e-4)
    assert report.oracle is None
    assert math.isinf(report.corrected_total)
    assert gtrans.total_bound_adjacency(8, 1.0) == pytest.approx(4.842e-2, rel=1e-3)
    assert [gtrans.min_order_search(xi, 1.0, 0.1)[:2] for xi in (0.5, 0.1, 0.01)] == [(3, 0), (4, 1), (5, 1)]
    assert gtrans.min_order_search(1e-300, 1.0, 1e-6, max_order=5) is None
    assert gtrans.dc_error_term(5, 1, 1.0, 0.818182) == pytest.approx(1.1649, abs=1e-3)


def test_profile():
    p = gtrans.impulse_profile(k4(), "laplacian", 1.0, 0)
    assert sum(p.hop_energy) == pytest.approx(1.0, abs=1e-12)
    assert all(1 - c <= e + 1e-10 for c, e in zip(p.cumulative_fraction, p.envelope_oracle))


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        gtrans.load_graph("0 0 1")
    with pytest.raises(ValueError):
        gtrans.build_exact(k4(), "bogus")
    with pytest.raises(ValueError):
        gtrans.kappa_R(0, 1.0)
