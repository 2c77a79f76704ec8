"""Tests for graph construction, generators, and the corona products."""
from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from qwcorona.graphs import (
    CoronaVertex,
    Graph,
    cocktail_party_graph,
    complete_graph,
    cycle_graph,
    diameter,
    distance_k_adjacency,
    distance_matrix,
    empty_graph,
    generate,
    graph_from_edges,
    halved_cube_graph,
    hypercube_graph,
    is_connected,
    is_regular,
    path_graph,
    read_edge_list,
    regular_degree,
    signless_laplacian,
    standard_corona,
    vertex_complemented_corona,
)


# =========================================================================
# Graph type and validation
# =========================================================================


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        Graph(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        Graph(np.array([[1, 0], [0, 0]]))
    with pytest.raises(ValueError):
        Graph(np.array([[0, 2], [2, 0]]))


def test_graph_adjacency_read_only():
    g = complete_graph(3)
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = 0


def test_graph_degrees_and_edges():
    g = path_graph(4)
    assert list(g.degrees()) == [1, 2, 2, 1]
    assert g.edge_count() == 3
    assert list(g.neighbors(1)) == [0, 2]


# =========================================================================
# generators
# =========================================================================


def test_complete_graph():
    for n in range(1, 7):
        g = complete_graph(n)
        assert g.n == n
        assert g.edge_count() == n * (n - 1) // 2
        assert is_regular(g)


def test_empty_graph():
    g = empty_graph(5)
    assert g.edge_count() == 0
    assert regular_degree(g) == 0


def test_cycle_and_path():
    for n in range(3, 8):
        c = cycle_graph(n)
        assert c.edge_count() == n
        assert regular_degree(c) == 2
        p = path_graph(n)
        assert p.edge_count() == n - 1
        assert not is_regular(p)
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_cocktail_party_graph():
    # complement of a perfect matching: vertex 2i misses only 2i+1
    for m in range(1, 5):
        g = cocktail_party_graph(m)
        assert g.n == 2 * m
        assert regular_degree(g) == 2 * m - 2
        for i in range(m):
            assert g.adjacency[2 * i, 2 * i + 1] == 0


def test_hypercube_graph():
    for d in range(1, 5):
        g = hypercube_graph(d)
        assert g.n == 2 ** d
        assert regular_degree(g) == d
        assert diameter(g) == d


def test_halved_cube_graph():
    # halved cube of the 2d-cube: even-weight words, adjacent at Hamming
    # distance two; for d = 2 this is the cocktail party graph on 8 vertices
    g = halved_cube_graph(2)
    assert g.n == 8
    assert regular_degree(g) == 6
    cp = cocktail_party_graph(4)
    qg = np.sort(np.linalg.eigvalsh(signless_laplacian(g)))
    qcp = np.sort(np.linalg.eigvalsh(signless_laplacian(cp)))
    assert np.allclose(qg, qcp, atol=1e-9)

    g3 = halved_cube_graph(3)
    assert g3.n == 32
    assert regular_degree(g3) == 15


def test_generate_grammar():
    assert generate("K:4").n == 4
    assert generate("C:5").n == 5
    assert generate("empty:2").n == 2
    assert generate("CP:3").n == 6
    assert generate("HQ:3").n == 8
    assert generate("halved:2").n == 8
    for bad in ("K", "K:", "K:x", "Q:3", "K:0", ""):
        with pytest.raises(ValueError):
            generate(bad)


def test_regularity_error_names_vertex():
    with pytest.raises(ValueError, match="regularity violation at vertex 1"):
        regular_degree(path_graph(3))


# =========================================================================
# corona products
# =========================================================================


def test_corona_vertex_indexing():
    # fixed order: base vertices first, then copy i at n1 + i*n2 + (j-1)
    n1, n2 = 3, 4
    seen = set()
    for i in range(n1):
        seen.add(CoronaVertex(i, 0).index(n1, n2))
        for j in range(1, n2 + 1):
            seen.add(CoronaVertex(i, j).index(n1, n2))
    assert seen == set(range(n1 * (1 + n2)))


def test_vertex_complemented_corona_structure():
    g = cycle_graph(4)
    h = complete_graph(2)
    c = vertex_complemented_corona(g, h)
    n1, n2 = g.n, h.n
    assert c.n == n1 * (1 + n2)
    # base block is G itself
    assert np.array_equal(c.adjacency[:n1, :n1], g.adjacency)
    # copy i joins every base vertex except v_i
    for i in range(n1):
        for j in range(n2):
            row = c.adjacency[n1 + i * n2 + j, :n1]
            expected = np.ones(n1)
            expected[i] = 0
            assert np.array_equal(row, expected)
    # each copy is H internally, no edges between distinct copies
    for i in range(n1):
        lo, hi = n1 + i * n2, n1 + (i + 1) * n2
        assert np.array_equal(c.adjacency[lo:hi, lo:hi], h.adjacency)
        for k in range(i + 1, n1):
            lo2, hi2 = n1 + k * n2, n1 + (k + 1) * n2
            assert not c.adjacency[lo:hi, lo2:hi2].any()


def test_vertex_complemented_corona_degrees():
    # base degree r1 + n2*(n1-1), copy degree r2 + (n1-1)
    g = cocktail_party_graph(3)
    h = cycle_graph(3)
    c = vertex_complemented_corona(g, h)
    n1, n2 = g.n, h.n
    deg = c.degrees()
    assert all(deg[i] == 4 + 3 * (n1 - 1) for i in range(n1))
    assert all(deg[k] == 2 + (n1 - 1) for k in range(n1, c.n))


def test_standard_corona_structure():
    g = cycle_graph(4)
    h = complete_graph(2)
    c = standard_corona(g, h)
    n1, n2 = g.n, h.n
    # copy i joins exactly v_i
    for i in range(n1):
        for j in range(n2):
            row = c.adjacency[n1 + i * n2 + j, :n1]
            expected = np.zeros(n1)
            expected[i] = 1
            assert np.array_equal(row, expected)


def test_corona_on_two_base_vertices():
    # n1 = 2: each copy attaches to the single other base vertex
    c = vertex_complemented_corona(complete_graph(2), complete_graph(1))
    assert c.n == 4
    assert c.adjacency[2, 1] == 1 and c.adjacency[2, 0] == 0
    assert c.adjacency[3, 0] == 1 and c.adjacency[3, 1] == 0


# =========================================================================
# distances
# =========================================================================


def test_distance_matrix_cycle():
    g = cycle_graph(6)
    d = distance_matrix(g)
    for u in range(6):
        for v in range(6):
            k = abs(u - v)
            assert d[u, v] == min(k, 6 - k)
    assert diameter(g) == 3


def test_distance_matrix_disconnected():
    g = empty_graph(3)
    d = distance_matrix(g)
    assert d[0, 1] == -1
    with pytest.raises(ValueError):
        diameter(g)


def test_distance_k_adjacency_partitions_pairs():
    g = hypercube_graph(3)
    total = np.zeros((8, 8))
    for k in range(diameter(g) + 1):
        total += distance_k_adjacency(g, k)
    assert np.array_equal(total, np.ones((8, 8)))


def test_signless_laplacian():
    g = path_graph(3)
    q = signless_laplacian(g)
    assert np.array_equal(q, np.array([[1, 1, 0], [1, 2, 1], [0, 1, 1]]))
    assert np.array_equal(q, q.T)


# =========================================================================
# edge lists
# =========================================================================


def test_graph_from_edges_validation():
    g = graph_from_edges(3, [(0, 1), (1, 2)])
    assert g.edge_count() == 2
    with pytest.raises(ValueError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        graph_from_edges(3, [(0, 1), (1, 0)])


def test_read_edge_list(tmp_path):
    p = tmp_path / "g.edges"
    p.write_text("4\n# a comment\n0 1\n1 2\n2 3\n3 0\n")
    g = read_edge_list(p)
    q = np.sort(np.linalg.eigvalsh(signless_laplacian(g)))
    qc = np.sort(np.linalg.eigvalsh(signless_laplacian(cycle_graph(4))))
    assert np.allclose(q, qc, atol=1e-9)


def test_read_edge_list_errors(tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("")
    with pytest.raises(ValueError):
        read_edge_list(bad)
    bad.write_text("x\n")
    with pytest.raises(ValueError):
        read_edge_list(bad)
    bad.write_text("3\n0 1 2\n")
    with pytest.raises(ValueError):
        read_edge_list(bad)


# =========================================================================
# connectivity
# =========================================================================


def test_is_connected():
    assert is_connected(cycle_graph(5))
    assert is_connected(complete_graph(1))
    assert not is_connected(empty_graph(2))
    two_triangles = graph_from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_connected(two_triangles)


def test_corona_always_connected():
    # every copy vertex reaches n1 - 1 base vertices, so the corona of a
    # disconnected base is still connected once n1 >= 2... except for the
    # degenerate all-isolated case on two vertices where copies bridge
    for gspec in ("K:3", "C:4", "empty:3"):
        for hspec in ("K:1", "K:2", "empty:2"):
            c = vertex_complemented_corona(generate(gspec), generate(hspec))
            assert is_connected(c)


def test_pairs_distinct_in_small_corona():
    c = vertex_complemented_corona(cycle_graph(4), complete_graph(1))
    for u, v in combinations(range(c.n), 2):
        assert u != v
