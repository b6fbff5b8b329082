from math import comb

import pytest

from shadowpoly.chromatic import chromatic_polynomial
from shadowpoly.enumerate import all_graphs
from shadowpoly.graph import (
    Graph, complete_graph, cycle_graph, disjoint_union, is_isomorphic, path_graph,
)
from shadowpoly.oracle import (
    BudgetExceeded, build_coloring_graph, color_orbit_roots, count_embeddings, count_induced,
    oracle_count, proper_colorings,
)


def test_coloring_graph_examples():
    cg = build_coloring_graph(complete_graph(2), 3)
    assert is_isomorphic(cg.graph, cycle_graph(6))
    assert build_coloring_graph(Graph(1), 4).graph == complete_graph(4)
    assert build_coloring_graph(complete_graph(3), 2).graph.n == 0


def test_coloring_graph_structure():
    g = path_graph(3)
    cg = build_coloring_graph(g, 3)
    labels = cg.labels
    assert len(set(labels)) == len(labels)
    assert list(labels) == sorted(labels)
    for lab in labels:
        assert all(lab[u] != lab[v] for u, v in g.edges())
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            diff = sum(x != y for x, y in zip(labels[a], labels[b]))
            assert cg.graph.has_edge(a, b) == (diff == 1)


def test_vertex_count_is_chromatic_value():
    for g in all_graphs(4):
        p = chromatic_polynomial(g)
        for k in range(5):
            assert len(proper_colorings(g, k)) == p(k)


def test_count_induced_examples():
    assert count_induced(complete_graph(3), path_graph(2)) == 3
    assert count_induced(cycle_graph(6), cycle_graph(6)) == 1
    assert count_induced(cycle_graph(4), complete_graph(3)) == 0
    assert count_induced(path_graph(2), path_graph(3)) == 0


def test_oracle_examples():
    assert oracle_count(complete_graph(2), cycle_graph(6), 3) == 1
    assert oracle_count(complete_graph(2), path_graph(2), 3) == 6
    for k in range(7):
        for r in range(1, 5):
            assert oracle_count(Graph(1), complete_graph(r), k) == comb(k, r)


def test_orbit_rooting_matches_plain_count():
    patterns = [path_graph(3), cycle_graph(4), disjoint_union(complete_graph(2), Graph(1)), Graph(2)]
    for g in list(all_graphs(3)):
        for k in range(5):
            cg = build_coloring_graph(g, k)
            roots = color_orbit_roots(cg, k)
            assert sum(w for _, w in roots) == len(cg.labels)
            for h in patterns:
                assert count_embeddings(cg, h, roots) == count_embeddings(cg, h)


def test_budget():
    with pytest.raises(BudgetExceeded, match="10"):
        build_coloring_graph(complete_graph(5), 9, budget=10)
    with pytest.raises(BudgetExceeded):
        oracle_count(complete_graph(5), path_graph(2), 20)
