from itertools import permutations

import pytest
from hypothesis import given

from conftest import graphs
from shadowpoly.chromatic import chromatic_polynomial
from shadowpoly.counting import (
    PatternTooLarge, ProductCliqueSpec, clear_memo, clique_poly, count_poly, count_poly_connected,
    embedding_cover_count, enumerate_J, hexagon_poly, largest_component, pairs_poly,
    product_clique_poly, smallest_component,
)
from shadowpoly.enumerate import all_graphs, connected_graphs_of_order
from shadowpoly.graph import (
    Graph, canonical_key, complete_graph, cycle_graph, disjoint_union, empty_graph,
    connected_ordering, encode_graph6, is_connected, is_connected_ordering, path_graph,
)
from shadowpoly.statemap import enumerate_state_maps
from shadowpoly.oracle import oracle_count
from shadowpoly.poly import K, ZERO, binomial_poly

K1, K2, K3 = Graph(1), complete_graph(2), complete_graph(3)

# the classes drawn for J(K3, K2), vertices numbered in drawing order
J_K3_K2_DRAWN = [
    (3, [(0, 1), (0, 2), (1, 2)]),
    (4, [(0, 1), (1, 2), (2, 0), (1, 3)]),
    (4, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)]),
    (4, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3), (0, 3)]),
] + [(5, [(0, 1), (1, 4), (4, 0), (2, 3)] + extra) for extra in (
    [],
    [(3, 4)],
    [(1, 3), (3, 4)],
    [(1, 3), (3, 4), (0, 3)],
    [(3, 4), (4, 2)],
    [(3, 4), (2, 1)],
    [(3, 4), (4, 2), (2, 1)],
    [(3, 4), (4, 2), (2, 1), (3, 1)],
    [(3, 4), (4, 2), (2, 1), (1, 3), (3, 0)],
    [(3, 4), (4, 2), (2, 1), (1, 3), (3, 0), (0, 2)],
)]


def keys(gs):
    return {canonical_key(g) for g in gs}


def test_pairs_examples():
    from reference_graphs import DIAMONDS
    assert pairs_poly(DIAMONDS) == (
        4 * K**9 - 54 * K**8 + 306 * K**7 - 942 * K**6 + 1698 * K**5 - 1788 * K**4 + 1016 * K**3 - 240 * K**2)
    assert pairs_poly(K2)(3) == 6
    t = path_graph(3)
    assert pairs_poly(t) == K * (K - 1) * (K - 2) * (3 * K - 4) / 2


def test_clique_examples():
    for r in range(2, 6):
        assert clique_poly(K1, r) == binomial_poly(K, r)
    assert clique_poly(path_graph(3), 3)(4) == oracle_count(path_graph(3), K3, 4)
    with pytest.raises(ValueError):
        clique_poly(K1, 1)


@given(graphs(max_n=5))
def test_clique_two_is_pairs(g):
    assert clique_poly(g, 2) == pairs_poly(g)


def test_product_examples():
    two = empty_graph(2)
    assert product_clique_poly(two, (2, 2)) == binomial_poly(K, 2) ** 2
    assert product_clique_poly(K1, (2, 2)) == ZERO
    assert product_clique_poly(path_graph(3), (3,)) == clique_poly(path_graph(3), 3)
    spec = ProductCliqueSpec((3, 2, 2))
    assert spec.multiplicities == {3: 1, 2: 2}
    assert spec.normalization == 6 * 2 * 2 * 2
    with pytest.raises(ValueError):
        ProductCliqueSpec((1, 2))


def test_hexagon_examples():
    assert hexagon_poly(K1) == ZERO
    assert hexagon_poly(K2)(3) == 1
    for g in all_graphs(3):
        p = hexagon_poly(g)
        for k in range(5):
            assert p(k) == oracle_count(g, cycle_graph(6), k)


def test_connected_examples():
    assert count_poly_connected(K1, K3) == binomial_poly(K, 3)
    for g in all_graphs(5):
        assert count_poly_connected(g, path_graph(2)) == pairs_poly(g)
        assert count_poly(g, K1) == chromatic_polynomial(g)
    with pytest.raises(Exception):
        count_poly_connected(K2, empty_graph(2))


def all_connected_orderings(h):
    return [o for o in permutations(range(h.n)) if is_connected_ordering(h, o)]


@pytest.mark.parametrize("h", [path_graph(3), cycle_graph(4), Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
                               complete_graph(4).remove_vertex(0)], ids=["P3", "C4", "paw", "K3"])
def test_total_does_not_depend_on_ordering(h):
    for g in list(all_graphs(3)) + [path_graph(4)]:
        totals = {count_poly_connected(g, h, ordering=o) for o in all_connected_orderings(h)}
        assert len(totals) == 1


def test_J_examples():
    assert keys(enumerate_J(K1, K1)) == keys([K1, empty_graph(2), K2])
    p3 = path_graph(3)
    assert keys(enumerate_J(K1, K2)) == keys([K2, disjoint_union(K2, K1), p3, K3])
    diamond = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)])
    assert embedding_cover_count(diamond, K2, K3) == 4
    assert embedding_cover_count(K2, K1, K1) == 2
    assert embedding_cover_count(K1, K1, K1) == 1


def test_J_matches_covering_definition_by_brute_force():
    for a, b in ((K3, K2), (path_graph(3), K1), (K2, K2), (path_graph(3), K2)):
        brute = {canonical_key(u) for n in range(max(a.n, b.n), a.n + b.n + 1)
                 for u in all_graphs(n, n) if embedding_cover_count(u, a, b) > 0}
        assert keys(enumerate_J(a, b)) == brute


def test_J_K3_K2_contains_every_drawn_class():
    drawn = [Graph.from_edges(n, e) for n, e in J_K3_K2_DRAWN]
    assert len(keys(drawn)) == 14
    found = enumerate_J(K3, K2)
    assert keys(drawn) <= keys(found)
    extra = [u for u in found if canonical_key(u) not in keys(drawn)]
    # two covers the drawing leaves out, both genuine members
    assert sorted((u.n, u.num_edges()) for u in extra) == [(5, 7), (5, 8)]
    assert all(embedding_cover_count(u, K3, K2) > 0 for u in extra)


def test_undrawn_J_K3_K2_classes_never_occur_in_coloring_graphs():
    drawn = keys(Graph.from_edges(n, e) for n, e in J_K3_K2_DRAWN)
    extra = [u for u in enumerate_J(K3, K2) if canonical_key(u) not in drawn]
    for u in extra:
        assert enumerate_state_maps(u, connected_ordering(u)) == []
        assert all(count_poly(g, u) == ZERO for g in all_graphs(4))


def test_cover_size_cap():
    with pytest.raises(PatternTooLarge):
        enumerate_J(complete_graph(5), complete_graph(5))


@pytest.mark.parametrize("h", [
    empty_graph(2), empty_graph(3), disjoint_union(K2, K1), disjoint_union(K3, K2),
    disjoint_union(K2, K2), disjoint_union(path_graph(3), K1), disjoint_union(K2, K1, K1),
], ids=["2K1", "3K1", "K2+K1", "K3+K2", "2K2", "P3+K1", "K2+2K1"])
def test_disconnected_against_oracle(h):
    for g in all_graphs(3):
        p = count_poly(g, h)
        for k in range(5):
            assert p(k) == oracle_count(g, h, k), (encode_graph6(g), k)


def test_component_choice_does_not_matter():
    patterns = [disjoint_union(K3, K1), disjoint_union(path_graph(3), K2), disjoint_union(K2, K1, K1),
                disjoint_union(cycle_graph(4), K1), disjoint_union(K3, K2, K1)]
    for h in patterns:
        for g in all_graphs(3):
            clear_memo()
            big = count_poly(g, h, choose=largest_component)
            small = count_poly(g, h, choose=smallest_component)
            assert big == small


def test_two_isolated_identity():
    for g in all_graphs(5):
        pi = chromatic_polynomial(g)
        assert count_poly(g, empty_graph(2)) == binomial_poly(pi, 2) - pairs_poly(g)


def test_degree_bound_for_connected_patterns():
    for h in connected_graphs_of_order(4):
        for g in all_graphs(4):
            assert count_poly(g, h).degree <= g.n + h.n - 1


def test_empty_pattern_counts_once():
    assert count_poly(K3, Graph(0)) == 1
    assert not is_connected(empty_graph(2))
