"""Exhaustive isomorphism-class enumeration of small graphs and trees.

Order n+1 classes come from adding one vertex with every possible
neighborhood to each order-n class, keeping one graph per canonical key.
Every graph on n+1 vertices arises this way (delete any vertex), so nothing
is missed.
"""
from __future__ import annotations

from typing import Iterator

from .graph import Graph, canonical_form, canonical_key, is_connected

_graph_levels: list[list[Graph]] = [[Graph(0, ())]]
_tree_levels: list[list[Graph]] = [[], [Graph(1, (0,))]]


def _grow(level: list[Graph], masks) -> list[Graph]:
    found: dict[bytes, Graph] = {}
    for g in level:
        n = g.n
        for mask in masks(n):
            adj = list(g.adj)
            for u in range(n):
                if mask >> u & 1:
                    adj[u] |= 1 << n
            adj.append(mask)
            h = Graph._unchecked(tuple(adj))
            key = canonical_key(h)
            if key not in found:
                found[key] = canonical_form(h)
    return [found[k] for k in sorted(found)]


def graphs_of_order(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on exactly n vertices."""
    while len(_graph_levels) <= n:
        _graph_levels.append(_grow(_graph_levels[-1], lambda m: range(1 << m)))
    return list(_graph_levels[n])


def trees_of_order(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on exactly n vertices."""
    if n < 1:
        return []
    while len(_tree_levels) <= n:
        # a tree minus a leaf is a tree, so attaching one leaf suffices
        _tree_levels.append(_grow(_tree_levels[-1], lambda m: (1 << u for u in range(m))))
    return list(_tree_levels[n])


def all_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from graphs_of_order(n)


def all_trees(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from trees_of_order(n)


def connected_graphs_of_order(n: int) -> list[Graph]:
    return [g for g in graphs_of_order(n) if is_connected(g)]
