"""Polynomials counting induced copies of a pattern H in the coloring graph C_k(G).

Every count is a rational combination of chromatic polynomials of shadow
graphs of G.  The closed forms for edges, cliques, products of cliques and
hexagons are kept as separate code paths from the general state-map sum so
the two can be checked against each other.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial, prod
from typing import Callable, Sequence

from .chromatic import ChromaticCache, chromatic_polynomial, default_cache
from .graph import (
    Graph,
    GraphError,
    automorphism_order,
    canonical_key,
    connected_components,
    connected_ordering,
    is_connected,
)
from .poly import ONE, ZERO, RationalPoly
from .shadow import shadow_clique, shadow_from_states, shadow_general, shadow_product
from .statemap import enumerate_state_maps

MAX_COVER_ORDER = 9


class PatternTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ProductCliqueSpec:
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if any(r < 2 for r in self.sizes):
            raise ValueError("clique sizes must be >= 2")

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.sizes))

    @property
    def normalization(self) -> int:
        return prod(factorial(r) for r in self.sizes) * prod(
            factorial(m) for m in self.multiplicities.values())


@dataclass(frozen=True)
class CoverPair:
    set_a: frozenset
    set_b: frozenset


def _cache(cache):
    return default_cache if cache is None else cache


def pairs_poly(g: Graph, cache: ChromaticCache | None = None) -> RationalPoly:
    """Edges of C_k(G): half the sum over v of the chromatic polynomial of the P2-shadow at v."""
    cache = _cache(cache)
    total = ZERO
    for v in range(g.n):
        total = total + chromatic_polynomial(shadow_clique(g, v, 2).graph, cache)
    return total / 2


def clique_poly(g: Graph, r: int, cache: ChromaticCache | None = None) -> RationalPoly:
    if r < 2:
        raise ValueError("r must be >= 2")
    cache = _cache(cache)
    total = ZERO
    for v in range(g.n):
        total = total + chromatic_polynomial(shadow_clique(g, v, r).graph, cache)
    return total / factorial(r)


def product_clique_poly(g: Graph, spec: ProductCliqueSpec | Sequence[int],
                        cache: ChromaticCache | None = None) -> RationalPoly:
    if not isinstance(spec, ProductCliqueSpec):
        spec = ProductCliqueSpec(tuple(spec))
    cache = _cache(cache)
    total = ZERO
    for x in permutations(range(g.n), len(spec.sizes)):
        total = total + chromatic_polynomial(shadow_product(g, x, spec.sizes).graph, cache)
    return total / spec.normalization


HEXAGON_TWO_VERTEX = ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (1, 3))
HEXAGON_THREE_VERTEX = ((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (1, 2, 2), (1, 1, 2))


def hexagon_poly(g: Graph, cache: ChromaticCache | None = None) -> RationalPoly:
    """Induced 6-cycles: two vertices cycling through three colors, or three through two."""
    cache = _cache(cache)
    total = ZERO
    for sizes, states in (((3, 3), HEXAGON_TWO_VERTEX), ((2, 2, 2), HEXAGON_THREE_VERTEX)):
        for x in permutations(range(g.n), len(sizes)):
            sg = shadow_from_states(g, x, sizes, states)
            total = total + chromatic_polynomial(sg.graph, cache)
    return total / 12


def count_poly_connected(g: Graph, h: Graph, cache: ChromaticCache | None = None,
                         ordering: Sequence[int] | None = None) -> RationalPoly:
    """Sum of shadow-graph chromatic polynomials over state maps and vertex tuples, over |Aut(H)|."""
    cache = _cache(cache)
    if not is_connected(h):
        raise GraphError("pattern is not connected; use count_poly")
    if h.n == 1:
        return chromatic_polynomial(g, cache)
    if ordering is None:
        ordering = connected_ordering(h)
    total = ZERO
    for f in enumerate_state_maps(h, ordering):
        for x in permutations(range(g.n), f.d):
            total = total + chromatic_polynomial(shadow_general(g, x, f).graph, cache)
    return total / automorphism_order(h)


def _check_cover_size(a: Graph, b: Graph) -> None:
    if a.n + b.n > MAX_COVER_ORDER:
        raise PatternTooLarge(
            f"pattern too large: covering {a.n}+{b.n} vertices exceeds the cap of {MAX_COVER_ORDER}")


def _placements(b: Graph, slots: Sequence[int]) -> list[frozenset]:
    """Distinct edge sets of ``b`` laid onto the vertex names in ``slots``."""
    seen = set()
    edges = b.edges()
    for perm in permutations(slots):
        seen.add(frozenset((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
    return list(seen)


def enumerate_J(a: Graph, b: Graph) -> list[Graph]:
    """Isomorphism classes of graphs covered by an induced A and an induced B (overlap allowed)."""
    _check_cover_size(a, b)
    found: dict[bytes, Graph] = {}
    a_edges = set(a.edges())
    for s in range(min(a.n, b.n), -1, -1):
        n = a.n + b.n - s
        new = list(range(a.n, n))
        for overlap in combinations(range(a.n), s):
            a_only = [v for v in range(a.n) if v not in overlap]
            slots = [(p, q) for p in a_only for q in new]
            for b_edges in _placements(b, list(overlap) + new):
                if any(((u, v) in a_edges) != ((u, v) in b_edges)
                       for u, v in combinations(overlap, 2)):
                    continue
                base = a_edges | b_edges
                for mask in range(1 << len(slots)):
                    extra = [slots[i] for i in range(len(slots)) if mask >> i & 1]
                    u_graph = Graph.from_edges(n, list(base) + extra)
                    key = canonical_key(u_graph)
                    if key not in found:
                        found[key] = u_graph
    return [found[k] for k in sorted(found)]


def iter_cover_pairs(u: Graph, a: Graph, b: Graph):
    if a.n > u.n or b.n > u.n or a.n + b.n < u.n:
        return
    ka, kb = canonical_key(a), canonical_key(b)
    everything = set(range(u.n))
    for va in combinations(range(u.n), a.n):
        if canonical_key(u.induced(va)) != ka:
            continue
        rest = sorted(everything - set(va))
        need = b.n - len(rest)
        if need < 0:
            continue
        for extra in combinations(va, need):
            vb = sorted(rest + list(extra))
            if canonical_key(u.induced(vb)) == kb:
                yield CoverPair(frozenset(va), frozenset(vb))


def embedding_cover_count(u: Graph, a: Graph, b: Graph) -> int:
    """Ordered pairs (V_A, V_B) covering V(U) with U[V_A] ~ A and U[V_B] ~ B."""
    return sum(1 for _ in iter_cover_pairs(u, a, b))


def _component_list(h: Graph) -> list[tuple[Graph, tuple[int, ...], bytes]]:
    return [(c, vmap, canonical_key(c)) for c, vmap in connected_components(h)]


def largest_component(comps):
    return min(comps, key=lambda c: (-c[0].n, c[2]))


def smallest_component(comps):
    return min(comps, key=lambda c: (c[0].n, c[2]))


_count_memo: dict[tuple, RationalPoly] = {}


def count_poly(g: Graph, h: Graph, cache: ChromaticCache | None = None,
               choose: Callable = largest_component) -> RationalPoly:
    """Number of induced copies of ``h`` in C_k(g), as a polynomial in k."""
    cache = _cache(cache)
    if h.n == 0:
        return ONE
    key = (canonical_key(g), canonical_key(h), choose.__name__)
    hit = _count_memo.get(key)
    if hit is not None:
        return hit
    comps = _component_list(h)
    if len(comps) == 1:
        result = count_poly_connected(g, h, cache)
    else:
        first, vmap, first_key = choose(comps)
        rest = h.induced([v for v in range(h.n) if v not in set(vmap)])
        n_same = sum(1 for c in comps if c[2] == first_key)
        h_key = canonical_key(h)
        total = count_poly(g, first, cache, choose) * count_poly(g, rest, cache, choose)
        for u in enumerate_J(first, rest):
            if canonical_key(u) == h_key:
                continue
            f = embedding_cover_count(u, first, rest)
            if f:
                total = total - count_poly(g, u, cache, choose) * f
        result = total / n_same
    _count_memo[key] = result
    return result


def clear_memo() -> None:
    _count_memo.clear()

