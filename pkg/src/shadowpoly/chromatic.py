"""Chromatic polynomials by deletion-contraction with a canonical-form cache."""
from __future__ import annotations

import threading

from .graph import Graph, canonical_key, component_masks, iter_bits
from .poly import ONE, RationalPoly, falling_factorial


class ChromaticCache:
    """Canonical key -> chromatic polynomial.

    Entries are whole immutable polynomials, so a reader sees either nothing
    or a finished value.  Two threads racing on one key just compute it twice.
    """

    def __init__(self):
        self._data: dict[bytes, RationalPoly] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: bytes) -> RationalPoly | None:
        p = self._data.get(key)
        if p is None:
            self.misses += 1
        else:
            self.hits += 1
        return p

    def put(self, key: bytes, p: RationalPoly) -> None:
        with self._lock:
            self._data.setdefault(key, p)

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


default_cache = ChromaticCache()

_K_MINUS = {}


def _k_minus(j: int) -> RationalPoly:
    p = _K_MINUS.get(j)
    if p is None:
        p = _K_MINUS[j] = RationalPoly([-j, 1])
    return p


def _tree_poly(n: int) -> RationalPoly:
    return _k_minus(0) * _k_minus(1) ** (n - 1)


def _drop_vertex(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    return tuple((row & low) | (row >> (v + 1) << v) for i, row in enumerate(adj) if i != v)


def _restrict(adj: tuple[int, ...], mask: int) -> tuple[int, ...]:
    verts = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        row = 0
        for u in iter_bits(adj[v] & mask):
            row |= 1 << pos[u]
        out.append(row)
    return tuple(out)


def _find_simplicial(adj: tuple[int, ...]) -> int:
    for v, nb in enumerate(adj):
        ok = True
        for u in iter_bits(nb):
            if (adj[u] | 1 << u) & nb != nb:
                ok = False
                break
        if ok:
            return v
    return -1


def _chromatic(adj: tuple[int, ...], cache: ChromaticCache) -> RationalPoly:
    n = len(adj)
    if n == 0:
        return ONE
    comps = component_masks(Graph._unchecked(adj))
    if len(comps) > 1:
        out = ONE
        for mask in comps:
            out = out * _chromatic(_restrict(adj, mask), cache)
        return out
    degs = [row.bit_count() for row in adj]
    m = sum(degs) // 2
    if m == n - 1:
        return _tree_poly(n)
    if m == n * (n - 1) // 2:
        return falling_factorial(n)
    v = _find_simplicial(adj)
    if v >= 0:
        # a vertex whose neighborhood is a clique sees deg(v) distinct colors
        return _chromatic(_drop_vertex(adj, v), cache) * _k_minus(degs[v])
    key = canonical_key(Graph._unchecked(adj))
    hit = cache.get(key)
    if hit is not None:
        return hit
    best = None
    for a in range(n):
        for b in iter_bits(adj[a] >> (a + 1) << (a + 1)):
            score = degs[a] + degs[b]
            if best is None or score > best[0]:
                best = (score, a, b)
    _, a, b = best
    deleted = list(adj)
    deleted[a] &= ~(1 << b)
    deleted[b] &= ~(1 << a)
    merged = list(deleted)
    merged[a] |= deleted[b]
    for u in iter_bits(deleted[b]):
        merged[u] |= 1 << a
    merged = _drop_vertex(tuple(merged), b)
    result = _chromatic(tuple(deleted), cache) - _chromatic(merged, cache)
    cache.put(key, result)
    return result


def chromatic_polynomial(g: Graph, cache: ChromaticCache | None = None) -> RationalPoly:
    """Number of proper k-colorings of ``g`` as a polynomial in k."""
    return _chromatic(g.adj, default_cache if cache is None else cache)
