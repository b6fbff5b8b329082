"""Closed forms for trees, and subset statistics (size, interior, exterior edges)."""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple

from .graph import Graph, GraphError, is_tree
from .poly import K as _K, ZERO, RationalPoly


def _km(j: int) -> RationalPoly:
    return RationalPoly([-j, 1])


class GDSEntry(NamedTuple):
    size: int
    internal: int  # edges with both ends in S
    external: int  # edges with exactly one end in S

    @property
    def degree(self) -> int:
        return self.external + 2 * self.internal


class InfeasibleDegreeSums(ValueError):
    pass


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise GraphError("input is not a tree")


def _subset_stats(t: Graph, s: tuple[int, ...]) -> tuple[int, int]:
    """(deg(S), int(S)) for a vertex subset."""
    deg = sum(t.degree(v) for v in s)
    internal = sum(1 for u, v in combinations(s, 2) if t.has_edge(u, v))
    return deg, internal


def _term(n: int, d: int, deg: int, internal: int) -> RationalPoly:
    return _K * _km(1) ** (n + d - 1 - deg) * _km(2) ** (deg - internal) * _km(3) ** internal


def tree_hypercube_poly(t: Graph, d: int) -> RationalPoly:
    """Induced Q_d copies in C_k(t): one term per d-subset, weighted by its degree and interior edges."""
    _require_tree(t)
    n = t.n
    if d < 0:
        raise ValueError("d must be non-negative")
    tally = Counter(_subset_stats(t, s) for s in combinations(range(n), d))
    total = ZERO
    for (deg, internal), mult in sorted(tally.items()):
        total = total + _term(n, d, deg, internal).scale(mult)
    return total / 2 ** d


def tree_pairs_poly(t: Graph) -> RationalPoly:
    _require_tree(t)
    n = t.n
    total = ZERO
    for deg, mult in sorted(Counter(t.degrees()).items()):
        total = total + (_K * _km(1) ** (n - deg) * _km(2) ** deg).scale(mult)
    return total / 2


def tree_square_poly(t: Graph) -> RationalPoly:
    """Induced 4-cycles: adjacent vertex pairs and non-adjacent pairs contribute different terms."""
    _require_tree(t)
    n = t.n
    total = ZERO
    for u, v in combinations(range(n), 2):
        du, dv = t.degree(u), t.degree(v)
        if t.has_edge(u, v):
            term = _K * _km(1) ** (n - du - dv + 1) * _km(2) ** (du + dv - 1) * _km(3)
        else:
            term = _K * _km(1) ** (n - du - dv + 1) * _km(2) ** (du + dv)
        total = total + term
    return total / 4


def gds_multiset(t: Graph, i: int) -> Counter:
    """Counter of GDSEntry over all i-subsets, edges classified one by one."""
    _require_tree(t)
    if not 0 <= i <= t.n:
        raise ValueError(f"i must lie in 0..{t.n}")
    edges = t.edges()
    out: Counter = Counter()
    for s in combinations(range(t.n), i):
        inside = set(s)
        internal = external = 0
        for u, v in edges:
            a, b = u in inside, v in inside
            if a and b:
                internal += 1
            elif a or b:
                external += 1
        out[GDSEntry(i, internal, external)] += 1
    return out


def pair_degree_sums(t: Graph) -> list[int]:
    """deg(u) + deg(v) over all unordered vertex pairs, sorted."""
    degs = t.degrees()
    return sorted(degs[u] + degs[v] for u, v in combinations(range(t.n), 2))


def recover_degrees_from_pair_sums(d_multiset: Iterable[int], n: int) -> list[int]:
    """Rebuild a tree's degree multiset from its multiset of pairwise degree sums.

    Leaves come from the count of sum 2; each further degree count follows
    from the count of sum k+1 once the lower counts are known.
    """
    sums = Counter(d_multiset)
    if n < 1 or sum(sums.values()) != comb(n, 2):
        raise InfeasibleDegreeSums(f"expected {comb(n, 2)} pair sums for n={n}")
    if n == 1:
        return [0]
    if n == 2:
        if sums != Counter({2: 1}):
            raise InfeasibleDegreeSums("a 2-vertex tree has pair sum 2")
        return [1, 1]
    # pair count at sum 2 is C(L, 2)
    two = sums.get(2, 0)
    leaves = next((x for x in range(n + 1) if comb(x, 2) == two), None)
    if leaves is None or leaves < 2:
        raise InfeasibleDegreeSums(f"{two} pairs summing to 2 is not C(L,2) for any L >= 2")
    count = {1: leaves}
    for k in range(2, n):
        # pairs summing to k+1: L * #(k) plus pairs i + j = k+1 with 2 <= i <= j
        known = 0
        for i in range(2, (k + 1) // 2 + 1):
            j = k + 1 - i
            if i == j:
                known += comb(count[i], 2)
            else:
                known += count[i] * count[j]
        rest = sums.get(k + 1, 0) - known
        if rest < 0 or rest % leaves:
            raise InfeasibleDegreeSums(f"pair sums at {k + 1} leave {rest} for {leaves} leaves")
        count[k] = rest // leaves
    degrees = [deg for deg in sorted(count) for _ in range(count[deg])]
    if len(degrees) != n or sum(degrees) != 2 * (n - 1):
        raise InfeasibleDegreeSums("recovered counts do not describe an n-vertex tree")
    again = sorted(degrees[u] + degrees[v] for u, v in combinations(range(n), 2))
    if Counter(again) != sums:
        raise InfeasibleDegreeSums("recovered degrees do not reproduce the pair sums")
    return degrees
