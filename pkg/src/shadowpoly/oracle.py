"""Brute-force ground truth: build C_k(G) explicitly and count induced patterns."""
from __future__ import annotations

from dataclasses import dataclass
from math import perm

from .graph import Graph, _bfs_all, automorphism_order

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ColoringGraph:
    graph: Graph
    labels: tuple[tuple[int, ...], ...]
    neighbors: tuple[frozenset, ...]


def proper_colorings(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All proper colorings with colors 0..k-1, in lexicographic order."""
    n = g.n
    out: list[tuple[int, ...]] = []
    col = [0] * n
    earlier = [[u for u in g.neighbors(v) if u < v] for v in range(n)]

    def go(v: int) -> None:
        if v == n:
            out.append(tuple(col))
            return
        for c in range(k):
            if all(col[u] != c for u in earlier[v]):
                col[v] = c
                go(v + 1)

    go(0)
    return out


def build_coloring_graph(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> ColoringGraph:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k ** g.n > budget:
        raise BudgetExceeded(f"{k}^{g.n} = {k ** g.n} colorings exceeds the budget of {budget}")
    labels = proper_colorings(g, k)
    index = {c: i for i, c in enumerate(labels)}
    nbrs = []
    adj = []
    for c in labels:
        mine = set()
        for v in range(g.n):
            for other in range(k):
                if other != c[v]:
                    j = index.get(c[:v] + (other,) + c[v + 1:])
                    if j is not None:
                        mine.add(j)
        nbrs.append(frozenset(mine))
        row = 0
        for j in mine:
            row |= 1 << j
        adj.append(row)
    return ColoringGraph(Graph._unchecked(tuple(adj)), tuple(labels), tuple(nbrs))


def color_orbit_roots(cg: ColoringGraph, k: int) -> list[tuple[int, int]]:
    """One coloring per orbit of the color-permutation action, with its orbit size.

    Relabeling colors is an automorphism of C_k(G); a coloring whose colors
    first appear in the order 0, 1, 2, ... stands for k!/(k-c)! colorings,
    c being the number of colors it uses.
    """
    roots = []
    for i, lab in enumerate(cg.labels):
        nxt = 0
        normal = True
        for c in lab:
            if c == nxt:
                nxt += 1
            elif c > nxt:
                normal = False
                break
        if normal:
            roots.append((i, perm(k, nxt)))
    return roots


def count_embeddings(host, pattern: Graph, roots=None) -> int:
    """Injective maps preserving both adjacency and non-adjacency.

    ``roots`` optionally restricts the first pattern vertex to weighted host
    vertices ``(vertex, weight)``, one per orbit of some automorphism group.
    """
    if isinstance(host, ColoringGraph):
        nbr = list(host.neighbors)
    else:
        nbr = [frozenset(host.neighbors(v)) for v in range(host.n)]
    n_host = len(nbr)
    p = pattern.n
    if p == 0:
        return 1
    if p > n_host:
        return 0
    # connected pieces first, biggest first, so most vertices have a mapped neighbor
    comps, cur = [], []
    for v in _bfs_all(pattern):
        if cur and not any(pattern.has_edge(v, u) for u in cur):
            comps.append(cur)
            cur = []
        cur.append(v)
    comps.append(cur)
    comps.sort(key=len, reverse=True)
    order = [v for c in comps for v in c]
    linked_at = [[j for j in range(i) if pattern.has_edge(order[i], order[j])] for i in range(p)]
    apart_at = [[j for j in range(i) if not pattern.has_edge(order[i], order[j])] for i in range(p)]
    image = [0] * p

    def extend(i: int, used: set) -> int:
        linked, apart = linked_at[i], apart_at[i]
        if not linked:
            blocked = set(used)
            for j in apart:
                blocked |= nbr[image[j]]
            if i == p - 1:
                return n_host - len(blocked)
            cand = [w for w in range(n_host) if w not in blocked]
        else:
            cand = nbr[image[linked[0]]] - used
            for j in linked[1:]:
                cand &= nbr[image[j]]
            for j in apart:
                cand -= nbr[image[j]]
            if i == p - 1:
                return len(cand)
        total = 0
        for w in cand:
            image[i] = w
            used.add(w)
            total += extend(i + 1, used)
            used.discard(w)
        return total

    if roots is None:
        return extend(0, set())
    total = 0
    for w, weight in roots:
        image[0] = w
        total += weight * extend(1, {w}) if p > 1 else weight
    return total


def count_induced(host, pattern: Graph, roots=None) -> int:
    """Vertex subsets of ``host`` inducing a copy of ``pattern``."""
    emb = count_embeddings(host, pattern, roots)
    aut = automorphism_order(pattern)
    q, r = divmod(emb, aut)
    assert r == 0, "embedding count not divisible by |Aut(pattern)|"
    return q


def oracle_count(g: Graph, h: Graph, k: int, budget: int = DEFAULT_BUDGET) -> int:
    cg = build_coloring_graph(g, k, budget)
    return count_induced(cg, h, color_orbit_roots(cg, k))

