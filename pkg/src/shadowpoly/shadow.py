"""Shadow graphs: a base graph with chosen vertices blown up into cliques.

Layout of every construction: surviving base vertices first (ascending
index), then shadow vertices ordered by position in ``x`` and palette slot.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence

from .graph import Graph, GraphError
from .statemap import StateMap


class Origin(NamedTuple):
    base: int         # vertex of the base graph this vertex stands for
    palette: int = 0  # 0 for an untouched base vertex, else 1-based palette slot


@dataclass(frozen=True)
class ShadowGraph:
    graph: Graph
    provenance: tuple[Origin, ...]
    x: tuple[int, ...]
    sizes: tuple[int, ...]

    def shadow_vertex(self, i: int, j: int) -> int:
        """Index of v_{i,j}: ``i`` is 0-based into ``x``, ``j`` is the 1-based slot."""
        return self.provenance.index(Origin(self.x[i], j))


def _build(g: Graph, x: Sequence[int], sizes: Sequence[int], pairs) -> ShadowGraph:
    """``pairs(i1, i2)`` yields the slot pairs (j1, j2) to join for adjacent x[i1], x[i2]."""
    x = tuple(x)
    sizes = tuple(sizes)
    if len(x) != len(sizes):
        raise GraphError("x and palette sizes differ in length")
    if len(set(x)) != len(x):
        raise GraphError(f"repeated vertex in {x}")
    for v in x:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    if any(r < 1 for r in sizes):
        raise GraphError("palette sizes must be positive")
    in_x = set(x)
    prov = [Origin(w) for w in range(g.n) if w not in in_x]
    index = {o.base: i for i, o in enumerate(prov)}
    slot_index = {}
    for i, v in enumerate(x):
        for j in range(1, sizes[i] + 1):
            slot_index[i, j] = len(prov)
            prov.append(Origin(v, j))
    edges = []
    for u, w in g.edges():
        if u not in in_x and w not in in_x:
            edges.append((index[u], index[w]))
    for i, v in enumerate(x):
        cl = [slot_index[i, j] for j in range(1, sizes[i] + 1)]
        edges.extend((a, b) for a in cl for b in cl if a < b)
        for w in g.neighbors(v):
            if w not in in_x:
                edges.extend((s, index[w]) for s in cl)
    for i1 in range(len(x)):
        for i2 in range(i1 + 1, len(x)):
            if g.has_edge(x[i1], x[i2]):
                for j1, j2 in set(pairs(i1, i2)):
                    edges.append((slot_index[i1, j1], slot_index[i2, j2]))
    return ShadowGraph(Graph.from_edges(len(prov), edges), tuple(prov), x, sizes)


def shadow_p2(g: Graph, v: int) -> ShadowGraph:
    return shadow_clique(g, v, 2)


def shadow_clique(g: Graph, v: int, r: int) -> ShadowGraph:
    if r < 2:
        raise GraphError("clique shadows need r >= 2")
    return _build(g, (v,), (r,), lambda i1, i2: ())


def shadow_product(g: Graph, x: Sequence[int], r: Sequence[int]) -> ShadowGraph:
    """Each x[i] becomes an r[i]-clique; cliques of adjacent base vertices are fully joined."""
    if any(ri < 2 for ri in r):
        raise GraphError("clique sizes must be >= 2")
    return _build(g, x, r, lambda i1, i2: product(range(1, r[i1] + 1), range(1, r[i2] + 1)))


def shadow_from_states(g: Graph, x: Sequence[int], sizes: Sequence[int],
                       states: Sequence[Sequence[int]]) -> ShadowGraph:
    """Join v_{i1,j1} v_{i2,j2} whenever some state puts j1 at i1 and j2 at i2."""
    def pairs(i1, i2):
        return [(s[i1], s[i2]) for s in states]
    return _build(g, x, sizes, pairs)


def shadow_general(g: Graph, x: Sequence[int], f: StateMap) -> ShadowGraph:
    if len(x) != f.d:
        raise GraphError(f"state map has d={f.d} but x has {len(x)} vertices")
    return shadow_from_states(g, x, f.palette_sizes, f.states)


def check_shadow(sg: ShadowGraph, g: Graph) -> list[str]:
    """Walk the provenance and report violations of the shadow-graph rules."""
    problems = []
    h, prov = sg.graph, sg.provenance
    in_x = set(sg.x)
    for a in range(h.n):
        for b in range(a + 1, h.n):
            oa, ob = prov[a], prov[b]
            e = h.has_edge(a, b)
            if oa.palette == 0 and ob.palette == 0:
                if e != g.has_edge(oa.base, ob.base):
                    problems.append(f"base edge mismatch at {oa.base},{ob.base}")
            elif oa.palette == 0 or ob.palette == 0:
                s, w = (oa, ob) if oa.palette else (ob, oa)
                if w.base in in_x:
                    problems.append("untouched vertex inside x")
                if e != g.has_edge(s.base, w.base):
                    problems.append(f"shadow-to-base edge mismatch at {s.base},{w.base}")
            elif oa.base == ob.base:
                if not e:
                    problems.append(f"shadow clique of {oa.base} missing an edge")
            elif e and not g.has_edge(oa.base, ob.base):
                problems.append(f"edge between shadows of non-adjacent {oa.base},{ob.base}")
    return problems
