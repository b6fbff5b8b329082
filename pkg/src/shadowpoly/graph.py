"""Simple undirected graphs on vertices 0..n-1.

Adjacency is stored as one integer bitmask per vertex, which keeps the
hot loops (deletion-contraction, canonical labeling) cheap in pure Python.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph.  ``adj[v]`` is the neighbor bitmask of ``v``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                r ^= low
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def _unchecked(cls, adj: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabeled so ``vertices[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph(len(vertices), adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, adj)

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- constructors ------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (P_n in the vertex-count convention)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, adj)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (a, b) numbered ``a * h.n + b``."""
    edges = []
    for a in range(g.n):
        for b in range(h.n):
            v = a * h.n + b
            for b2 in iter_bits(h.adj[b]):
                if b2 > b:
                    edges.append((v, a * h.n + b2))
            for a2 in iter_bits(g.adj[a]):
                if a2 > a:
                    edges.append((v, a2 * h.n + b))
    return Graph.from_edges(g.n * h.n, edges)


def clique_product(sizes: Sequence[int]) -> Graph:
    """Cartesian product of complete graphs K_{r_1} □ ... □ K_{r_d}."""
    out = Graph(1)
    for r in sizes:
        out = cartesian_product(out, complete_graph(r))
    return out


def hypercube_graph(d: int) -> Graph:
    return clique_product([2] * d)


# -- graph6 ------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 record (n <= 62)."""
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 record")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"byte {i}: {ch!r} outside the graph6 range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphError("byte 0: long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise GraphError(f"byte {len(s)}: record truncated, expected {nbytes + 1} bytes")
    if len(body) > nbytes:
        raise GraphError(f"byte {nbytes + 1}: trailing data after graph6 record")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    if nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise GraphError(f"byte {nbytes}: nonzero padding bits")
    return Graph(n, adj)


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError(f"graph6 short form supports n <= 62, got {g.n}")
    bits = [1 if g.adj[u] >> v & 1 else 0 for v in range(1, g.n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphError]]:
    """Yield ``(line_number, record, graph_or_error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        rec = line.strip()
        if not rec:
            continue
        try:
            yield lineno, rec, parse_graph6(rec)
        except GraphError as exc:
            yield lineno, rec, exc


# -- canonical form ----------------------------------------------------------

def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement.  New cells are ordered by (old cell, neighbor counts)."""
    adj = g.adj
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(popcount(adj[v] & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _initial_cells(g: Graph) -> list[list[int]]:
    by_deg: dict[int, list[int]] = {}
    for v, row in enumerate(g.adj):
        by_deg.setdefault(popcount(row), []).append(v)
    return [by_deg[d] for d in sorted(by_deg, reverse=True)]


def _certificate(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            bv, br = 1 << v, 1 << r
            if g.adj[v] & ~br == g.adj[r] & ~bv:
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(certificate, order)`` where ``order[i]`` is the vertex placed at position i.

    Individualization-refinement search; the lexicographically smallest
    certificate over the search leaves wins.  Twins inside a target cell are
    interchangeable by an automorphism fixing the current partition, so only
    one branch per twin class is explored.
    """
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(g, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        for v in _twin_representatives(g, cell):
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if g.n == 0:
        return (), []
    search(_initial_cells(g))
    return best[0], best[1]


def canonical_key(g: Graph) -> bytes:
    """Bytes equal for two graphs iff they are isomorphic."""
    cert, _ = canonical_labeling(g)
    width = max(1, (g.n + 7) // 8)
    return g.n.to_bytes(2, "big") + b"".join(row.to_bytes(width, "big") for row in cert)


def canonical_form(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def automorphism_order(g: Graph) -> int:
    """Number of adjacency-preserving permutations of ``g``.

    Counted by backtracking; images are restricted to the same cell of the
    equitable partition, which every automorphism preserves.
    """
    n = g.n
    if n == 0:
        return 1
    cells = _refine(g, _initial_cells(g))
    color = [0] * n
    for i, cell in enumerate(cells):
        for v in cell:
            color[v] = i
    order = _bfs_all(g)
    adj = g.adj
    image = [-1] * n

    def extend(i: int, used: int) -> int:
        if i == n:
            return 1
        v = order[i]
        total = 0
        for w in cells[color[v]]:
            if used >> w & 1:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (adj[v] >> u & 1) != (adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                total += extend(i + 1, used | 1 << w)
        image[v] = -1
        return total

    return extend(0, 0)


def _bfs_all(g: Graph) -> list[int]:
    seen = 0
    out: list[int] = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        q = deque([s])
        while q:
            v = q.popleft()
            out.append(v)
            for u in iter_bits(g.adj[v] & ~seen):
                seen |= 1 << u
                q.append(u)
    return out


# -- structure ---------------------------------------------------------------

def component_masks(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components as ``(subgraph, vmap)`` with ``vmap[i]`` the original index of vertex i."""
    out = []
    for mask in component_masks(g):
        verts = tuple(iter_bits(mask))
        out.append((g.induced(verts), verts))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.num_edges() == g.n - 1


def connected_ordering(g: Graph) -> tuple[int, ...]:
    """BFS from the canonically first vertex, ties broken by canonical position."""
    if not is_connected(g):
        raise GraphError("connected_ordering needs a connected graph with n >= 1")
    _, order = canonical_labeling(g)
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    start = order[0]
    seen = 1 << start
    out = []
    q = deque([start])
    while q:
        v = q.popleft()
        out.append(v)
        for u in sorted(iter_bits(g.adj[v] & ~seen), key=rank.__getitem__):
            seen |= 1 << u
            q.append(u)
    return tuple(out)


def is_connected_ordering(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(g.n)) or g.n == 0:
        return False
    seen = 1 << order[0]
    for v in order[1:]:
        if not g.adj[v] & seen:
            return False
        seen |= 1 << v
    return True


def subsets_of_size(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(n), k)
