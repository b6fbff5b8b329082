"""Valid state maps of a connected pattern graph.

A state map assigns each pattern vertex (in a fixed connected ordering) a
tuple of palette indices, one coordinate per base vertex that changes color.
Coordinates and palette values are 1-based, as in ``(1, 1, 1) -> (2, 1, 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, is_connected, is_connected_ordering


@dataclass(frozen=True)
class StateMap:
    assignment: tuple[tuple[int, ...], ...]   # aligned with ``ordering``
    ordering: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.assignment[0])

    @property
    def palette_sizes(self) -> tuple[int, ...]:
        return tuple(max(t[i] for t in self.assignment) for i in range(self.d))

    def state_of(self, vertex: int) -> tuple[int, ...]:
        return self.assignment[self.ordering.index(vertex)]

    @property
    def states(self) -> tuple[tuple[int, ...], ...]:
        return self.assignment


def _hamming(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    # shorter tuples are implicitly padded with 1s
    if len(a) < len(b):
        a, b = b, a
    diff = sum(1 for x, y in zip(a, b) if x != y)
    return diff + sum(1 for x in a[len(b):] if x != 1)


def enumerate_state_maps(h: Graph, ordering: Sequence[int]) -> list[StateMap]:
    """All valid state maps of ``h`` against ``ordering``, in lexicographic order."""
    ordering = tuple(ordering)
    if h.n < 2 or not is_connected(h):
        raise GraphError("state maps need a connected pattern with at least 2 vertices")
    if not is_connected_ordering(h, ordering):
        raise GraphError(f"{ordering} is not a connected ordering of the pattern")
    n = h.n
    # adjacency between ordering positions
    adj_pos = [[h.has_edge(ordering[i], ordering[j]) for j in range(n)] for i in range(n)]
    results: list[tuple[tuple[int, ...], ...]] = []
    tuples: list[tuple[int, ...]] = [()]
    maxval: list[int] = []

    def candidates(k: int) -> list[tuple[int, ...]]:
        d = len(maxval)
        out = set()
        for j in range(k):
            if not adj_pos[k][j]:
                continue
            base = tuples[j] + (1,) * (d - len(tuples[j]))
            for i in range(d):
                for val in range(1, maxval[i] + 2):
                    if val != base[i]:
                        out.add(base[:i] + (val,) + base[i + 1:])
            if d + 1 < n:
                out.add(base + (2,))
        return sorted(out, key=lambda t: t + (1,) * (d + 1 - len(t)))

    def ok(k: int, t: tuple[int, ...]) -> bool:
        for j in range(k):
            dist = _hamming(t, tuples[j])
            if dist == 0 or (dist == 1) != adj_pos[k][j]:
                return False
        return True

    def extend(k: int) -> None:
        if k == n:
            d = len(maxval)
            results.append(tuple(t + (1,) * (d - len(t)) for t in tuples))
            return
        for t in candidates(k):
            if not ok(k, t):
                continue
            saved = maxval[:]
            for i, val in enumerate(t):
                if i == len(maxval):
                    maxval.append(val)
                elif val > maxval[i]:
                    maxval[i] = val
            tuples.append(t)
            extend(k + 1)
            tuples.pop()
            maxval[:] = saved

    extend(1)
    return [StateMap(a, ordering) for a in results]


def validate_state_map(h: Graph, f: StateMap) -> list[str]:
    """Re-check every defining condition from scratch; returns the violations."""
    problems = []
    a, order = f.assignment, f.ordering
    n = h.n
    if len(a) != n or sorted(order) != list(range(n)):
        return ["assignment does not cover the pattern"]
    d = len(a[0])
    if any(len(t) != d for t in a):
        problems.append("ragged tuples")
        return problems
    if d >= n:
        problems.append(f"d={d} not below |V(H)|={n}")
    if len(set(a)) != n:
        problems.append("not injective")
    if a[0] != (1,) * d:
        problems.append("first state is not all ones")
    if n > 1 and a[1] != (2,) + (1,) * (d - 1):
        problems.append("second state is not (2,1,...,1)")
    for x in range(n):
        for y in range(x + 1, n):
            diff = sum(1 for p, q in zip(a[x], a[y]) if p != q)
            if (diff == 1) != h.has_edge(order[x], order[y]):
                problems.append(f"positions {x},{y}: differ in {diff} coordinates")
    for k in range(n):
        for i, val in enumerate(a[k]):
            if val > 1 and not any(a[j][i] == val - 1 for j in range(k)):
                problems.append(f"position {k}: value {val} at coordinate {i + 1} before {val - 1}")
            if val > 1 and i > 0 and not any(a[j][i - 1] == 2 for j in range(k)):
                problems.append(f"position {k}: coordinate {i + 1} used before coordinate {i} changed")
    if any(r < 2 for r in f.palette_sizes):
        problems.append("unused coordinate")
    return problems
