"""Reference graphs, built as edge lists over named vertices."""
from shadowpoly.graph import Graph


def named(names, edges):
    idx = {v: i for i, v in enumerate(names)}
    return Graph.from_edges(len(names), [(idx[a], idx[b]) for a, b in edges])


def chain(*names):
    return list(zip(names, names[1:]))


# two disjoint diamonds
DIAMONDS = named(range(8), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2),
                            (4, 5), (5, 6), (6, 7), (7, 4), (4, 6)])

# the other 8-vertex graph: a K4 on ABCD with E on B, C; G on B; H on C; F isolated
K4_PLUS = named("ABCDEFGH", [("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"), ("A", "C"),
                             ("B", "D"), ("B", "E"), ("C", "E"), ("G", "B"), ("H", "C")])

CONNECTED_1 = named(
    ["S1", "S2", "A1", "A2", "A3", "B1", "B2", "B3"],
    [("S1", "S2"),
     ("S1", "A1"), ("S1", "A2"), ("S1", "A3"), ("S2", "A1"), ("S2", "A2"), ("S2", "A3"),
     ("A1", "A3"), ("A2", "A1"),
     ("S1", "B2"), ("S1", "B1"), ("S2", "B1"), ("S2", "B2"), ("S2", "B3"),
     ("B1", "B2"), ("B1", "B3"), ("B2", "B3")])

CONNECTED_2 = named(
    ["L", "Z1", "Z2", "C1", "C2", "C3", "R1", "R2"],
    chain("Z1", "L", "Z2", "Z1", "C3", "C2", "C1", "Z2", "C3", "C1", "Z1", "C2", "Z2")
    + chain("C1", "R1", "C2") + chain("Z2", "R2", "R1", "C3"))


def _spine(prefix, length):
    return [f"{prefix}{i}" for i in range(1, length + 1)]


def _tree(spine, hangs):
    """``hangs`` maps a spine vertex to a list of extra paths hanging off it."""
    names = list(spine)
    edges = chain(*spine)
    for v, paths in hangs.items():
        for p, size in enumerate(paths):
            prev = v
            for q in range(size):
                w = f"{v}.{p}.{q}"
                names.append(w)
                edges.append((prev, w))
                prev = w
    return named(names, edges)


# 11 vertices: smallest pair with equal subset statistics
TREE_11_A = _tree(_spine("S", 7), {"S3": [1, 1], "S4": [1], "S6": [1]})
TREE_11_B = _tree(_spine("T", 7), {"T5": [1, 1], "T3": [1], "T6": [1]})

# 12 vertices: equal 4-cube counts, different 3-cube counts
TREE_12_A = _tree(_spine("S", 8), {"S2": [1], "S4": [3]})
TREE_12_B = _tree(_spine("T", 10), {"T2": [1], "T3": [1]})

# 16 vertices
TREE_16_A = _tree(_spine("S", 8), {"S4": [1, 1, 1], "S5": [1], "S6": [2], "S7": [1, 1]})
TREE_16_B = _tree(_spine("T", 8), {"T6": [2], "T2": [1], "T3": [1, 1], "T5": [1, 1, 1]})
