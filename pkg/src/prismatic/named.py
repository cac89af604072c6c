"""Fixed small graphs used as patterns and test fixtures."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, build_graph

# vertex order s1, s2, s3, t1, t2, t3
PRISM_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]

# v1..v9 -> 0..8; {v1,v2,v3} is the centre
ROTATOR_EDGES = (
    [(0, 1), (0, 2), (1, 2)]
    + [(a, b) for a in (3, 4, 5) for b in (6, 7, 8)]
    + [(i, i + 3) for i in range(3)]
    + [(i, i + 6) for i in range(3)]
)
ROTATOR_CENTER = (0, 1, 2)

# a..j -> 0..9
TWISTER_EDGES = [
    (2, 6),
    (0, 3), (0, 2), (2, 3),
    (1, 2), (1, 4), (2, 4),
    (5, 8), (5, 6), (6, 8),
    (6, 7), (7, 9), (6, 9),
    (0, 8), (0, 7), (3, 9), (3, 5), (1, 7), (1, 5), (4, 8), (4, 9),
]


def prism() -> Graph:
    return build_graph(6, PRISM_EDGES, labels=["s1", "s2", "s3", "t1", "t2", "t3"])


def rotator() -> Graph:
    return build_graph(9, ROTATOR_EDGES, labels=[f"v{i}" for i in range(1, 10)])


def twister() -> Graph:
    return build_graph(10, TWISTER_EDGES, labels=list("abcdefghij"))


def line_k33() -> Graph:
    """L(K_{3,3}): vertex ``(i, j)`` is the edge ``a_i b_j``; id ``3(i-1) + (j-1)``."""
    cells = [(i, j) for i in range(1, 4) for j in range(1, 4)]
    edges = [
        (x, y)
        for x, y in combinations(range(9), 2)
        if cells[x][0] == cells[y][0] or cells[x][1] == cells[y][1]
    ]
    return build_graph(9, edges, labels=[f"a{i}b{j}" for i, j in cells])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return build_graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def empty(n: int) -> Graph:
    return build_graph(n, [])


def diamond() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def claw() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


def triangle_ring(k: int) -> Graph:
    """``k`` disjoint triangles, every pair joined by the shift matching.

    Vertex ``3i + c`` is corner ``c`` of triangle ``i``; for ``i < j`` corner
    ``c`` of ``i`` is matched to corner ``c + 1 (mod 3)`` of ``j``.  No three
    shifts close a triangle, so the ``k`` triangles are the only ones and the
    graph is prismatic and orientable.
    """
    edges = []
    for i in range(k):
        edges += [(3 * i, 3 * i + 1), (3 * i, 3 * i + 2), (3 * i + 1, 3 * i + 2)]
        for j in range(i + 1, k):
            edges += [(3 * i + c, 3 * j + (c + 1) % 3) for c in range(3)]
    return build_graph(3 * k, edges)
