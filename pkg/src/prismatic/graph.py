"""Immutable simple graphs on vertices ``0..n-1`` with bitmask adjacency.

Row ``v`` of a :class:`Graph` is a Python int whose bit ``u`` is set iff
``uv`` is an edge.  Every solver in the package works on these rows, so
neighbourhood intersections are single ``&`` operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Iterator, Optional, Sequence

from .errors import GraphError, PreconditionError, SizeLimitError

Triangle = tuple[int, int, int]
Edge = tuple[int, int]

ISOMORPHISM_LIMIT = 12


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph.

    ``labels`` are opaque per-vertex payloads that algorithms never read.
    ``origin`` maps each vertex back to its id in the graph it was induced
    from, when the graph came out of :func:`induced_subgraph`.
    """

    n: int
    rows: tuple[int, ...]
    labels: Optional[tuple[Any, ...]] = field(default=None)
    origin: Optional[tuple[int, ...]] = field(default=None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_to_tuple(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def label(self, v: int) -> Any:
        return None if self.labels is None else self.labels[v]

    def vertex_of_label(self, label: Any) -> int:
        """Inverse of :meth:`label`; raises ``KeyError`` when absent."""
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict:
        if self.labels is None:
            return {}
        return {lab: v for v, lab in enumerate(self.labels)}

    @cached_property
    def triangle_list(self) -> tuple[Triangle, ...]:
        rows = self.rows
        out = []
        for u in range(self.n):
            above_u = rows[u] >> (u + 1) << (u + 1)
            for v in iter_bits(above_u):
                common = rows[u] & rows[v] >> (v + 1) << (v + 1)
                for w in iter_bits(common):
                    out.append((u, v, w))
        return tuple(out)


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    labels: Optional[Sequence[Any]] = None,
) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    rows = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")
    return Graph(n, tuple(rows), labels)


def from_rows(rows: Sequence[int], labels: Optional[Sequence[Any]] = None) -> Graph:
    n = len(rows)
    full = (1 << n) - 1
    for v, row in enumerate(rows):
        if row >> v & 1:
            raise GraphError(f"self-loop ({v}, {v})")
        if row & ~full:
            raise GraphError(f"row {v} references a vertex outside 0..{n - 1}")
        for u in iter_bits(row):
            if not rows[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, tuple(rows), None if labels is None else tuple(labels))


def triangles(G: Graph) -> list[Triangle]:
    """Every triangle once, vertices ascending, list sorted lexicographically."""
    return list(G.triangle_list)


def triangle_mask(t: Sequence[int]) -> int:
    return (1 << t[0]) | (1 << t[1]) | (1 << t[2])


def core(G: Graph) -> frozenset[int]:
    """Vertices lying in at least one triangle."""
    return frozenset(v for t in G.triangle_list for v in t)


def core_mask(G: Graph) -> int:
    mask = 0
    for t in G.triangle_list:
        mask |= triangle_mask(t)
    return mask


def find_dense_edge(G: Graph) -> Optional[tuple[int, int, int, int]]:
    """Return ``(u, v, w1, w2)`` for an edge ``uv`` with two common neighbours.

    A graph has no such edge iff it is diamond-free and K4-free.
    """
    rows = G.rows
    for u, v in G.edges():
        common = rows[u] & rows[v]
        if common & (common - 1):
            w1, w2 = list(iter_bits(common))[:2]
            return u, v, w1, w2
    return None


NOT_ADJACENT = -1
NO_WITNESS = -2


class TriangleWitnessMatrix:
    """Per-pair triangle witnesses of a diamond-free, K4-free graph.

    ``entry(u, v)`` is :data:`NOT_ADJACENT`, :data:`NO_WITNESS` (adjacent but
    in no triangle), or the unique common neighbour of ``u`` and ``v``.
    """

    def __init__(self, n: int, entries: list[list[int]]):
        self.n = n
        self._entries = entries

    def entry(self, u: int, v: int) -> int:
        return self._entries[u][v]

    def row(self, u: int) -> list[int]:
        return list(self._entries[u])

    def triangles_through(self, s: int) -> list[Triangle]:
        """Triangles containing ``s``, read off row ``s``; sorted."""
        found = set()
        for w, x in enumerate(self._entries[s]):
            if x >= 0:
                found.add(tuple(sorted((s, w, x))))
        return sorted(found)

    def is_triangle_free_without(self, removed: Iterable[int]) -> bool:
        """Whether deleting ``removed`` leaves no triangle.

        Holds iff every witness entry between surviving vertices names a
        removed vertex.
        """
        gone = set(removed)
        for u in range(self.n):
            if u in gone:
                continue
            row = self._entries[u]
            for v in range(u + 1, self.n):
                x = row[v]
                if x >= 0 and v not in gone and x not in gone:
                    return False
        return True


def witness_matrix(G: Graph) -> TriangleWitnessMatrix:
    dense = find_dense_edge(G)
    if dense is not None:
        u, v, w1, w2 = dense
        kind = "K4" if G.has_edge(w1, w2) else "diamond"
        raise PreconditionError(
            f"graph is not diamond-free and K4-free: {kind} on {sorted(dense)}",
            obstruction=(kind, tuple(sorted(dense))),
        )
    rows = G.rows
    entries = [[NOT_ADJACENT] * G.n for _ in range(G.n)]
    for u in range(G.n):
        for v in iter_bits(rows[u]):
            common = rows[u] & rows[v]
            entries[u][v] = common.bit_length() - 1 if common else NO_WITNESS
    return TriangleWitnessMatrix(G.n, entries)


def derived_graph(G: Graph) -> Graph:
    """Intersection graph of the triangles of ``G``; labels are the triangles."""
    tris = G.triangle_list
    by_vertex: list[int] = [0] * G.n
    for i, t in enumerate(tris):
        for v in t:
            by_vertex[v] |= 1 << i
    rows = []
    for i, t in enumerate(tris):
        row = by_vertex[t[0]] | by_vertex[t[1]] | by_vertex[t[2]]
        rows.append(row & ~(1 << i))
    return Graph(len(tris), tuple(rows), tris)


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced by ``S``, relabelled ``0..|S|-1`` in ascending order.

    The result's ``origin`` gives the original id of each new vertex.
    """
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} outside 0..{G.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(G.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    labels = None if G.labels is None else tuple(G.labels[v] for v in keep)
    return Graph(len(keep), tuple(rows), labels, tuple(keep))


def relabel(G: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``order[i]`` of ``G``."""
    if sorted(order) != list(range(G.n)):
        raise GraphError("order is not a permutation of the vertices")
    index = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        rows.append(mask_of(index[u] for u in iter_bits(G.rows[v])))
    labels = None if G.labels is None else tuple(G.labels[v] for v in order)
    return Graph(G.n, tuple(rows), labels)


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.rows)), G.labels)


def disjoint_union(*graphs: Graph) -> Graph:
    rows = []
    offset = 0
    for H in graphs:
        rows.extend(row << offset for row in H.rows)
        offset += H.n
    return Graph(offset, tuple(rows))


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each ascending, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(bits_to_tuple(comp))
    return out


def _search_order(pattern: Graph) -> list[int]:
    """Pattern vertices ordered so each one (after the first of its
    component) has an already-placed neighbour; high degree first."""
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        attached = [v for v in remaining if pattern.rows[v] & placed]
        pool = attached or list(remaining)
        v = max(pool, key=lambda x: ((pattern.rows[x] & placed).bit_count(), pattern.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def iter_induced_embeddings(
    pattern: Graph,
    host: Graph,
    order: Optional[Sequence[int]] = None,
) -> Iterator[dict[int, int]]:
    """Yield injective maps pattern -> host preserving adjacency and non-adjacency.

    Candidates for the next pattern vertex are computed as one bitmask: the
    intersection of host rows (for already-placed pattern neighbours) and of
    host non-rows (for already-placed pattern non-neighbours).
    """
    if order is None:
        order = _search_order(pattern)
    k = len(order)
    if k == 0:
        yield {}
        return
    if k > host.n:
        return
    full = host.full_mask
    host_rows = host.rows
    non_rows = [full & ~row & ~(1 << v) for v, row in enumerate(host_rows)]
    pdeg = [pattern.degree(v) for v in order]
    adjacent_before = [
        sum(1 << j for j in range(i) if pattern.has_edge(order[i], order[j])) for i in range(k)
    ]
    image = [0] * k
    used = 0

    def candidates(i: int) -> int:
        cand = full & ~used
        adj = adjacent_before[i]
        for j in range(i):
            if adj >> j & 1:
                cand &= host_rows[image[j]]
            else:
                cand &= non_rows[image[j]]
            if not cand:
                return 0
        return cand

    def extend(i: int) -> Iterator[dict[int, int]]:
        nonlocal used
        if i == k:
            yield {order[j]: image[j] for j in range(k)}
            return
        cand = candidates(i)
        for h in iter_bits(cand):
            if host_rows[h].bit_count() < pdeg[i]:
                continue
            image[i] = h
            used |= 1 << h
            yield from extend(i + 1)
            used &= ~(1 << h)

    yield from extend(0)


def find_induced_embedding(pattern: Graph, host: Graph) -> Optional[dict[int, int]]:
    return next(iter_induced_embeddings(pattern, host), None)


def is_isomorphic_small(G: Graph, H: Graph) -> bool:
    """Exact isomorphism test for graphs on at most 12 vertices."""
    if G.n > ISOMORPHISM_LIMIT or H.n > ISOMORPHISM_LIMIT:
        raise SizeLimitError(f"isomorphism test limited to {ISOMORPHISM_LIMIT} vertices")
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(G.degree(v) for v in range(G.n)) != sorted(H.degree(v) for v in range(H.n)):
        return False
    return find_induced_embedding(G, H) is not None

