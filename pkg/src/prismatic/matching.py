"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque
from typing import Optional

from .graph import Graph, iter_bits

Edge = tuple[int, int]


def max_matching(G: Graph, within: Optional[int] = None) -> list[Edge]:
    """Maximum matching of ``G`` (restricted to the vertex mask ``within``).

    Returns sorted ``(u, v)`` pairs with ``u < v``.  Vertices and
    neighbours are always scanned in ascending order, so the result is
    deterministic.
    """
    n = G.n
    allowed = G.full_mask if within is None else within & G.full_mask
    adj = [list(iter_bits(G.rows[v] & allowed)) if allowed >> v & 1 else [] for v in range(n)]
    mate = [-1] * n

    # greedy start; the search below only augments
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    for root in range(n):
        if mate[root] == -1 and adj[root]:
            _augment_from(root, adj, mate)

    return [(v, mate[v]) for v in range(n) if mate[v] > v]


def _augment_from(root: int, adj: list[list[int]], mate: list[int]) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if base[v] == base[u] or mate[v] == u:
                continue
            if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                # odd cycle: contract the blossom
                b = lca(v, u)
                blossom = [False] * n
                mark_path(v, b, u, blossom)
                mark_path(u, b, v, blossom)
                for x in range(n):
                    if blossom[base[x]]:
                        base[x] = b
                        if not used[x]:
                            used[x] = True
                            queue.append(x)
            elif parent[u] == -1:
                parent[u] = v
                if mate[u] == -1:
                    # augmenting path found: flip it
                    while u != -1:
                        pv = parent[u]
                        nxt = mate[pv]
                        mate[u], mate[pv] = pv, u
                        u = nxt
                    return True
                used[mate[u]] = True
                queue.append(mate[u])
    return False


def is_matching(G: Graph, edges) -> bool:
    seen = 0
    for u, v in edges:
        if u == v or not G.has_edge(u, v) or (seen >> u & 1) or (seen >> v & 1):
            return False
        seen |= (1 << u) | (1 << v)
    return True
