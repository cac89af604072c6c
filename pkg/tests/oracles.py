"""Definition-level reference implementations used only by the tests.

Nothing here shares code with the solvers: graphs are read through
``has_edge`` and every quantity is obtained by plain enumeration.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product


def triangles(G):
    return [
        (a, b, c)
        for a, b, c in combinations(range(G.n), 3)
        if G.has_edge(a, b) and G.has_edge(a, c) and G.has_edge(b, c)
    ]


def is_prismatic(G):
    for tri in triangles(G):
        for v in range(G.n):
            if v not in tri and sum(G.has_edge(v, x) for x in tri) != 1:
                return False
    return True


def is_orientable(G):
    """Try every cyclic orientation of every triangle (at most 2^16 choices)."""
    tris = triangles(G)
    assert len(tris) <= 16, "oracle limited to 16 triangles"
    pairs = []
    for S, T in combinations(range(len(tris)), 2):
        if set(tris[S]) & set(tris[T]):
            continue
        image = {}
        for v in tris[S]:
            (w,) = [w for w in tris[T] if G.has_edge(v, w)]
            image[v] = w
        pairs.append((S, T, image))

    def successor(tri, flip):
        a, b, c = tri
        return {a: b, b: c, c: a} if not flip else {a: c, c: b, b: a}

    for flips in product((False, True), repeat=len(tris)):
        ok = True
        for S, T, image in pairs:
            nxt_s = successor(tris[S], flips[S])
            nxt_t = successor(tris[T], flips[T])
            if any(nxt_t[image[v]] != image[nxt_s[v]] for v in tris[S]):
                ok = False
                break
        if ok:
            return True
    return False


def min_hitting_set_size(G):
    tris = [set(t) for t in triangles(G)]
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            chosen = set(S)
            if all(t & chosen for t in tris):
                return k
    raise AssertionError("unreachable")


def max_matching_size(G):
    edges = [(u, v) for u, v in combinations(range(G.n), 2) if G.has_edge(u, v)]

    @lru_cache(maxsize=None)
    def best(i, used):
        if i == len(edges):
            return 0
        u, v = edges[i]
        skip = best(i + 1, used)
        if used >> u & 1 or used >> v & 1:
            return skip
        return max(skip, 1 + best(i + 1, used | 1 << u | 1 << v))

    return best(0, 0)


def min_clique_cover_size(G):
    """Set partitions into cliques, smallest first (fine up to ~10 vertices)."""

    @lru_cache(maxsize=None)
    def best(remaining):
        if not remaining:
            return 0
        v = min(remaining)
        rest = remaining - {v}
        out = 1 + best(rest)
        for size in (1, 2, 3):
            for others in combinations(sorted(rest), size):
                clique = (v,) + others
                if all(G.has_edge(x, y) for x, y in combinations(clique, 2)):
                    out = min(out, 1 + best(rest - set(others)))
        return out

    return best(frozenset(range(G.n)))


def max_packing_size(G):
    tris = triangles(G)
    for k in range(len(tris), 0, -1):
        if k * 3 > G.n:
            continue
        for combo in combinations(tris, k):
            flat = [v for t in combo for v in t]
            if len(set(flat)) == len(flat):
                return k
    return 0


def max_stable_set_size(G):
    for k in range(G.n, 0, -1):
        for S in combinations(range(G.n), k):
            if not any(G.has_edge(x, y) for x, y in combinations(S, 2)):
                return k
    return 0


def has_claw(G):
    for c in range(G.n):
        nb = [x for x in range(G.n) if G.has_edge(c, x)]
        for a, b, d in combinations(nb, 3):
            if not (G.has_edge(a, b) or G.has_edge(a, d) or G.has_edge(b, d)):
                return True
    return False
