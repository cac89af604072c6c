"""Minimum clique covers of K4-free graphs with few triangle hitters.

A clique cover of a K4-free graph is a set of vertex-disjoint triangles,
vertex-disjoint edges and singletons partitioning the vertex set.  Once
the triangles are fixed, the best completion is a maximum matching of
what is left, so the solvers only ever search over triangle sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import PreconditionError, SizeLimitError
from .graph import Graph, Triangle, iter_bits, mask_of, triangle_mask, witness_matrix
from .hitting_set import HittingSet, find_hitting_set_at_most, is_hitting_set
from .matching import max_matching
from .recognition import is_orientable, require_diamond_k4_free, require_prismatic

BRUTEFORCE_MAX_N = 18
MAX_HITTERS = 5


@dataclass(frozen=True)
class CliqueCover:
    triangles: tuple[Triangle, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    singletons: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.triangles) + len(self.edges) + len(self.singletons)

    def cliques(self) -> list[tuple[int, ...]]:
        return [*self.triangles, *self.edges, *((v,) for v in self.singletons)]

    def problem(self, G: Graph) -> Optional[str]:
        """Why this is not a clique cover of ``G``, or ``None`` if it is."""
        seen = 0
        for clique in self.cliques():
            for u, v in combinations(clique, 2):
                if not G.has_edge(u, v):
                    return f"{list(clique)} is not a clique ({u} and {v} are not adjacent)"
            for v in clique:
                if not 0 <= v < G.n:
                    return f"vertex {v} is not in the graph"
                if seen >> v & 1:
                    return f"vertex {v} is covered twice"
                seen |= 1 << v
        if seen != G.full_mask:
            missing = next(iter_bits(G.full_mask & ~seen))
            return f"vertex {missing} is not covered"
        return None

    def is_valid(self, G: Graph) -> bool:
        return self.problem(G) is None


def make_cover(triangles: Iterable[Triangle], edges: Iterable[tuple[int, int]], singletons: Iterable[int]) -> CliqueCover:
    """Canonical form: every part sorted, each clique in ascending order."""
    return CliqueCover(
        tuple(sorted(tuple(sorted(t)) for t in triangles)),
        tuple(sorted(tuple(sorted(e)) for e in edges)),
        tuple(sorted(singletons)),
    )


def _complete(G: Graph, triangles: list[Triangle], used: int) -> CliqueCover:
    rest = G.full_mask & ~used
    M = max_matching(G, within=rest)
    matched = mask_of(v for e in M for v in e)
    return make_cover(triangles, M, iter_bits(rest & ~matched))


def _require_valid(G: Graph, cover: CliqueCover) -> None:
    problem = cover.problem(G)
    if problem is not None:
        raise PreconditionError(f"invalid clique cover: {problem}")


def clique_cover_via_hitting_set(G: Graph, S: HittingSet | Iterable[int]) -> CliqueCover:
    """Minimum clique cover given a triangle hitting set of at most five vertices.

    Each optimal cover uses at most one triangle through each hitter, so it
    suffices to try every disjoint choice of at most one triangle per
    hitter and complete the rest by a maximum matching.  Ties go to the
    lexicographically least sorted triangle list.
    """
    hitters = tuple(sorted(set(S.vertices if isinstance(S, HittingSet) else S)))
    if len(hitters) > MAX_HITTERS:
        raise PreconditionError(f"hitting set has {len(hitters)} vertices; at most {MAX_HITTERS} allowed")
    T = witness_matrix(G)
    if not is_hitting_set(G, hitters):
        raise PreconditionError(f"{list(hitters)} is not a hitting set of the triangles")
    through = [T.triangles_through(s) for s in hitters]

    best: Optional[tuple[int, tuple[Triangle, ...]]] = None
    seen_choices: set[tuple[Triangle, ...]] = set()
    n = G.n

    def visit(i: int, chosen: list[Triangle], used: int) -> None:
        nonlocal best
        if i == len(through):
            key = tuple(sorted(chosen))
            if key in seen_choices:
                return
            seen_choices.add(key)
            rest = G.full_mask & ~used
            size = len(key) + rest.bit_count() - len(max_matching(G, within=rest))
            if best is None or (size, key) < best:
                best = (size, key)
            return
        visit(i + 1, chosen, used)
        for t in through[i]:
            m = triangle_mask(t)
            if not m & used:
                chosen.append(t)
                visit(i + 1, chosen, used | m)
                chosen.pop()

    visit(0, [], 0)
    assert best is not None
    key = best[1]
    cover = _complete(G, list(key), mask_of(v for t in key for v in t))
    assert cover.size == best[0] and n == sum(len(c) for c in cover.cliques())
    return cover


def clique_cover_small_hitting(G: Graph) -> CliqueCover:
    """Minimum clique cover of a diamond-free, K4-free graph with a hitting set of size <= 5."""
    require_diamond_k4_free(G, "clique_cover_small_hitting")
    S = find_hitting_set_at_most(G, MAX_HITTERS)
    if S is None:
        raise PreconditionError(
            f"clique_cover_small_hitting requires a triangle hitting set of at most {MAX_HITTERS} vertices"
        )
    return clique_cover_via_hitting_set(G, S)


def clique_cover_nonorientable(G: Graph) -> CliqueCover:
    """Minimum clique cover of a non-orientable prismatic graph.

    Such a graph either has a hitting set of at most five vertices or is an
    induced subgraph of the Schläfli complement; the second case is
    solved by exact search.
    """
    require_prismatic(G, "clique_cover_nonorientable")
    if is_orientable(G):
        raise PreconditionError("clique_cover_nonorientable requires a non-orientable prismatic graph")
    S = find_hitting_set_at_most(G, MAX_HITTERS)
    if S is not None:
        return clique_cover_via_hitting_set(G, S)
    return clique_cover_exact(G)


def clique_cover_exact(G: Graph) -> CliqueCover:
    """Exact minimum clique cover of a K4-free graph by branch and bound.

    The lowest undecided vertex either joins a triangle of undecided
    vertices or is left for the matching stage.  Meant for graphs of
    Schläfli size (at most 27 vertices, 45 triangles).
    """
    if G.n == 0:
        return CliqueCover()
    require_diamond_k4_free(G, "clique_cover_exact")
    through: list[list[Triangle]] = [[] for _ in range(G.n)]
    for t in G.triangle_list:
        through[t[0]].append(t)  # branch on the lowest vertex only
    target = -(-G.n // 3)
    best_size = G.n + 1
    best_tris: list[Triangle] = []

    def bound(n_tris: int, free: int, excluded: int) -> int:
        f, e = free.bit_count(), excluded.bit_count()
        j = f // 3
        return n_tris + j + -(-(e + f - 3 * j) // 2)

    def visit(v: int, chosen: list[Triangle], free: int, excluded: int) -> bool:
        nonlocal best_size, best_tris
        if bound(len(chosen), free, excluded) >= best_size:
            return False
        if not free:
            size = len(chosen) + excluded.bit_count() - len(max_matching(G, within=excluded))
            if size < best_size:
                best_size, best_tris = size, list(chosen)
            return best_size == target
        v = (free & -free).bit_length() - 1
        for t in through[v]:
            m = triangle_mask(t)
            if m & free == m:
                chosen.append(t)
                done = visit(v, chosen, free & ~m, excluded)
                chosen.pop()
                if done:
                    return True
        return visit(v, chosen, free & ~(1 << v), excluded | (1 << v))

    visit(0, [], G.full_mask, 0)
    return _complete(G, best_tris, mask_of(x for t in best_tris for x in t))


# --- oracle -----------------------------------------------------------------------


def clique_cover_bruteforce(G: Graph) -> CliqueCover:
    """Exhaustive minimum clique cover of a K4-free graph with at most 18 vertices.

    Every set of pairwise disjoint triangles is tried; the rest is matched
    by an exhaustive subset recursion (no blossom code involved).
    """
    if G.n > BRUTEFORCE_MAX_N:
        raise SizeLimitError(f"clique_cover_bruteforce handles at most {BRUTEFORCE_MAX_N} vertices, got {G.n}")
    for t in G.triangle_list:
        if G.rows[t[0]] & G.rows[t[1]] & G.rows[t[2]]:
            raise PreconditionError("clique_cover_bruteforce requires a K4-free graph")
    rows = G.rows
    memo: dict[int, int] = {0: 0}

    def nu(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = nu(rest)
        for u in iter_bits(rows[v] & rest):
            best = max(best, 1 + nu(rest & ~(1 << u)))
        memo[mask] = best
        return best

    def matching_of(mask: int) -> list[tuple[int, int]]:
        out = []
        while mask:
            v = (mask & -mask).bit_length() - 1
            rest = mask & ~(1 << v)
            target = nu(mask)
            if nu(rest) == target:
                mask = rest
                continue
            for u in iter_bits(rows[v] & rest):
                if 1 + nu(rest & ~(1 << u)) == target:
                    out.append((v, u))
                    mask = rest & ~(1 << u)
                    break
        return out

    tris = G.triangle_list
    masks = [triangle_mask(t) for t in tris]
    best: Optional[tuple[int, tuple[Triangle, ...]]] = None

    def visit(start: int, chosen: list[Triangle], used: int) -> None:
        nonlocal best
        rest = G.full_mask & ~used
        size = len(chosen) + rest.bit_count() - nu(rest)
        key = tuple(chosen)
        if best is None or (size, key) < best:
            best = (size, key)
        for i in range(start, len(tris)):
            if not masks[i] & used:
                chosen.append(tris[i])
                visit(i + 1, chosen, used | masks[i])
                chosen.pop()

    visit(0, [], 0)
    assert best is not None
    key = best[1]
    used = mask_of(v for t in key for v in t)
    rest = G.full_mask & ~used
    M = matching_of(rest)
    matched = mask_of(v for e in M for v in e)
    return make_cover(key, M, iter_bits(rest & ~matched))


# --- normalization -----------------------------------------------------------------


def normalize_cover(G: Graph, cover: CliqueCover) -> CliqueCover:
    """Trade triangle/singleton pairs for edge pairs until one kind is gone.

    In a prismatic graph a singleton ``u`` has exactly one neighbour ``w``
    in any triangle ``K``; replacing ``K`` and ``{u}`` by ``K - {w}`` and
    ``{u, w}`` keeps the cover size.
    """
    require_prismatic(G, "normalize_cover")
    _require_valid(G, cover)
    triangles = sorted(cover.triangles)
    edges = list(cover.edges)
    singletons = sorted(cover.singletons)
    while triangles and singletons:
        K = triangles.pop(0)
        u = singletons.pop(0)
        w = (G.rows[u] & triangle_mask(K)).bit_length() - 1
        edges.append(tuple(x for x in K if x != w))
        edges.append((u, w))
    result = make_cover(triangles, edges, singletons)
    _require_valid(G, result)
    return result


def is_normal(cover: CliqueCover) -> bool:
    return not cover.triangles or not cover.singletons
