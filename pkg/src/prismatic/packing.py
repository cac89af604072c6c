"""Maximum sets of vertex-disjoint triangles in prismatic graphs.

Disjoint triangles of ``G`` are exactly the stable sets of the derived
graph ``D(G)``.  For orientable prismatic graphs every component of
``D(G)`` is claw-free or a ``K_{3,3}``, which is what makes the problem
tractable there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, SizeLimitError
from .graph import (
    Graph,
    Triangle,
    connected_components,
    derived_graph,
    induced_subgraph,
    is_isomorphic_small,
    iter_bits,
    triangle_mask,
    witness_matrix,
)
from .hitting_set import find_hitting_set_at_most
from .named import complete_bipartite
from .recognition import find_claw, is_orientable, require_diamond_k4_free, require_prismatic

BRUTEFORCE_MAX_TRIANGLES = 60
SMALL_N = 27

K33 = "K33"
CLAW_FREE = "ClawFree"
OTHER = "Other"


@dataclass(frozen=True)
class DerivedComponent:
    triangles: tuple[Triangle, ...]
    kind: str


def _check_packing(G: Graph, tris) -> tuple[Triangle, ...]:
    out = tuple(sorted(tris))
    used = 0
    for t in out:
        m = triangle_mask(t)
        assert not m & used, "packing triangles overlap"
        used |= m
    return out


def _packing_search(G: Graph) -> tuple[Triangle, ...]:
    tris = G.triangle_list
    masks = [triangle_mask(t) for t in tris]
    best: list[int] = []
    chosen: list[int] = []

    def visit(i: int, used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i == len(tris):
            return
        free = (~used & ((1 << G.n) - 1)).bit_count()
        if len(chosen) + min(len(tris) - i, free // 3) <= len(best):
            return
        if not masks[i] & used:
            chosen.append(i)
            visit(i + 1, used | masks[i])
            chosen.pop()
        visit(i + 1, used)

    visit(0, 0)
    return tuple(tris[i] for i in best)


def max_triangle_packing_bruteforce(G: Graph) -> tuple[Triangle, ...]:
    """Exact maximum packing by include/exclude search over the triangle list."""
    if len(G.triangle_list) > BRUTEFORCE_MAX_TRIANGLES:
        raise SizeLimitError(
            f"max_triangle_packing_bruteforce handles at most {BRUTEFORCE_MAX_TRIANGLES} "
            f"triangles, got {len(G.triangle_list)}"
        )
    return _check_packing(G, _packing_search(G))


def max_triangle_packing_small_hitting(G: Graph) -> tuple[Triangle, ...]:
    """Maximum packing when some set of at most five vertices meets every triangle.

    Every triangle of a packing contains its own hitter, so trying every
    disjoint choice of at most one triangle per hitter is exhaustive.
    """
    require_diamond_k4_free(G, "max_triangle_packing_small_hitting")
    S = find_hitting_set_at_most(G, 5)
    if S is None:
        raise PreconditionError("max_triangle_packing_small_hitting requires a hitting set of at most 5 vertices")
    T = witness_matrix(G)
    through = [T.triangles_through(s) for s in S.vertices]
    best: tuple[Triangle, ...] = ()

    def visit(i: int, chosen: list[Triangle], used: int) -> None:
        nonlocal best
        if i == len(through):
            key = tuple(sorted(chosen))
            if len(key) > len(best) or (len(key) == len(best) and key < best):
                best = key
            return
        if len(chosen) + len(through) - i < len(best):
            return
        for t in through[i]:
            m = triangle_mask(t)
            if not m & used:
                chosen.append(t)
                visit(i + 1, chosen, used | m)
                chosen.pop()
        visit(i + 1, chosen, used)

    visit(0, [], 0)
    return _check_packing(G, best)


def max_stable_set_clawfree(G: Graph) -> tuple[int, ...]:
    """Maximum stable set of a claw-free graph (branch and bound)."""
    claw = find_claw(G)
    if claw is not None:
        raise PreconditionError(f"max_stable_set_clawfree requires a claw-free graph; claw {list(claw)}", claw)
    rows = G.rows
    best: list[int] = []

    def clique_cover_bound(mask: int) -> int:
        cliques: list[int] = []
        for v in iter_bits(mask):
            for k, c in enumerate(cliques):
                if c & rows[v] == c:
                    cliques[k] = c | (1 << v)
                    break
            else:
                cliques.append(1 << v)
        return len(cliques)

    def visit(mask: int, chosen: list[int]) -> None:
        nonlocal best
        # vertices of degree at most one can always be taken
        forced = []
        changed = True
        while changed:
            changed = False
            for v in iter_bits(mask):
                if (rows[v] & mask).bit_count() <= 1:
                    forced.append(v)
                    mask &= ~(rows[v] | (1 << v))
                    changed = True
                    break
        chosen = chosen + forced
        if not mask:
            if len(chosen) > len(best):
                best = chosen
            return
        if len(chosen) + clique_cover_bound(mask) <= len(best):
            return
        v = max(iter_bits(mask), key=lambda x: ((rows[x] & mask).bit_count(), -x))
        visit(mask & ~(rows[v] | (1 << v)), chosen + [v])
        visit(mask & ~(1 << v), chosen)

    visit(G.full_mask, [])
    return tuple(sorted(best))


def classify_derived_components(G: Graph) -> list[DerivedComponent]:
    """Components of ``D(G)`` tagged ``K33``, ``ClawFree`` or ``Other``."""
    D = derived_graph(G)
    k33 = complete_bipartite(3, 3)
    out = []
    for comp in connected_components(D):
        H = induced_subgraph(D, comp)
        if H.n == 6 and H.m == 9 and is_isomorphic_small(H, k33):
            kind = K33
        elif find_claw(H) is None:
            kind = CLAW_FREE
        else:
            kind = OTHER
        out.append(DerivedComponent(tuple(D.labels[i] for i in comp), kind))
    return out


def max_triangle_packing_derived(G: Graph) -> tuple[Triangle, ...]:
    """Packing assembled from maximum stable sets of the components of ``D(G)``."""
    require_prismatic(G, "max_triangle_packing_derived")
    D = derived_graph(G)
    chosen: list[Triangle] = []
    for comp in classify_derived_components(G):
        index = [D.vertex_of_label(t) for t in comp.triangles]
        H = induced_subgraph(D, index)
        if comp.kind == K33:
            # the side holding the least triangle
            side = [0] + [u for u in range(1, H.n) if not H.has_edge(0, u)]
            chosen.extend(comp.triangles[u] for u in side)
        elif comp.kind == CLAW_FREE:
            chosen.extend(comp.triangles[u] for u in max_stable_set_clawfree(H))
        else:
            raise PreconditionError(
                "derived graph has a component that is neither claw-free nor K_{3,3} "
                f"(triangles {[list(t) for t in comp.triangles]}); the input is not orientable"
            )
    return _check_packing(G, chosen)


def max_triangle_packing_prismatic(G: Graph) -> tuple[Triangle, ...]:
    """Maximum packing of a prismatic graph.

    Small graphs are solved exactly; graphs with a hitting set of at most
    five vertices by enumeration over the hitters; every other prismatic
    graph is orientable and goes through the derived graph.
    """
    require_prismatic(G, "max_triangle_packing_prismatic")
    if G.n <= SMALL_N:
        return _check_packing(G, _packing_search(G))
    if find_hitting_set_at_most(G, 5) is not None:
        return max_triangle_packing_small_hitting(G)
    if not is_orientable(G):
        raise PreconditionError(
            "non-orientable prismatic graph with more than 27 vertices and no hitting set "
            "of at most 5 vertices; no such graph should exist"
        )
    return max_triangle_packing_derived(G)


def is_packing(G: Graph, tris) -> bool:
    used = 0
    for t in tris:
        a, b, c = t
        if not (G.has_edge(a, b) and G.has_edge(a, c) and G.has_edge(b, c)):
            return False
        m = triangle_mask(t)
        if m & used:
            return False
        used |= m
    return True
