"""Hitting sets of triangles: bounded search and an exact minimum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, iter_bits, mask_of, triangle_mask
from .recognition import require_diamond_k4_free


@dataclass(frozen=True)
class HittingSet:
    vertices: tuple[int, ...]
    minimal: bool = False

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def hits(self, G: Graph) -> bool:
        m = self.mask
        return all(triangle_mask(t) & m for t in G.triangle_list)


def is_hitting_set(G: Graph, vertices) -> bool:
    m = mask_of(vertices)
    return all(triangle_mask(t) & m for t in G.triangle_list)


class _Search:
    """Branching on the first uncovered triangle, over triangle-index bitsets."""

    def __init__(self, G: Graph):
        self.tris = G.triangle_list
        self.tri_masks = [triangle_mask(t) for t in self.tris]
        self.through = [0] * G.n
        for idx, t in enumerate(self.tris):
            for v in t:
                self.through[v] |= 1 << idx
        self.all_tris = (1 << len(self.tris)) - 1

    def packing_bound(self, uncovered: int) -> int:
        """Size of a greedy vertex-disjoint packing among ``uncovered``."""
        used = 0
        count = 0
        masks = self.tri_masks
        for idx in iter_bits(uncovered):
            m = masks[idx]
            if not m & used:
                used |= m
                count += 1
        return count

    def solve(self, uncovered: int, budget: int, allowed: int) -> Optional[list[int]]:
        """Vertices from ``allowed`` (at most ``budget``) covering ``uncovered``."""
        if not uncovered:
            return []
        if budget <= 0 or self.packing_bound(uncovered) > budget:
            return None
        idx = (uncovered & -uncovered).bit_length() - 1
        for v in self.tris[idx]:
            if not allowed >> v & 1:
                continue
            rest = self.solve(uncovered & ~self.through[v], budget - 1, allowed)
            if rest is not None:
                return [v] + rest
        return None


def find_hitting_set_at_most(G: Graph, k: int = 5) -> Optional[HittingSet]:
    """A hitting set with at most ``k`` vertices, or ``None`` if there is none."""
    require_diamond_k4_free(G, "find_hitting_set_at_most")
    search = _Search(G)
    found = search.solve(search.all_tris, k, G.full_mask)
    if found is None:
        return None
    return HittingSet(tuple(sorted(found)))


def min_hitting_set(G: Graph) -> HittingSet:
    """The lexicographically least hitting set of minimum cardinality."""
    search = _Search(G)
    full = G.full_mask
    k = search.packing_bound(search.all_tris)
    while search.solve(search.all_tris, k, full) is None:
        k += 1
    # fix members one at a time, smallest feasible vertex first
    chosen: list[int] = []
    uncovered = search.all_tris
    while uncovered:
        start = chosen[-1] + 1 if chosen else 0
        for v in range(start, G.n):
            allowed = full & ~((1 << (v + 1)) - 1)
            rest = uncovered & ~search.through[v]
            if search.solve(rest, k - len(chosen) - 1, allowed) is not None:
                chosen.append(v)
                uncovered = rest
                break
        else:  # pragma: no cover - k is feasible, so some v always works
            raise AssertionError("hitting-set search lost feasibility")
    return HittingSet(tuple(chosen), minimal=True)
