"""Membership tests for the classes the solvers dispatch on.

Each ``is_*`` function returns a :class:`Check`, which is truthy exactly when
the graph is in the class and otherwise carries an :class:`Obstruction`
that can be re-validated against the graph with :meth:`Obstruction.verify`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import PreconditionError, SizeLimitError
from .graph import (
    Graph,
    Triangle,
    core_mask,
    find_dense_edge,
    iter_bits,
    iter_induced_embeddings,
    triangle_mask,
)
from .named import ROTATOR_CENTER, rotator, twister
from .unionfind import ParityUnionFind

OBSTRUCTION_TRIANGLE_CAP = 2000

NOT_UNIQUE_NEIGHBOUR = "not-unique-neighbour"
ROTATOR = "rotator"
TWISTER = "twister"
CLAW = "claw"
DIAMOND = "diamond"
K4 = "K4"
PARITY_CYCLE = "parity-cycle"
NONCORE_TWINS = "noncore-twins"
NO_CORE_COMMON_NEIGHBOUR = "no-core-common-neighbour"


@dataclass(frozen=True)
class Obstruction:
    """Certificate that a graph lies outside a class.

    ``vertices`` lists the host vertices realising the pattern.  For a
    rotator or twister they are the images of the pattern's vertices in
    pattern order (see :mod:`prismatic.named`).  For a claw the centre comes
    first.  ``triangle`` is the offending triangle (unique-neighbour
    failure) or the rotator's centre.  ``constraints`` holds the
    ``(S, T, parity)`` triples of a parity cycle.
    """

    kind: str
    vertices: tuple[int, ...] = ()
    triangle: Optional[Triangle] = None
    count: Optional[int] = None
    constraints: tuple[tuple[Triangle, Triangle, int], ...] = ()

    def __str__(self) -> str:
        if self.kind == NOT_UNIQUE_NEIGHBOUR:
            v = self.vertices[0]
            return f"{self.kind}: vertex {v} has {self.count} neighbours in triangle {list(self.triangle)}"
        if self.kind == PARITY_CYCLE:
            parts = " ".join(f"{list(s)}~{list(t)}:{p}" for s, t, p in self.constraints)
            return f"{self.kind}: {parts}"
        text = f"{self.kind}: {' '.join(map(str, self.vertices))}"
        if self.kind == ROTATOR:
            text += f" centre {list(self.triangle)}"
        return text

    def verify(self, G: Graph) -> bool:
        """Re-check that the certificate holds in ``G``."""
        kind = self.kind
        if kind == NOT_UNIQUE_NEIGHBOUR:
            a, b, c = self.triangle
            v = self.vertices[0]
            if not (G.has_edge(a, b) and G.has_edge(a, c) and G.has_edge(b, c)):
                return False
            if v in self.triangle:
                return False
            count = (G.rows[v] & triangle_mask(self.triangle)).bit_count()
            return count == self.count and count != 1
        if kind in (ROTATOR, TWISTER):
            pattern = rotator() if kind == ROTATOR else twister()
            vs = self.vertices
            if len(vs) != pattern.n or len(set(vs)) != pattern.n:
                return False
            for i, j in combinations(range(pattern.n), 2):
                if pattern.has_edge(i, j) != G.has_edge(vs[i], vs[j]):
                    return False
            if kind == ROTATOR:
                return tuple(sorted(vs[i] for i in ROTATOR_CENTER)) == self.triangle
            return True
        if kind == CLAW:
            c, *leaves = self.vertices
            return all(G.has_edge(c, x) for x in leaves) and not any(
                G.has_edge(x, y) for x, y in combinations(leaves, 2)
            )
        if kind in (DIAMOND, K4):
            u, v, w1, w2 = self.vertices
            core_ok = all(G.has_edge(x, y) for x, y in [(u, v), (u, w1), (u, w2), (v, w1), (v, w2)])
            return core_ok and G.has_edge(w1, w2) == (kind == K4)
        if kind == PARITY_CYCLE:
            return _verify_parity_cycle(G, self.constraints)
        if kind == NONCORE_TWINS:
            u, v = self.vertices
            W = core_mask(G)
            return (
                u != v
                and not (W >> u & 1)
                and not (W >> v & 1)
                and G.rows[u] & W == G.rows[v] & W
            )
        if kind == NO_CORE_COMMON_NEIGHBOUR:
            u, v = self.vertices
            return u != v and not G.has_edge(u, v) and not (G.rows[u] & G.rows[v] & core_mask(G))
        return False


@dataclass(frozen=True)
class Check:
    ok: bool
    obstruction: Optional[Obstruction] = None

    def __bool__(self) -> bool:
        return self.ok


YES = Check(True)


def is_prismatic(G: Graph) -> Check:
    """Every vertex outside a triangle has exactly one neighbour in it."""
    rows = G.rows
    full = G.full_mask
    for t in G.triangle_list:
        a, b, c = t
        ra, rb, rc = rows[a], rows[b], rows[c]
        exactly_one = (ra ^ rb ^ rc) & ~(ra & rb & rc)
        bad = full & ~triangle_mask(t) & ~exactly_one
        if bad:
            v = (bad & -bad).bit_length() - 1
            count = (rows[v] & triangle_mask(t)).bit_count()
            return Check(False, Obstruction(NOT_UNIQUE_NEIGHBOUR, (v,), t, count))
    return YES


def require_prismatic(G: Graph, who: str) -> None:
    check = is_prismatic(G)
    if not check:
        raise PreconditionError(
            f"{who} requires a prismatic graph ({check.obstruction})", check.obstruction
        )


def _matching_parity(G: Graph, s: Triangle, t: Triangle) -> int:
    """Parity of the permutation induced by the unique matching ``s`` -> ``t``."""
    tmask = triangle_mask(t)
    image = []
    for v in s:
        hit = G.rows[v] & tmask
        if hit.bit_count() != 1:
            raise PreconditionError(
                f"vertex {v} has {hit.bit_count()} neighbours in triangle {list(t)}"
            )
        image.append(t.index(hit.bit_length() - 1))
    if len(set(image)) != 3:
        raise PreconditionError(f"no perfect matching between {list(s)} and {list(t)}")
    # a permutation of three items is even iff it is a rotation
    return 0 if image in ([0, 1, 2], [1, 2, 0], [2, 0, 1]) else 1


def orientation_constraints(G: Graph) -> list[tuple[int, int, int]]:
    """``(i, j, parity)`` for every vertex-disjoint pair of triangles ``i < j``.

    ``parity`` is 1 when the canonical (ascending) cyclic orders of the two
    triangles are reversed by their matching, so their orientation
    variables must differ.
    """
    tris = G.triangle_list
    masks = [triangle_mask(t) for t in tris]
    out = []
    for i, j in combinations(range(len(tris)), 2):
        if masks[i] & masks[j]:
            continue
        out.append((i, j, _matching_parity(G, tris[i], tris[j])))
    return out


def is_orientable(G: Graph) -> Check:
    """Decide orientability by propagating matching parities (prismatic input)."""
    require_prismatic(G, "is_orientable")
    tris = G.triangle_list
    uf = ParityUnionFind(len(tris))
    forest: dict[int, list[tuple[int, int]]] = {}
    for i, j, parity in orientation_constraints(G):
        ri, _ = uf.find(i)
        rj, _ = uf.find(j)
        if ri != rj:
            uf.union(i, j, parity)
            forest.setdefault(i, []).append((j, parity))
            forest.setdefault(j, []).append((i, parity))
        elif not uf.union(i, j, parity):
            path = _forest_path(forest, i, j)
            constraints = [(tris[a], tris[b], p) for a, b, p in path]
            constraints.append((tris[j], tris[i], parity))
            return Check(False, Obstruction(PARITY_CYCLE, constraints=tuple(constraints)))
    return YES


def _forest_path(forest, start: int, goal: int) -> list[tuple[int, int, int]]:
    prev: dict[int, tuple[int, int]] = {start: (start, 0)}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for y, p in forest.get(x, ()):
            if y not in prev:
                prev[y] = (x, p)
                queue.append(y)
    path = []
    x = goal
    while x != start:
        px, p = prev[x]
        path.append((px, x, p))
        x = px
    path.reverse()
    return path


def _verify_parity_cycle(G: Graph, constraints) -> bool:
    if not constraints:
        return False
    total = 0
    for k, (s, t, p) in enumerate(constraints):
        if triangle_mask(s) & triangle_mask(t):
            return False
        try:
            if _matching_parity(G, s, t) != p:
                return False
        except PreconditionError:
            return False
        nxt = constraints[(k + 1) % len(constraints)][0]
        if t != nxt:
            return False
        total ^= p
    return total == 1


_ROTATOR_ORDER = (0, 1, 2, 3, 6, 4, 7, 5, 8)
_TWISTER_ORDER = (2, 0, 3, 1, 4, 6, 5, 8, 7, 9)


def find_rotator_or_twister(G: Graph) -> Optional[Obstruction]:
    """Induced rotator (tried first) or twister in ``G``, else ``None``.

    Both searches start from a triangle of the pattern and grow along
    pattern edges, so every candidate set is a bitmask intersection.
    """
    if len(G.triangle_list) > OBSTRUCTION_TRIANGLE_CAP:
        raise SizeLimitError(
            f"obstruction search not attempted: {len(G.triangle_list)} triangles "
            f"> {OBSTRUCTION_TRIANGLE_CAP}"
        )
    if len(G.triangle_list) < 4:
        return None
    pattern = rotator()
    emb = next(iter_induced_embeddings(pattern, G, _ROTATOR_ORDER), None)
    if emb is not None:
        vs = tuple(emb[i] for i in range(pattern.n))
        centre = tuple(sorted(vs[i] for i in ROTATOR_CENTER))
        return Obstruction(ROTATOR, vs, centre)
    pattern = twister()
    emb = next(iter_induced_embeddings(pattern, G, _TWISTER_ORDER), None)
    if emb is not None:
        return Obstruction(TWISTER, tuple(emb[i] for i in range(pattern.n)))
    return None


def is_rigid(G: Graph) -> Check:
    """Rigidity of a prismatic graph with respect to its core ``W``."""
    require_prismatic(G, "is_rigid")
    rows = G.rows
    W = core_mask(G)
    seen: dict[int, int] = {}
    for v in range(G.n):
        if W >> v & 1:
            continue
        key = rows[v] & W
        if key in seen:
            return Check(False, Obstruction(NONCORE_TWINS, (seen[key], v)))
        seen[key] = v
    full = G.full_mask
    for u in range(G.n):
        non = full & ~rows[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(non):
            if not rows[u] & rows[v] & W:
                return Check(False, Obstruction(NO_CORE_COMMON_NEIGHBOUR, (u, v)))
    return YES


def find_claw(G: Graph) -> Optional[tuple[int, int, int, int]]:
    rows = G.rows
    for c in range(G.n):
        nb = rows[c]
        for a in iter_bits(nb):
            rest = nb & ~rows[a] & ~((1 << (a + 1)) - 1)
            for b in iter_bits(rest):
                third = rest & ~rows[b] & ~((1 << (b + 1)) - 1)
                if third:
                    return c, a, b, (third & -third).bit_length() - 1
    return None


def is_clawfree(G: Graph) -> Check:
    claw = find_claw(G)
    if claw is None:
        return YES
    return Check(False, Obstruction(CLAW, claw))


def is_diamond_k4_free(G: Graph) -> Check:
    dense = find_dense_edge(G)
    if dense is None:
        return YES
    u, v, w1, w2 = dense
    kind = K4 if G.has_edge(w1, w2) else DIAMOND
    return Check(False, Obstruction(kind, dense))


def require_diamond_k4_free(G: Graph, who: str) -> None:
    check = is_diamond_k4_free(G)
    if not check:
        raise PreconditionError(
            f"{who} requires a diamond-free and K4-free graph ({check.obstruction})",
            check.obstruction,
        )
