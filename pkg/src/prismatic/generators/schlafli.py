"""The complement of the Schläfli graph and its coordinates."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

from ..graph import Graph, build_graph, induced_subgraph

TILES = ("R", "S", "T")
_NEXT_TILE = {"R": "S", "S": "T", "T": "R"}


class SchlafliVertex(NamedTuple):
    tile: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.tile.lower()}^{self.line}_{self.column}"

    @property
    def index(self) -> int:
        """Vertex id in :func:`schlafli_complement` (tile, then line, then column)."""
        return TILES.index(self.tile) * 9 + (self.line - 1) * 3 + (self.column - 1)


def r(i: int, j: int) -> SchlafliVertex:
    return SchlafliVertex("R", i, j)


def s(i: int, j: int) -> SchlafliVertex:
    return SchlafliVertex("S", i, j)


def t(i: int, j: int) -> SchlafliVertex:
    return SchlafliVertex("T", i, j)


SCHLAFLI_VERTICES = tuple(
    SchlafliVertex(tile, i, j) for tile in TILES for i in (1, 2, 3) for j in (1, 2, 3)
)


def schlafli_adjacent(u: SchlafliVertex, v: SchlafliVertex) -> bool:
    if u.tile == v.tile:
        return u.line != v.line and u.column != v.column
    if _NEXT_TILE[u.tile] == v.tile:
        return u.column == v.line
    if _NEXT_TILE[v.tile] == u.tile:
        return v.column == u.line
    return False


@lru_cache(maxsize=1)
def schlafli_complement() -> Graph:
    """Σ on 27 vertices; ids follow :data:`SCHLAFLI_VERTICES`."""
    edges = [
        (a, b)
        for a, b in combinations(range(27), 2)
        if schlafli_adjacent(SCHLAFLI_VERTICES[a], SCHLAFLI_VERTICES[b])
    ]
    return build_graph(27, edges, labels=SCHLAFLI_VERTICES)


def schlafli_induced(vertices: Iterable[SchlafliVertex]) -> Graph:
    """Induced subgraph of Σ on the given coordinates (kept in Σ order)."""
    return induced_subgraph(schlafli_complement(), [v.index for v in vertices])


def schlafli_from_index_sets(I1, I2, I3) -> Graph:
    """Σ induced on ``r^i_j, (i,j) ∈ I1``, ``s^i_j, (i,j) ∈ I2``, ``t^i_j, (i,j) ∈ I3``."""
    chosen = [r(i, j) for i, j in I1] + [s(i, j) for i, j in I2] + [t(i, j) for i, j in I3]
    return schlafli_induced(chosen)
