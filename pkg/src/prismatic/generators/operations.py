"""Graph expansions: multiplication, exponentiation of a leaf triangle,
replication, plus small editing helpers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from ..errors import FamilyParameterError, GraphError, PreconditionError
from ..graph import Graph, iter_bits, mask_of, triangle_mask
from ..recognition import is_prismatic


class Copy(NamedTuple):
    """Label of a vertex created from ``origin`` (a host label)."""

    origin: Any
    tag: Any

    def __str__(self) -> str:
        return f"{self.origin}[{self.tag}]"


def _label(G: Graph, v: int) -> Any:
    lab = G.label(v)
    return v if lab is None else lab


@dataclass(frozen=True)
class MultiplicationSpec:
    """``phi[x]`` lists the integer map on the new vertices replacing ``x``.

    ``len(phi[x])`` is the multiplicity of ``x``; values must be distinct.
    """

    phi: Mapping[int, Sequence[int]]

    def validate(self, H: Graph) -> None:
        for x, values in self.phi.items():
            if not 0 <= x < H.n:
                raise FamilyParameterError(f"multiplied vertex {x} is not in the host")
            if len(values) == 0:
                raise FamilyParameterError(f"vertex {x} has an empty set of new vertices")
            if len(set(values)) != len(values):
                raise FamilyParameterError(f"integer map is not injective on the copies of {x}")


def multiply(H: Graph, spec: MultiplicationSpec) -> Graph:
    """Replace every ``x`` in ``spec.phi`` by stable copies ``A_x``.

    Copies inherit ``x``'s neighbours outside the multiplied set.  Copies of
    two multiplied vertices are adjacent iff their integer values are equal
    (when the originals are adjacent) or differ (when they are not).
    """
    spec.validate(H)
    X = sorted(spec.phi)
    xmask = mask_of(X)
    kept = [v for v in range(H.n) if not xmask >> v & 1]
    new = [(x, value) for x in X for value in spec.phi[x]]
    index = {v: i for i, v in enumerate(kept)}
    n = len(kept) + len(new)
    rows = [0] * n
    for v in kept:
        for u in iter_bits(H.rows[v] & ~xmask):
            rows[index[v]] |= 1 << index[u]
    for k, (x, value) in enumerate(new):
        me = len(kept) + k
        for u in iter_bits(H.rows[x] & ~xmask):
            rows[me] |= 1 << index[u]
            rows[index[u]] |= 1 << me
        for k2 in range(k + 1, len(new)):
            y, other = new[k2]
            if y == x:
                continue
            joined = (value == other) if H.has_edge(x, y) else (value != other)
            if joined:
                rows[me] |= 1 << (len(kept) + k2)
                rows[len(kept) + k2] |= 1 << me
    labels = [_label(H, v) for v in kept] + [Copy(_label(H, x), value) for x, value in new]
    return Graph(n, tuple(rows), tuple(labels))


def is_leaf_triangle(H: Graph, a: int, b: int, c: int) -> bool:
    """``{a, b, c}`` is a triangle and no other triangle meets ``{a, b}``."""
    if not (H.has_edge(a, b) and H.has_edge(a, c) and H.has_edge(b, c)):
        return False
    own = tuple(sorted((a, b, c)))
    return all(t == own or (a not in t and b not in t) for t in H.triangle_list)


def leaf_neighbourhood_parts(H: Graph, a: int, b: int, c: int) -> tuple[int, int, int]:
    """Masks ``(D1, D2, D3)`` partitioning ``N(c) - {a, b}``."""
    in_triangle_without_c = 0
    in_triangle = 0
    for t in H.triangle_list:
        m = triangle_mask(t)
        in_triangle |= m
        if c not in t:
            in_triangle_without_c |= m
    rest = H.rows[c] & ~(1 << a) & ~(1 << b)
    d1 = rest & in_triangle_without_c
    d2 = rest & in_triangle & ~d1
    d3 = rest & ~in_triangle
    return d1, d2, d3


@dataclass(frozen=True)
class ExponentiationSpec:
    """Replacement of the leaf triangle ``{a, b, c}`` (leaf at ``c``).

    ``matching`` pairs A-indices with B-indices.  ``c_sides[k][e]`` says
    which end of matching edge ``e`` the ``k``-th C vertex sees: 0 for the
    A end, 1 for the B end.
    """

    a: int
    b: int
    c: int
    n_a: int
    n_b: int
    matching: tuple[tuple[int, int], ...] = ()
    c_sides: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def n_c(self) -> int:
        return len(self.c_sides)

    def validate(self, H: Graph) -> None:
        if not is_leaf_triangle(H, self.a, self.b, self.c):
            raise FamilyParameterError(
                f"{{{self.a}, {self.b}, {self.c}}} is not a leaf triangle at {self.c}"
            )
        if self.n_a < 0 or self.n_b < 0:
            raise FamilyParameterError("negative set size")
        a_used, b_used = set(), set()
        for i, j in self.matching:
            if not (0 <= i < self.n_a and 0 <= j < self.n_b):
                raise FamilyParameterError(f"matching edge ({i}, {j}) out of range")
            if i in a_used or j in b_used:
                raise FamilyParameterError("a vertex of A or B has two neighbours across")
            a_used.add(i)
            b_used.add(j)
        for k, sides in enumerate(self.c_sides):
            if len(sides) != len(self.matching):
                raise FamilyParameterError(
                    f"C vertex {k} lacks a side choice for some A-B edge"
                )
            if any(side not in (0, 1) for side in sides):
                raise FamilyParameterError("side choices must be 0 (A end) or 1 (B end)")


def exponentiate(H: Graph, spec: ExponentiationSpec, check: bool = True) -> Graph:
    """Exponentiate a leaf triangle; the result must be prismatic when ``check``."""
    spec.validate(H)
    a, b, c = spec.a, spec.b, spec.c
    d1, _d2, d3 = leaf_neighbourhood_parts(H, a, b, c)
    kept = [v for v in range(H.n) if v not in (a, b)]
    index = {v: i for i, v in enumerate(kept)}
    base = len(kept)
    A = [base + i for i in range(spec.n_a)]
    B = [base + spec.n_a + j for j in range(spec.n_b)]
    C = [base + spec.n_a + spec.n_b + k for k in range(spec.n_c)]
    n = base + spec.n_a + spec.n_b + spec.n_c
    rows = [0] * n

    def join(x: int, y: int) -> None:
        rows[x] |= 1 << y
        rows[y] |= 1 << x

    for v in kept:
        for u in iter_bits(H.rows[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    for v in kept:
        if H.has_edge(v, a):
            for x in A:
                join(index[v], x)
        if H.has_edge(v, b):
            for y in B:
                join(index[v], y)
        if (d1 | d3) >> v & 1:
            for z in C:
                join(index[v], z)
    for i, j in spec.matching:
        join(A[i], B[j])
    matched_a = {i for i, _ in spec.matching}
    matched_b = {j for _, j in spec.matching}
    for k, z in enumerate(C):
        for e, (i, j) in enumerate(spec.matching):
            join(z, A[i] if spec.c_sides[k][e] == 0 else B[j])
        for i in range(spec.n_a):
            if i not in matched_a:
                join(z, A[i])
        for j in range(spec.n_b):
            if j not in matched_b:
                join(z, B[j])
    la, lb, lc = _label(H, a), _label(H, b), _label(H, c)
    labels = (
        [_label(H, v) for v in kept]
        + [Copy(la, f"A{i}") for i in range(spec.n_a)]
        + [Copy(lb, f"B{j}") for j in range(spec.n_b)]
        + [Copy(lc, f"C{k}") for k in range(spec.n_c)]
    )
    G = Graph(n, tuple(rows), tuple(labels))
    if check:
        verdict = is_prismatic(G)
        if not verdict:
            raise PreconditionError(
                f"exponentiation result is not prismatic ({verdict.obstruction})",
                verdict.obstruction,
            )
    return G


def replicate(G: Graph, v: int, k: int) -> Graph:
    """Replace ``v`` by ``k`` pairwise non-adjacent twins.

    The first twin keeps id ``v``; the others are appended.
    """
    if k < 1:
        raise GraphError("replication count must be at least 1")
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} outside 0..{G.n - 1}")
    n = G.n + k - 1
    rows = list(G.rows) + [0] * (k - 1)
    for extra in range(G.n, n):
        for u in iter_bits(G.rows[v]):
            rows[extra] |= 1 << u
            rows[u] |= 1 << extra
    labels = None
    if G.labels is not None or k > 1:
        base = [_label(G, u) for u in range(G.n)]
        labels = tuple(base + [Copy(base[v], f"twin{i}") for i in range(1, k)])
    return Graph(n, tuple(rows), labels)


def add_edges(G: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    rows = list(G.rows)
    for u, v in pairs:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(G.n, tuple(rows), G.labels)


def add_vertex(G: Graph, neighbours: Iterable[int], label: Any = None) -> Graph:
    nbr = mask_of(neighbours)
    rows = list(G.rows)
    for u in iter_bits(nbr):
        rows[u] |= 1 << G.n
    rows.append(nbr)
    labels = None
    if G.labels is not None:
        labels = G.labels + (label,)
    return Graph(G.n + 1, tuple(rows), labels)
