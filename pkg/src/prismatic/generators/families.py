"""Constructors for the prismatic graph families, with their small hitting sets.

Every family is addressed by a :class:`FamilySpec` (a family name plus a
JSON-compatible parameter dict).  Index pairs ``(i, j)`` always mean line
``i``, column ``j``.  Vertices are identified through their labels, so a
family's explicit hitting set is stated in host coordinates and mapped
onto whatever ids the construction produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable, Mapping, Optional

from ..errors import FamilyParameterError, PreconditionError
from ..graph import Graph, build_graph, induced_subgraph, iter_bits
from ..named import line_k33, prism, rotator, twister
from ..recognition import Obstruction, is_prismatic
from .operations import (
    Copy,
    ExponentiationSpec,
    MultiplicationSpec,
    add_edges,
    add_vertex,
    exponentiate,
    is_leaf_triangle,
    multiply,
)
from .schlafli import (
    SCHLAFLI_VERTICES,
    SchlafliVertex,
    r,
    s,
    schlafli_complement,
    schlafli_from_index_sets,
    schlafli_induced,
    t,
)

CELLS = tuple((i, j) for i in (1, 2, 3) for j in (1, 2, 3))


class NotPrismaticError(FamilyParameterError):
    def __init__(self, message: str, obstruction: Optional[Obstruction] = None):
        super().__init__(message)
        self.obstruction = obstruction


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyParameterError(
                f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}"
            )

    def describe(self) -> str:
        if not self.params:
            return self.family
        body = " ".join(f"{k}={_compact(v)}" for k, v in sorted(self.params.items()))
        return f"{self.family} {body}"


def _compact(value: Any) -> str:
    import json

    return json.dumps(value, separators=(",", ":"), sort_keys=True)


@dataclass(frozen=True)
class _Family:
    build: Callable[[dict], tuple[Graph, list]]
    bound: Optional[int]
    defaults: dict
    always_prismatic: bool


def _cells(value: Iterable, clause: str) -> frozenset:
    out = set()
    for cell in value:
        i, j = cell
        if (i, j) not in CELLS:
            raise FamilyParameterError(f"{clause}: index pair {cell!r} outside 1..3")
        out.add((int(i), int(j)))
    return frozenset(out)


def _require(condition: bool, clause: str) -> None:
    if not condition:
        raise FamilyParameterError(f"violated clause: {clause}")


def _phi(params: dict, key: str) -> list[int]:
    values = [int(v) for v in params[key]]
    _require(len(values) >= 1, f"{key} must be non-empty")
    _require(len(set(values)) == len(values), f"{key}: integer map must be injective")
    return values


def _exp_spec(H: Graph, a, b, c, data: Mapping) -> ExponentiationSpec:
    spec = ExponentiationSpec(
        a=H.vertex_of_label(a),
        b=H.vertex_of_label(b),
        c=H.vertex_of_label(c),
        n_a=int(data.get("n_a", 1)),
        n_b=int(data.get("n_b", 1)),
        matching=tuple(tuple(e) for e in data.get("matching", [[0, 0]])),
        c_sides=tuple(tuple(x) for x in data.get("c_sides", [])),
    )
    return spec


def _multiply_by_label(H: Graph, phi_by_label: Mapping[Any, list[int]]) -> Graph:
    return multiply(
        H, MultiplicationSpec({H.vertex_of_label(lab): vals for lab, vals in phi_by_label.items()})
    )


def _neighbour_labels(G: Graph, v: int) -> list:
    return [G.label(u) for u in iter_bits(G.rows[v])]


# --- fixed graphs --------------------------------------------------------------


def _build_sigma(p):
    G = schlafli_complement()
    return G, _neighbour_labels(G, 0)


def _build_fixed(maker):
    def build(p):
        return maker(), []

    return build


def _build_schlafli_induced(p):
    ids = sorted({int(v) for v in p["vertices"]})
    _require(all(0 <= v < 27 for v in ids), "vertex ids lie in 0..26")
    G = induced_subgraph(schlafli_complement(), ids)
    G = Graph(G.n, G.rows, G.labels)
    if G.n == 0:
        return G, []
    v = min(range(G.n), key=lambda x: (G.degree(x), x))
    return G, _neighbour_labels(G, v)


# --- multiplication-based families ------------------------------------------------


def _build_fuzzily(p):
    ids = sorted({int(v) for v in p["vertices"]})
    _require(all(0 <= v < 27 for v in ids), "host vertices lie in 0..26")
    a, b, c = (SCHLAFLI_VERTICES[int(v)] for v in p["leaf"])
    H = schlafli_induced(SCHLAFLI_VERTICES[v] for v in ids)
    try:
        ia, ib, ic = (H.vertex_of_label(x) for x in (a, b, c))
    except KeyError:
        raise FamilyParameterError("leaf triangle vertices must belong to the host") from None
    _require(is_leaf_triangle(H, ia, ib, ic), "{a,b,c} is a leaf triangle at c in H")
    lemma = [lab for lab in _neighbour_labels(H, ia) if lab != b]
    G = _multiply_by_label(H, {a: _phi(p, "phi_a"), b: _phi(p, "phi_b")})
    return G, lemma


def _build_parallel_square(p):
    H = line_k33()
    phi = {f"a{i}b{j}": _phi(p, f"phi_{i}{j}") for i, j in ((1, 1), (1, 2), (2, 1), (2, 2))}
    G = _multiply_by_label(H, phi)
    if p.get("delete_z", False):
        G = _delete_label(G, "a3b3")
    return G, ["a1b3", "a2b3", "a3b1", "a3b2"]


def _delete_label(G: Graph, label) -> Graph:
    v = G.vertex_of_label(label)
    H = induced_subgraph(G, [u for u in range(G.n) if u != v])
    return Graph(H.n, H.rows, H.labels)


def _build_skew_square(p):
    # a, b, c, s, t with triangles {s, a, c} and {t, b, c}
    K = build_graph(5, [(3, 0), (3, 2), (0, 2), (4, 1), (4, 2), (1, 2)], labels=list("abcst"))
    H = _multiply_by_label(K, {"a": _phi(p, "phi_a"), "b": _phi(p, "phi_b"), "c": _phi(p, "phi_c")})
    G = H
    for i in (1, 2, 3):
        nbrs = []
        for v in range(H.n):
            lab = H.label(v)
            if not isinstance(lab, Copy):
                continue
            value = lab.tag
            in_range = 1 <= value <= 3 and value != i
            if lab.origin in ("a", "b") and in_range:
                nbrs.append(v)
            elif lab.origin == "c" and not in_range:
                nbrs.append(v)
        G = add_vertex(G, nbrs, f"d{i}")
    return G, ["s", "t", "d1", "d2", "d3"]


# --- Σ-subgraph families ---------------------------------------------------------------


def _build_f0(p):
    I1, I2, I3 = (_cells(p[k], k) for k in ("I1", "I2", "I3"))
    _require({(1, 1), (1, 3), (2, 2), (2, 3), (3, 1), (3, 2)} <= I1, "(1,1),(1,3),(2,2),(2,3),(3,1),(3,2) in I1")
    _require((3, 3) not in I1, "(3,3) not in I1")
    _require({(1, 1), (2, 1), (3, 2)} <= I2, "(1,1),(2,1),(3,2) in I2")
    _require(not I2 & {(1, 2), (1, 3), (2, 2), (2, 3)}, "(1,2),(1,3),(2,2),(2,3) not in I2")
    _require({(1, 3), (2, 1), (2, 2)} <= I3, "(1,3),(2,1),(2,2) in I3")
    _require(not I3 & {(1, 1), (1, 2), (3, 1), (3, 2)}, "(1,1),(1,2),(3,1),(3,2) not in I3")
    H = schlafli_from_index_sets(I1, I2, I3)
    G = _add_edges_if_present(H, [(s(3, 1), t(2, 3)), (s(3, 1), t(3, 3)), (s(3, 3), t(2, 3))])
    return G, [r(1, 3), r(2, 3), t(1, 3)]


def _add_edges_if_present(H: Graph, pairs) -> Graph:
    present = set(H.labels)
    ids = [
        (H.vertex_of_label(x), H.vertex_of_label(y)) for x, y in pairs if x in present and y in present
    ]
    return add_edges(H, ids)


def _build_f4(p):
    Y = {int(j) for j in p["Y"]}
    I = _cells(p["I"], "I")
    _require(Y and Y <= {1, 2, 3}, "Y is a non-empty subset of {r^3_1, r^3_2, r^3_3}")
    _require(len(I) >= 8, "|I| >= 8")
    _require({(i, j) for i in (1, 2, 3) for j in (1, 2)} <= I, "I contains every (i,j) with j <= 2")
    chosen = [r(3, j) for j in sorted(Y)] + [s(i, j) for i, j in sorted(I)] + [t(1, 1), t(2, 2), t(3, 3)]
    H = schlafli_induced(chosen)
    G = exponentiate(H, _exp_spec(H, t(1, 1), t(2, 2), t(3, 3), p.get("exp", {})), check=False)
    return G, [s(3, 1), s(3, 2), s(3, 3), t(3, 3)]


def _build_f5(p):
    I1, I2, I3 = (_cells(p[k], k) for k in ("I1", "I2", "I3"))
    _require({(1, 1), (3, 1), (3, 2), (3, 3)} <= I1, "(1,1),(3,1),(3,2),(3,3) in I1")
    _require(not I1 & {(2, 2), (2, 3)}, "(2,2),(2,3) not in I1")
    _require((1, 1) not in I2, "(1,1) not in I2")
    _require({(1, 2), (1, 3), (2, 3), (3, 3)} <= I3, "(1,2),(1,3),(2,3),(3,3) in I3")
    _require(not I3 & {(2, 1), (3, 1)}, "(2,1),(3,1) not in I3")
    H = schlafli_from_index_sets(I1, I2, I3)
    G = _add_edges_if_present(H, [(r(1, 1), t(1, 2))])
    return G, [r(3, 2), r(3, 3), s(1, 2), s(1, 3), t(1, 1)]


F6_I1 = [(1, 1), (1, 2), (3, 1), (3, 2), (3, 3)]
F6_I2 = [(1, 2), (2, 1), (2, 2), (3, 3)]
F6_I3 = [(1, 2), (2, 2), (1, 3), (2, 3), (3, 3)]


def _build_f6(p):
    H = schlafli_from_index_sets(F6_I1, F6_I2, F6_I3)
    H = _add_edges_if_present(H, [(r(1, 1), t(1, 2))])
    G = _multiply_by_label(H, {r(3, 3): _phi(p, "phi_r"), t(3, 3): _phi(p, "phi_t")})
    return G, [r(3, 1), r(3, 2), s(3, 3)]


def _build_f9(p):
    I1, I2, I3 = (_cells(p[k], k) for k in ("I1", "I2", "I3"))
    _require({(2, 1), (3, 1), (3, 2), (3, 3)} <= I1, "(2,1),(3,1),(3,2),(3,3) in I1")
    _require(bool(I1 & {(1, 2), (1, 3)}), "I1 contains at least one of (1,2),(1,3)")
    _require(not I1 & {(1, 1), (2, 2), (2, 3)}, "(1,1),(2,2),(2,3) not in I1")
    _require({(1, 1), (2, 2), (3, 3)} <= I2, "(1,1),(2,2),(3,3) in I2")
    _require(not I2 & {(1, 2), (1, 3)}, "(1,2),(1,3) not in I2")
    _require({(1, 3), (2, 3), (3, 3)} <= I3, "(1,3),(2,3),(3,3) in I3")
    _require(bool(I3 & {(1, 2), (2, 2), (3, 2)}), "I3 contains at least one of (1,2),(2,2),(3,2)")
    _require(not I3 & {(1, 1), (2, 1), (3, 1)}, "(1,1),(2,1),(3,1) not in I3")
    _require(
        {(1, 2), (1, 3)} <= I1 or ((1, 2) in I3 and bool(I3 & {(2, 2), (3, 2)})),
        "(1,2),(1,3) in I1, or I3 contains (1,2) and one of (2,2),(3,2)",
    )
    H = schlafli_from_index_sets(I1, I2, I3)
    z_nbrs = [r(3, 2), r(3, 3), s(1, 1)]
    if (2, 2) in I3:
        z_nbrs.append(t(2, 2))
    if (3, 2) in I3:
        z_nbrs.append(t(3, 2))
    G = add_vertex(H, [H.vertex_of_label(x) for x in z_nbrs], "z")
    return G, [r(3, 2), r(3, 3), s(1, 1)]


# --- L(K33)-based families ---------------------------------------------------------


def _s_tile(exclude: Iterable[tuple[int, int]] = ()) -> Graph:
    """K: vertices s^i_j, adjacent iff different line and column."""
    skip = set(exclude)
    return schlafli_induced(s(i, j) for i, j in CELLS if (i, j) not in skip)


def _build_f2(p):
    phi = {cell: _phi(p, f"phi_{cell[0]}{cell[1]}") for cell in ((1, 2), (1, 3), (2, 1), (3, 1))}
    _require(not set(phi[(3, 1)]) & set(phi[(1, 3)]), "no u in A^3_1, v in A^1_3 with phi(u) = phi(v)")
    _require(1 in phi[(1, 2)] and 1 in phi[(2, 1)], "some a^1_2 in A^1_2 and a^2_1 in A^2_1 have phi = 1")
    _require(1 not in phi[(1, 3)] + phi[(3, 1)], "phi(v) != 1 on A^3_1 and A^1_3")
    H = _multiply_by_label(_s_tile(), {s(*cell): vals for cell, vals in phi.items()})
    a, b, c = Copy(s(1, 2), 1), Copy(s(2, 1), 1), s(3, 3)
    G = exponentiate(H, _exp_spec(H, a, b, c, p.get("exp", {})), check=False)
    return G, [s(3, 2), s(2, 3), s(2, 2), s(3, 3)]


def _build_f3(p):
    phi = {cell: _phi(p, f"phi_{cell[0]}{cell[1]}") for cell in ((1, 2), (1, 3), (2, 1), (3, 1))}
    _require(1 in phi[(1, 2)] and 1 in phi[(3, 1)], "some a^1_2 in A^1_2 and a^3_1 in A^3_1 have phi = 1")
    _require(1 not in phi[(1, 3)] + phi[(2, 1)], "phi(v) != 1 on A^1_3 and A^2_1")
    _require(2 in phi[(1, 3)] and 2 in phi[(2, 1)], "some a^1_3 in A^1_3 and a^2_1 in A^2_1 have phi = 2")
    _require(2 not in phi[(1, 2)] + phi[(3, 1)], "phi(v) != 2 on A^1_2 and A^3_1")
    removed = [(2, 2)] + ([(1, 1)] if p.get("delete_11", False) else [])
    H = _multiply_by_label(_s_tile(removed), {s(*cell): vals for cell, vals in phi.items()})
    G = exponentiate(
        H, _exp_spec(H, Copy(s(1, 2), 1), Copy(s(3, 1), 1), s(2, 3), p.get("exp1", {})), check=False
    )
    G = exponentiate(
        G, _exp_spec(G, Copy(s(1, 3), 2), Copy(s(2, 1), 2), s(3, 2), p.get("exp2", {})), check=False
    )
    return G, [s(3, 3), s(2, 3), s(3, 2)]


# --- F1, F7, F8 ------------------------------------------------------------------------


def _build_f1(p):
    n_r = int(p.get("r", 0))
    _require(n_r in (0, 1), "|R| <= 1")
    a_pairs, a_singles = int(p.get("a_pairs", 0)), int(p.get("a_singles", 0))
    b_pairs, b_singles = int(p.get("b_pairs", 0)), int(p.get("b_singles", 0))
    _require(min(a_pairs, a_singles, b_pairs, b_singles) >= 0, "set sizes are non-negative")
    choices = int(p.get("choices", 0))
    labels = ["s", "t"] + [f"r{i}" for i in range(n_r)]
    A = list(range(len(labels), len(labels) + 2 * a_pairs + a_singles))
    labels += [f"a{i}" for i in range(len(A))]
    B = list(range(len(labels), len(labels) + 2 * b_pairs + b_singles))
    labels += [f"b{i}" for i in range(len(B))]
    S, T = 0, 1
    R = list(range(2, 2 + n_r))
    edges = [(S, T)] + [(S, x) for x in R] + [(T, x) for x in R]
    edges += [(S, x) for x in A] + [(T, y) for y in B]
    A_pairs = [(A[2 * k], A[2 * k + 1]) for k in range(a_pairs)]
    B_pairs = [(B[2 * k], B[2 * k + 1]) for k in range(b_pairs)]
    A_single = A[2 * a_pairs :]
    B_single = B[2 * b_pairs :]
    edges += A_pairs + B_pairs
    bit = 0

    def take() -> int:
        nonlocal bit
        value = choices >> bit & 1
        bit += 1
        return value

    for a0, a1 in A_pairs:
        for b0, b1 in B_pairs:
            edges += [(a0, b1), (a1, b0)] if take() else [(a0, b0), (a1, b1)]
        for b in B_single:
            edges.append((a1 if take() else a0, b))
    for b0, b1 in B_pairs:
        for a in A_single:
            edges.append((b1 if take() else b0, a))
    edges += [(a, b) for a in A_single for b in B_single]
    return build_graph(len(labels), edges, labels), ["s", "t"]


PRISM_PAIRS = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]
F7_EXTRA_PAIRS = [(i, 3 + j) for i in range(3) for j in range(3) if i != j]
K_NAMES = ["a1", "a2", "a3", "b1", "b2", "b3"]


def _build_f7(p):
    extra = [tuple(sorted(map(int, e))) for e in p.get("k_edges", [])]
    _require(all(e in F7_EXTRA_PAIRS for e in extra), "K is a 6-vertex supergraph of the prism")
    k_edges = sorted(set(PRISM_PAIRS) | set(extra))
    kept = sorted({int(v) for v in p.get("k_vertices", [])})
    _require(all(0 <= v < 6 for v in kept), "vertices of K are 0..5 (a1, a2, a3, b1, b2, b3)")
    k_adj = set(k_edges)
    names = [K_NAMES[x] + K_NAMES[y] for x, y in k_edges] + [K_NAMES[v] for v in kept]
    m = len(k_edges)
    pairs = []
    for e, f in combinations(range(m), 2):
        if not set(k_edges[e]) & set(k_edges[f]):
            pairs.append((e, f))
    for e in range(m):
        for idx, v in enumerate(kept):
            if v in k_edges[e]:
                pairs.append((e, m + idx))
    for i1, i2 in combinations(range(len(kept)), 2):
        if (kept[i1], kept[i2]) not in k_adj:
            pairs.append((m + i1, m + i2))
    G = build_graph(len(names), pairs, names)
    lemma = [K_NAMES[x] + K_NAMES[y] for x, y in k_edges if 0 in (x, y)]
    return G, lemma


def _build_f8(p):
    G = rotator()
    for x, y in (("v4", "v7"), ("v5", "v8"), ("v6", "v9")):
        G = _multiply_by_label(G, {x: _phi(p, f"phi_{x[1]}"), y: _phi(p, f"phi_{y[1]}")})
    return G, ["v1", "v2", "v3"]


SIGMA_DEFAULT_SUBSET = list(range(27))

FAMILIES: dict[str, _Family] = {
    "sigma": _Family(_build_sigma, 10, {}, True),
    "schlafli-induced": _Family(_build_schlafli_induced, 10, {"vertices": SIGMA_DEFAULT_SUBSET}, True),
    "fuzzily-schlafli": _Family(
        _build_fuzzily,
        5,
        {
            # Σ minus one vertex from each other triangle through r^1_1 and r^2_2
            "vertices": [0, 1, 2, 3, 4, 5, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 20, 23, 26],
            "leaf": [0, 4, 8],
            "phi_a": [1, 2],
            "phi_b": [1],
        },
        False,
    ),
    "parallel-square": _Family(
        _build_parallel_square,
        4,
        {"phi_11": [1, 2], "phi_12": [1], "phi_21": [1], "phi_22": [1, 2], "delete_z": False},
        True,
    ),
    "skew-square": _Family(
        _build_skew_square, 5, {"phi_a": [1, 2], "phi_b": [1, 3], "phi_c": [1, 2, 3]}, True
    ),
    "f0": _Family(
        _build_f0,
        3,
        {
            "I1": [[1, 1], [1, 3], [2, 2], [2, 3], [3, 1], [3, 2]],
            "I2": [[1, 1], [2, 1], [3, 2], [3, 1], [3, 3]],
            "I3": [[1, 3], [2, 1], [2, 2], [2, 3], [3, 3]],
        },
        True,
    ),
    "f1": _Family(
        _build_f1, 2, {"r": 1, "a_pairs": 1, "a_singles": 1, "b_pairs": 1, "b_singles": 1, "choices": 0}, False
    ),
    "f2": _Family(
        _build_f2,
        4,
        {"phi_12": [1], "phi_13": [2], "phi_21": [1], "phi_31": [3], "exp": {"n_a": 1, "n_b": 1, "matching": [[0, 0]]}},
        False,
    ),
    "f3": _Family(
        _build_f3,
        3,
        {
            "phi_12": [1],
            "phi_13": [2],
            "phi_21": [2],
            "phi_31": [1],
            "delete_11": False,
            "exp1": {"n_a": 1, "n_b": 1, "matching": [[0, 0]]},
            "exp2": {"n_a": 1, "n_b": 1, "matching": [[0, 0]]},
        },
        False,
    ),
    "f4": _Family(
        _build_f4,
        4,
        {
            "Y": [1, 2, 3],
            "I": [list(c) for c in CELLS],
            "exp": {"n_a": 1, "n_b": 1, "matching": [[0, 0]], "c_sides": [[0]]},
        },
        False,
    ),
    "f5": _Family(
        _build_f5,
        5,
        {
            "I1": [[1, 1], [3, 1], [3, 2], [3, 3]],
            "I2": [[1, 2], [1, 3], [2, 1], [2, 2], [2, 3], [3, 1], [3, 2], [3, 3]],
            "I3": [[1, 2], [1, 3], [2, 3], [3, 3]],
        },
        False,
    ),
    "f6": _Family(_build_f6, 3, {"phi_r": [1, 2], "phi_t": [1]}, False),
    "f7": _Family(_build_f7, 5, {"k_edges": [], "k_vertices": [0, 1, 2, 3, 4, 5]}, True),
    "f8": _Family(
        _build_f8,
        3,
        {"phi_4": [1, 2], "phi_7": [1], "phi_5": [1], "phi_8": [1], "phi_6": [1], "phi_9": [1]},
        False,
    ),
    "f9": _Family(
        _build_f9,
        3,
        {
            "I1": [[2, 1], [3, 1], [3, 2], [3, 3], [1, 2], [1, 3]],
            "I2": [[1, 1], [2, 2], [3, 3]],
            "I3": [[1, 3], [2, 3], [3, 3], [1, 2], [2, 2]],
        },
        False,
    ),
    "rotator": _Family(_build_fixed(rotator), None, {}, True),
    "twister": _Family(_build_fixed(twister), None, {}, True),
    "prism": _Family(_build_fixed(prism), None, {}, True),
    "line-k33": _Family(_build_fixed(line_k33), None, {}, True),
}

MENAGERIE = (
    "fuzzily-schlafli",
    "parallel-square",
    "skew-square",
    "f0",
    "f1",
    "f2",
    "f3",
    "f4",
    "f5",
    "f6",
    "f7",
    "f8",
    "f9",
    "schlafli-induced",
)


def family_names() -> list[str]:
    return list(FAMILIES)


def lemma_bound(family: str) -> Optional[int]:
    """Size bound of the family's explicit hitting set (``None`` if it has none)."""
    return FAMILIES[family].bound


def always_prismatic(family: str) -> bool:
    """Whether every parameterization is claimed prismatic (no filtering allowed)."""
    return FAMILIES[family].always_prismatic


def _resolved(spec: FamilySpec) -> dict:
    params = dict(FAMILIES[spec.family].defaults)
    params.update(spec.params)
    return params


def _build(spec: FamilySpec) -> tuple[Graph, list]:
    try:
        return FAMILIES[spec.family].build(_resolved(spec))
    except KeyError as exc:
        raise FamilyParameterError(f"{spec.family}: missing or unknown vertex {exc}") from None
    except PreconditionError as exc:
        raise FamilyParameterError(f"{spec.family}: {exc}") from None


def generate(spec: FamilySpec) -> Graph:
    """Build the family graph; non-prismatic results are rejected."""
    G, _ = _build(spec)
    verdict = is_prismatic(G)
    if not verdict:
        raise NotPrismaticError(
            f"{spec.describe()}: result is not prismatic ({verdict.obstruction})",
            verdict.obstruction,
        )
    return G


def lemma_hitting_set(spec: FamilySpec, G: Graph) -> frozenset[int]:
    """The family's explicit hitting set, as vertex ids of ``G``."""
    family = FAMILIES[spec.family]
    if family.bound is None:
        raise FamilyParameterError(f"family {spec.family!r} has no explicit hitting set")
    _, labels = _build(spec)
    present = set(G.labels or ())
    return frozenset(G.vertex_of_label(lab) for lab in labels if lab in present)
