"""Default parameter sweeps for every family, and the shared test corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import chain, combinations, product
from typing import Optional

from ..graph import Graph, build_graph, is_isomorphic_small
from ..named import line_k33, prism, rotator, triangle_ring, twister
from .families import (
    CELLS,
    F7_EXTRA_PAIRS,
    PRISM_PAIRS,
    FamilySpec,
    NotPrismaticError,
    family_names,
    generate,
)
from .schlafli import r, s, schlafli_complement, t

MULTIPLICITIES = (1, 2, 3)

# (n_a, n_b, matching, c_sides) variants for exponentiation; the first is the
# singleton variant that reproduces the host
EXPONENTIATIONS = (
    {"n_a": 1, "n_b": 1, "matching": [[0, 0]], "c_sides": []},
    {"n_a": 0, "n_b": 0, "matching": [], "c_sides": [[]]},
    {"n_a": 1, "n_b": 0, "matching": [], "c_sides": []},
    {"n_a": 2, "n_b": 2, "matching": [[0, 0], [1, 1]], "c_sides": []},
    {"n_a": 1, "n_b": 1, "matching": [[0, 0]], "c_sides": [[0]]},
    {"n_a": 1, "n_b": 1, "matching": [[0, 0]], "c_sides": [[1]]},
    {"n_a": 2, "n_b": 2, "matching": [[0, 0], [1, 1]], "c_sides": [[0, 1]]},
    {"n_a": 2, "n_b": 1, "matching": [[0, 0]], "c_sides": [[0], [1]]},
    {"n_a": 1, "n_b": 1, "matching": [], "c_sides": [[]]},
    {"n_a": 2, "n_b": 2, "matching": [[0, 0]], "c_sides": [[1], [0]]},
    {"n_a": 3, "n_b": 3, "matching": [[0, 0], [1, 1], [2, 2]], "c_sides": [[0, 1, 0]]},
)


def _phi(m: int, start: int = 1) -> list[int]:
    return list(range(start, start + m))


def _subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def _cells(cells) -> list[list[int]]:
    return [list(c) for c in sorted(cells)]


# --- per-family candidate lists --------------------------------------------------------


def _fuzzily() -> list[FamilySpec]:
    sigma = schlafli_complement()
    leaves = [(r(1, 1).index, r(2, 2).index, r(3, 3).index), (r(1, 1).index, s(1, 1).index, t(1, 1).index)]
    out = []
    for a, b, c in leaves:
        others = [tr for tr in sigma.triangle_list if tr != tuple(sorted((a, b, c))) and (a in tr or b in tr)]
        for choice in range(8):
            rng = random.Random(choice)
            removed: set[int] = set()
            for tr in others:
                if removed & set(tr):
                    continue
                removed.add(rng.choice([x for x in tr if x not in (a, b)]))
            vertices = [v for v in range(27) if v not in removed]
            for ma, mb in product(MULTIPLICITIES, repeat=2):
                params = {"vertices": vertices, "leaf": [a, b, c], "phi_a": _phi(ma), "phi_b": _phi(mb, 1 + choice % 2)}
                out.append(FamilySpec("fuzzily-schlafli", params))
    return out


def _parallel_square() -> list[FamilySpec]:
    out = []
    for ms in product(MULTIPLICITIES, repeat=4):
        for shifted in (False, True):
            for delete_z in (False, True):
                params = {"delete_z": delete_z}
                for k, (cell, m) in enumerate(zip(("11", "12", "21", "22"), ms)):
                    params[f"phi_{cell}"] = _phi(m, 1 + k if shifted else 1)
                out.append(FamilySpec("parallel-square", params))
    return out


def _skew_square() -> list[FamilySpec]:
    out = []
    for ma, mb, mc in product(MULTIPLICITIES, repeat=3):
        for sa, sb, sc in ((1, 1, 1), (2, 1, 1), (1, 2, 2), (2, 2, 1)):
            out.append(FamilySpec("skew-square", {"phi_a": _phi(ma, sa), "phi_b": _phi(mb, sb), "phi_c": _phi(mc, sc)}))
    return out


def _f0() -> list[FamilySpec]:
    base1 = {(1, 1), (1, 3), (2, 2), (2, 3), (3, 1), (3, 2)}
    base2 = {(1, 1), (2, 1), (3, 2)}
    base3 = {(1, 3), (2, 1), (2, 2)}
    out = []
    for x1 in _subsets([(1, 2), (2, 1)]):
        for x2 in _subsets([(3, 1), (3, 3)]):
            for x3 in _subsets([(2, 3), (3, 3)]):
                params = {"I1": _cells(base1 | set(x1)), "I2": _cells(base2 | set(x2)), "I3": _cells(base3 | set(x3))}
                out.append(FamilySpec("f0", params))
    return out


def _f1() -> list[FamilySpec]:
    shapes = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1)]
    out = []
    for n_r in (0, 1):
        for (ap, asg), (bp, bsg) in product(shapes, repeat=2):
            bits = ap * bp + ap * bsg + bp * asg
            choices = sorted({0, (1 << bits) - 1, 0b0101010101 & ((1 << bits) - 1)})
            for ch in choices:
                params = {"r": n_r, "a_pairs": ap, "a_singles": asg, "b_pairs": bp, "b_singles": bsg, "choices": ch}
                out.append(FamilySpec("f1", params))
    return out


def _f2() -> list[FamilySpec]:
    out = []
    for k, (m12, m13, m21, m31) in enumerate(product(MULTIPLICITIES, repeat=4)):
        base = {
            "phi_12": _phi(m12),
            "phi_21": _phi(m21),
            "phi_13": _phi(m13, 2),
            "phi_31": _phi(m31, 2 + m13),
        }
        for exp in sorted({0, 1 + k % (len(EXPONENTIATIONS) - 1)}):
            out.append(FamilySpec("f2", {**base, "exp": EXPONENTIATIONS[exp]}))
    return out


def _f3() -> list[FamilySpec]:
    out = []
    pairs = [(0, 0), (1, 0), (0, 1), (4, 5), (1, 1), (3, 2), (6, 9), (8, 7)]
    for k, (m12, m13, m21, m31) in enumerate(product((1, 2), repeat=4)):
        extra = lambda m, v: [] if m == 1 else [v]  # noqa: E731
        base = {
            "phi_12": [1] + extra(m12, 3),
            "phi_31": [1] + extra(m31, 4),
            "phi_13": [2] + extra(m13, 3),
            "phi_21": [2] + extra(m21, 4),
        }
        for delete_11 in (False, True):
            for e1, e2 in (pairs[0], pairs[1 + (k + delete_11) % (len(pairs) - 1)]):
                params = {**base, "delete_11": delete_11, "exp1": EXPONENTIATIONS[e1], "exp2": EXPONENTIATIONS[e2]}
                out.append(FamilySpec("f3", params))
    # multiplicity three on the phi = 1 pair
    for e1, e2 in pairs:
        params = {"phi_12": [1, 3, 5], "phi_31": [1, 4, 5], "phi_13": [2], "phi_21": [2], "exp1": EXPONENTIATIONS[e1], "exp2": EXPONENTIATIONS[e2]}
        out.append(FamilySpec("f3", params))
    return out


def _f4() -> list[FamilySpec]:
    base = {(i, j) for i in (1, 2, 3) for j in (1, 2)}
    extras = [x for x in _subsets([(1, 3), (2, 3), (3, 3)]) if len(x) >= 2]
    out = []
    for Y in _subsets([1, 2, 3]):
        if not Y:
            continue
        for extra in extras:
            for exp in EXPONENTIATIONS:
                out.append(FamilySpec("f4", {"Y": list(Y), "I": _cells(base | set(extra)), "exp": exp}))
    return out


def _f5() -> list[FamilySpec]:
    base1 = {(1, 1), (3, 1), (3, 2), (3, 3)}
    free1 = [c for c in CELLS if c not in base1 | {(2, 2), (2, 3)}]
    free2 = [c for c in CELLS if c != (1, 1)]
    base3 = {(1, 2), (1, 3), (2, 3), (3, 3)}
    free3 = [c for c in CELLS if c not in base3 | {(2, 1), (3, 1)}]
    out = []
    for x1 in _subsets(free1):
        for x2 in _subsets(free2):
            for x3 in _subsets(free3):
                params = {"I1": _cells(base1 | set(x1)), "I2": _cells(x2), "I3": _cells(base3 | set(x3))}
                out.append(FamilySpec("f5", params))
    return out


def _f6() -> list[FamilySpec]:
    out = []
    for mr, mt in product(MULTIPLICITIES, repeat=2):
        for shifted in (False, True):
            out.append(FamilySpec("f6", {"phi_r": _phi(mr), "phi_t": _phi(mt, 2 if shifted else 1)}))
    return out


@lru_cache(maxsize=1)
def f7_hosts() -> tuple[tuple[tuple[int, int], ...], ...]:
    """Extra edge sets giving the 6-vertex prism supergraphs, one per isomorphism class."""
    reps: list[tuple[tuple[int, int], ...]] = []
    graphs: list[Graph] = []
    for extra in _subsets(F7_EXTRA_PAIRS):
        K = build_graph(6, list(PRISM_PAIRS) + list(extra))
        if any(is_isomorphic_small(K, H) for H in graphs):
            continue
        reps.append(tuple(extra))
        graphs.append(K)
    return tuple(reps)


def _f7() -> list[FamilySpec]:
    out = []
    for extra in f7_hosts():
        for kept in _subsets(range(6)):
            out.append(FamilySpec("f7", {"k_edges": [list(e) for e in extra], "k_vertices": list(kept)}))
    return out


def _f8() -> list[FamilySpec]:
    options = [((1, 1), False), ((2, 1), False), ((1, 2), False), ((2, 2), False), ((2, 2), True), ((3, 3), False)]
    out = []
    for choice in product(options, repeat=3):
        params = {}
        for (x, y), ((mx, my), shifted) in zip((("4", "7"), ("5", "8"), ("6", "9")), choice):
            params[f"phi_{x}"] = _phi(mx)
            params[f"phi_{y}"] = _phi(my, 2 if shifted else 1)
        out.append(FamilySpec("f8", params))
    return out


def _f9() -> list[FamilySpec]:
    out = []
    for x1 in _subsets([(1, 2), (1, 3)]):
        if not x1:
            continue
        for x2 in _subsets([(2, 1), (2, 3), (3, 1), (3, 2)]):
            for x3 in _subsets([(1, 2), (2, 2), (3, 2)]):
                if not x3:
                    continue
                I1 = {(2, 1), (3, 1), (3, 2), (3, 3)} | set(x1)
                I3 = {(1, 3), (2, 3), (3, 3)} | set(x3)
                if not ({(1, 2), (1, 3)} <= I1 or ((1, 2) in I3 and I3 & {(2, 2), (3, 2)})):
                    continue
                I2 = {(1, 1), (2, 2), (3, 3)} | set(x2)
                out.append(FamilySpec("f9", {"I1": _cells(I1), "I2": _cells(I2), "I3": _cells(I3)}))
    return out


def random_schlafli_subsets(count: int = 100, seed: int = 0, low: int = 10, high: int = 27) -> list[list[int]]:
    rng = random.Random(seed)
    return [sorted(rng.sample(range(27), rng.randint(low, high))) for _ in range(count)]


def _schlafli_induced(seed: int = 0) -> list[FamilySpec]:
    return [FamilySpec("schlafli-induced", {"vertices": vs}) for vs in random_schlafli_subsets(100, seed)]


_CANDIDATES = {
    "fuzzily-schlafli": _fuzzily,
    "parallel-square": _parallel_square,
    "skew-square": _skew_square,
    "f0": _f0,
    "f1": _f1,
    "f2": _f2,
    "f3": _f3,
    "f4": _f4,
    "f5": _f5,
    "f6": _f6,
    "f7": _f7,
    "f8": _f8,
    "f9": _f9,
    "schlafli-induced": _schlafli_induced,
}


def candidate_specs(family: str, seed: int = 0) -> list[FamilySpec]:
    """Every parameterization in the family's default sweep, before filtering.

    ``seed`` only affects the random induced subgraphs of the Schläfli complement.
    """
    if family == "schlafli-induced":
        return _schlafli_induced(seed)
    if family in _CANDIDATES:
        return _CANDIDATES[family]()
    if family in family_names():
        return [FamilySpec(family)]
    raise KeyError(family)


@dataclass
class SweepResult:
    family: str
    accepted: list[tuple[FamilySpec, Graph]] = field(default_factory=list)
    rejected: list[tuple[FamilySpec, str]] = field(default_factory=list)


def run_sweep(family: str) -> SweepResult:
    """Generate every candidate, keeping prismatic results and recording the rest."""
    result = SweepResult(family)
    for spec in candidate_specs(family):
        try:
            result.accepted.append((spec, generate(spec)))
        except NotPrismaticError as exc:
            result.rejected.append((spec, str(exc)))
    return result


def default_sweep(family: str) -> list[tuple[FamilySpec, Graph]]:
    return run_sweep(family).accepted


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    spec: Optional[FamilySpec] = None


def mauvais_graph() -> Graph:
    """Six vertices a..f with edges ab, bc, be, ce, ef, cd."""
    return build_graph(6, [(0, 1), (1, 2), (1, 4), (2, 4), (4, 5), (2, 3)], labels=list("abcdef"))


def corpus(per_family: int = 40, seed: int = 0) -> list[CorpusEntry]:
    """Named graphs, an even subsample of every family sweep, and 100 random
    induced subgraphs of the Schläfli complement."""
    out = [
        CorpusEntry("prism", prism()),
        CorpusEntry("rotator", rotator()),
        CorpusEntry("twister", twister()),
        CorpusEntry("line-k33", line_k33()),
        CorpusEntry("sigma", schlafli_complement(), FamilySpec("sigma")),
        CorpusEntry("mauvais", mauvais_graph()),
    ]
    out += [CorpusEntry(f"triangle-ring-{k}", triangle_ring(k)) for k in range(3, 13)]
    for family in _CANDIDATES:
        if family == "schlafli-induced":
            continue
        accepted = default_sweep(family)
        step = max(1, len(accepted) // per_family)
        for k, (spec, G) in enumerate(accepted[::step][:per_family]):
            out.append(CorpusEntry(f"{family}-{k}", G, spec))
    for k, spec in enumerate(_schlafli_induced(seed)):
        out.append(CorpusEntry(f"schlafli-induced-{k}", generate(spec), spec))
    return out
