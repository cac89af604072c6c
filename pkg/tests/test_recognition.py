from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

import oracles
from prismatic.errors import PreconditionError
from prismatic.graph import build_graph
from prismatic.named import (
    claw,
    complete,
    complete_bipartite,
    cycle,
    diamond,
    empty,
    line_k33,
    prism,
    rotator,
    twister,
)
from prismatic.recognition import (
    CLAW,
    DIAMOND,
    K4,
    NONCORE_TWINS,
    PARITY_CYCLE,
    ROTATOR,
    TWISTER,
    find_rotator_or_twister,
    is_clawfree,
    is_diamond_k4_free,
    is_orientable,
    is_prismatic,
    is_rigid,
    orientation_constraints,
)
from prismatic.unionfind import ParityUnionFind
from test_graph import graphs

PAW = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
PAW_TWO_PENDANTS = build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_prismatic_matches_definition(G):
    verdict = is_prismatic(G)
    assert bool(verdict) == oracles.is_prismatic(G)
    if not verdict:
        assert verdict.obstruction.verify(G)


def test_named_graphs_are_prismatic():
    for G in (prism(), rotator(), twister(), line_k33(), cycle(7), empty(3), complete(3)):
        assert is_prismatic(G)
    assert not is_prismatic(build_graph(4, [(0, 1), (1, 2), (0, 2)]))
    assert not is_prismatic(diamond())


def test_orientability_of_named_graphs():
    assert is_orientable(prism())
    assert is_orientable(line_k33())
    for G in (rotator(), twister()):
        verdict = is_orientable(G)
        assert not verdict
        assert verdict.obstruction.kind == PARITY_CYCLE
        assert verdict.obstruction.verify(G)


def test_orientability_agrees_with_oracle(small_corpus):
    checked = 0
    for entry in small_corpus:
        G = entry.graph
        if len(G.triangle_list) > 12:
            continue
        assert bool(is_orientable(G)) == oracles.is_orientable(G), entry.name
        checked += 1
    assert checked >= 20


def test_orientable_requires_prismatic():
    with pytest.raises(PreconditionError):
        is_orientable(diamond())


def test_constraint_parity_of_prism():
    # prism matching s_k -> t_k is order preserving
    assert orientation_constraints(prism()) == [(0, 1, 0)]


def test_rotator_and_twister_are_found():
    found = find_rotator_or_twister(rotator())
    assert found.kind == ROTATOR and found.verify(rotator())
    assert found.triangle == (0, 1, 2)
    found = find_rotator_or_twister(twister())
    assert found.kind == TWISTER and found.verify(twister())
    assert find_rotator_or_twister(prism()) is None
    assert find_rotator_or_twister(line_k33()) is None


def test_rotator_found_inside_relabelled_host():
    G = rotator()
    order = list(range(G.n))
    random.Random(7).shuffle(order)
    from prismatic.graph import relabel

    H = relabel(G, order)
    found = find_rotator_or_twister(H)
    assert found is not None and found.verify(H)


def test_rigidity_examples():
    verdict = is_rigid(empty(2))
    assert not verdict and verdict.obstruction.kind == NONCORE_TWINS
    assert is_rigid(PAW)
    verdict = is_rigid(PAW_TWO_PENDANTS)
    assert not verdict and verdict.obstruction.verify(PAW_TWO_PENDANTS)
    with pytest.raises(PreconditionError):
        is_rigid(diamond())


def test_missing_common_core_neighbour():
    # pendants on different triangle vertices see different core vertices
    G = build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
    verdict = is_rigid(G)
    assert not verdict
    assert verdict.obstruction.vertices == (3, 4)
    assert verdict.obstruction.verify(G)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_clawfree_matches_definition(G):
    verdict = is_clawfree(G)
    assert bool(verdict) == (not oracles.has_claw(G))
    if not verdict:
        assert verdict.obstruction.kind == CLAW and verdict.obstruction.verify(G)


def test_clawfree_examples():
    assert not is_clawfree(claw())
    assert not is_clawfree(complete_bipartite(3, 3))
    assert is_clawfree(cycle(6))
    assert is_clawfree(line_k33())


def test_diamond_k4_detection():
    verdict = is_diamond_k4_free(diamond())
    assert verdict.obstruction.kind == DIAMOND and verdict.obstruction.verify(diamond())
    verdict = is_diamond_k4_free(complete(4))
    assert verdict.obstruction.kind == K4 and verdict.obstruction.verify(complete(4))
    assert is_diamond_k4_free(prism())


def test_parity_union_find():
    uf = ParityUnionFind(4)
    assert uf.union(0, 1, 1)
    assert uf.union(1, 2, 1)
    assert uf.find(0)[1] ^ uf.find(2)[1] == 0
    assert not uf.union(0, 2, 1)
    assert uf.union(2, 3, 0)
    assert uf.union(0, 3, 0)
