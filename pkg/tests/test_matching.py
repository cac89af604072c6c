from __future__ import annotations

import random

import networkx as nx
from hypothesis import given, settings

import oracles
from prismatic.graph import build_graph, iter_bits
from prismatic.matching import is_matching, max_matching
from prismatic.named import complete, cycle, empty, prism
from test_graph import graphs


def has_augmenting_path(G, M):
    """Independent check: search every alternating path from each free vertex."""
    mate = {}
    for u, v in M:
        mate[u], mate[v] = v, u
    free = [v for v in range(G.n) if v not in mate]

    def extend(v, visited):
        for u in G.neighbors(v):
            if u in visited:
                continue
            if u not in mate:
                return True
            w = mate[u]
            if w in visited:
                continue
            if extend(w, visited | {u, w}):
                return True
        return False

    return any(extend(v, frozenset({v})) for v in free)


def test_small_cases():
    assert len(max_matching(complete(3))) == 1
    assert len(max_matching(prism())) == 3
    assert max_matching(empty(4)) == []
    assert len(max_matching(cycle(7))) == 3


def test_restricted_matching():
    G = prism()
    M = max_matching(G, within=0b000111)
    assert len(M) == 1 and all(v < 3 for e in M for v in e)


def test_blossom_case():
    # a 5-cycle with a pendant at every vertex forces blossom contraction
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
    G = build_graph(10, edges)
    M = max_matching(G)
    assert len(M) == 5 and is_matching(G, M)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_maximum_and_no_augmenting_path(G):
    M = max_matching(G)
    assert is_matching(G, M)
    assert len(M) == oracles.max_matching_size(G)
    assert not has_augmenting_path(G, M)


def test_agrees_with_networkx():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(0, 16)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        G = build_graph(n, edges)
        H = nx.Graph()
        H.add_nodes_from(range(n))
        H.add_edges_from(edges)
        assert len(max_matching(G)) == len(nx.max_weight_matching(H, maxcardinality=True))


def test_deterministic():
    G = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    assert max_matching(G) == max_matching(G) == [(0, 1), (2, 3), (4, 5)]
    assert list(iter_bits(0b1010)) == [1, 3]
