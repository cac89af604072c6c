from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from prismatic.errors import GraphError, PreconditionError, SizeLimitError
from prismatic.graph import (
    NO_WITNESS,
    NOT_ADJACENT,
    build_graph,
    complement,
    connected_components,
    core,
    derived_graph,
    disjoint_union,
    induced_subgraph,
    is_isomorphic_small,
    relabel,
    triangles,
    witness_matrix,
)
from prismatic.named import (
    claw,
    complete,
    complete_bipartite,
    cycle,
    diamond,
    empty,
    line_k33,
    prism,
    triangle_ring,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_rejects_bad_edges():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        build_graph(3, [(1, 1)])


def test_duplicate_edges_collapse():
    G = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1 and G.edges() == [(0, 1)]


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_triangles_match_enumeration(G):
    assert list(triangles(G)) == oracles.triangles(G)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_complement_is_involution(G):
    assert complement(complement(G)) == G
    assert complement(G).m + G.m == G.n * (G.n - 1) // 2


def test_basic_counts():
    assert (prism().n, prism().m, len(prism().triangle_list)) == (6, 9, 2)
    assert (line_k33().n, line_k33().m, len(line_k33().triangle_list)) == (9, 18, 6)
    assert len(complete(4).triangle_list) == 4
    assert triangles(cycle(5)) == []


def test_core_is_union_of_triangles():
    G = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert core(G) == frozenset({0, 1, 2})


def test_witness_matrix_entries():
    G = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    T = witness_matrix(G)
    assert T.entry(0, 1) == 2 and T.entry(1, 2) == 0
    assert T.entry(2, 3) == NO_WITNESS
    assert T.entry(0, 3) == NOT_ADJACENT
    assert T.triangles_through(2) == [(0, 1, 2)]
    assert not T.is_triangle_free_without([3])
    assert T.is_triangle_free_without([1])


def test_witness_matrix_rejects_diamond_and_k4():
    for G in (diamond(), complete(4)):
        with pytest.raises(PreconditionError):
            witness_matrix(G)


def test_derived_graph_of_line_k33_is_k33():
    D = derived_graph(line_k33())
    assert is_isomorphic_small(D, complete_bipartite(3, 3))


def test_derived_graph_of_prism_has_no_edges():
    D = derived_graph(prism())
    assert D.n == 2 and D.m == 0


def test_induced_subgraph_keeps_labels_and_origin():
    G = line_k33()
    H = induced_subgraph(G, [8, 0, 4])
    assert H.origin == (0, 4, 8)
    assert H.labels == ("a1b1", "a2b2", "a3b3")
    assert H.m == 0


def test_relabel_and_isomorphism():
    G = cycle(6)
    order = list(range(6))
    random.Random(3).shuffle(order)
    assert is_isomorphic_small(relabel(G, order), G)
    assert not is_isomorphic_small(cycle(6), disjoint_union(complete(3), complete(3)))
    assert not is_isomorphic_small(claw(), cycle(4))


def test_isomorphism_size_guard():
    with pytest.raises(SizeLimitError):
        is_isomorphic_small(empty(13), empty(13))


def test_components_of_union():
    G = disjoint_union(prism(), empty(2))
    assert connected_components(G) == [(0, 1, 2, 3, 4, 5), (6,), (7,)]


def test_vertex_of_label():
    G = line_k33()
    assert G.vertex_of_label("a2b3") == 5
    with pytest.raises(KeyError):
        G.vertex_of_label("nothing")


def test_triangle_ring_structure():
    G = triangle_ring(7)
    assert G.n == 21 and len(G.triangle_list) == 7
    assert oracles.is_prismatic(G)
