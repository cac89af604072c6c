from __future__ import annotations

import pytest
from hypothesis import given, settings

import oracles
from prismatic.clique_cover import (
    CliqueCover,
    clique_cover_bruteforce,
    clique_cover_exact,
    clique_cover_nonorientable,
    clique_cover_small_hitting,
    clique_cover_via_hitting_set,
    is_normal,
    make_cover,
    normalize_cover,
)
from prismatic.errors import PreconditionError, SizeLimitError
from prismatic.generators import schlafli_complement
from prismatic.generators.sweeps import mauvais_graph
from prismatic.graph import build_graph
from prismatic.graphio import format_cover
from prismatic.matching import max_matching
from prismatic.named import complete, cycle, diamond, empty, line_k33, prism, rotator, twister
from prismatic.recognition import is_diamond_k4_free
from test_graph import graphs

# set-partition enumeration on the 9- and 10-vertex graphs
ROTATOR_COVER = 3
TWISTER_COVER = 4
PAW = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def test_frozen_values_match_enumeration():
    assert oracles.min_clique_cover_size(rotator()) == ROTATOR_COVER
    assert oracles.min_clique_cover_size(twister()) == TWISTER_COVER


def test_mauvais_graph():
    G = mauvais_graph()
    cover = clique_cover_small_hitting(G)
    assert cover.size == 3 and cover.is_valid(G)
    assert cover.triangles == ()
    assert cover.edges == ((0, 1), (2, 3), (4, 5))
    assert clique_cover_bruteforce(G).size == 3
    # taking the triangle first cannot do better than four cliques
    forced = clique_cover_via_hitting_set(G, [2])
    assert forced.size == 3
    rest = G.full_mask & ~0b010110
    assert 1 + rest.bit_count() - len(max_matching(G, within=rest)) == 4


def test_triangle_free_with_empty_hitting_set():
    G = cycle(7)
    cover = clique_cover_via_hitting_set(G, [])
    assert cover.size == G.n - len(max_matching(G)) == 4


def test_prism_cover():
    cover = clique_cover_via_hitting_set(prism(), [0, 3])
    assert cover.triangles == ((0, 1, 2), (3, 4, 5)) and cover.size == 2


def test_sigma_cover():
    S = schlafli_complement()
    cover = clique_cover_nonorientable(S)
    assert cover.is_valid(S)
    assert cover.size == 9 and len(cover.triangles) == 9
    # K4-free, so every clique has at most three vertices
    assert cover.size >= -(-S.n // 3)


def test_rotator_and_twister():
    for G, size in ((rotator(), ROTATOR_COVER), (twister(), TWISTER_COVER)):
        cover = clique_cover_nonorientable(G)
        assert cover.size == size and cover.is_valid(G)


def test_preconditions():
    with pytest.raises(PreconditionError, match="non-orientable"):
        clique_cover_nonorientable(prism())
    with pytest.raises(PreconditionError, match="prismatic"):
        clique_cover_nonorientable(diamond())
    with pytest.raises(PreconditionError, match="not a hitting set"):
        clique_cover_via_hitting_set(prism(), [0])
    with pytest.raises(PreconditionError, match="at most 5"):
        clique_cover_via_hitting_set(prism(), [0, 1, 2, 3, 4, 5])
    with pytest.raises(PreconditionError):
        clique_cover_via_hitting_set(diamond(), [0, 1])
    with pytest.raises(PreconditionError):
        clique_cover_small_hitting(schlafli_complement())
    with pytest.raises(SizeLimitError):
        clique_cover_bruteforce(empty(19))
    with pytest.raises(PreconditionError):
        clique_cover_bruteforce(complete(4))


def test_degenerate_inputs():
    assert clique_cover_small_hitting(empty(0)) == CliqueCover()
    assert clique_cover_exact(empty(0)) == CliqueCover()
    assert clique_cover_small_hitting(empty(1)).singletons == (0,)
    assert clique_cover_bruteforce(complete(3)).size == 1
    assert clique_cover_bruteforce(empty(4)).size == 4


def test_cover_validation():
    G = prism()
    assert not make_cover([(0, 1, 2)], [], [3, 4]).is_valid(G)
    assert not make_cover([(0, 1, 2)], [(3, 5), (4, 5)], []).is_valid(G)
    assert not make_cover([(0, 1, 3)], [(4, 5)], [2]).is_valid(G)
    assert "not a clique" in make_cover([(0, 1, 3)], [(4, 5)], [2]).problem(G)


def test_cover_format():
    assert format_cover(clique_cover_small_hitting(prism())) == "t 0 1 2\nt 3 4 5\nsize 2\n"
    # ties between equal sizes go to the least triangle list, here the empty one
    assert format_cover(clique_cover_small_hitting(PAW)) == "e 0 3\ne 1 2\nsize 2\n"


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_bruteforce_matches_partition_oracle(G):
    if any(G.rows[a] & G.rows[b] & G.rows[c] for a, b, c in G.triangle_list):
        return
    cover = clique_cover_bruteforce(G)
    assert cover.is_valid(G)
    assert cover.size == oracles.min_clique_cover_size(G)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_small_hitting_route_on_random_graphs(G):
    if not is_diamond_k4_free(G):
        return
    try:
        cover = clique_cover_small_hitting(G)
    except PreconditionError:
        return
    assert cover.is_valid(G)
    assert cover.size == clique_cover_bruteforce(G).size


def test_exact_search_on_corpus(corpus):
    for entry in corpus:
        G = entry.graph
        if G.n <= 15:
            cover = clique_cover_exact(G)
            assert cover.is_valid(G)
            assert cover.size == clique_cover_bruteforce(G).size, entry.name


def test_orientable_instances_use_the_general_route(corpus):
    checked = 0
    for entry in corpus:
        G = entry.graph
        if G.n > 15:
            continue
        try:
            cover = clique_cover_small_hitting(G)
        except PreconditionError:
            continue
        assert cover.size == clique_cover_bruteforce(G).size, entry.name
        checked += 1
    assert checked >= 50


def test_normalize_examples():
    G = line_k33()
    c = make_cover([], [(0, 1), (3, 4), (6, 7)], [2, 5, 8])
    assert normalize_cover(G, c) == c
    c = make_cover([(0, 1, 2)], [], [3])
    n = normalize_cover(PAW, c)
    assert n.size == 2 and n.triangles == () and n.singletons == ()
    assert n.edges == ((0, 3), (1, 2))


def test_normalize_rejects_invalid():
    with pytest.raises(PreconditionError):
        normalize_cover(PAW, make_cover([(0, 1, 2)], [], []))
    with pytest.raises(PreconditionError):
        normalize_cover(diamond(), make_cover([], [], [0, 1, 2, 3]))


def test_normalize_repeated_exchanges():
    G = rotator()
    c = make_cover([(1, 4, 7), (2, 5, 8)], [], [0, 3, 6])
    n = normalize_cover(G, c)
    assert n.size == c.size and n.is_valid(G) and is_normal(n)
    assert n.triangles == ()
