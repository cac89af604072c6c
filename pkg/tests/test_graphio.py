from __future__ import annotations

import pytest
from hypothesis import given, settings

from prismatic.errors import GraphError
from prismatic.graphio import format_graph, parse_graph, read_graph, write_graph
from prismatic.generators import schlafli_complement
from prismatic.named import prism
from test_graph import graphs


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_round_trip(G):
    text = format_graph(G)
    again = parse_graph(text)
    assert again == G
    assert format_graph(again) == text


def test_labels_survive_as_strings(tmp_path):
    S = schlafli_complement()
    path = tmp_path / "sigma.g"
    write_graph(S, path, comments=["family sigma"])
    back = read_graph(path)
    assert back == S
    assert back.labels[0] == "r^1_1"
    assert path.read_text().splitlines()[:3] == ["p 27 135", "c family sigma", "c label 0 r^1_1"]


def test_format_is_exact():
    assert format_graph(prism()).splitlines()[0] == "p 6 9"
    assert parse_graph("p 3 1\ne 0 2\n").edges() == [(0, 2)]


@pytest.mark.parametrize(
    "text",
    [
        "e 0 1\np 2 1\n",
        "p 2 1\np 2 1\ne 0 1\n",
        "p 2 1\ne 0 x\n",
        "p 2 1\nq 0 1\n",
        "p 2 2\ne 0 1\n",
        "p 2 1\ne 0 2\n",
        "c only a comment\n",
    ],
)
def test_malformed_input(text):
    with pytest.raises(GraphError):
        parse_graph(text)
