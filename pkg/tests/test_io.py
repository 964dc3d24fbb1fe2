import networkx as nx
import pytest
from hypothesis import given

from nbseq.generators import all_labeled_graphs, graph_from_edge_mask
from nbseq.graph import Graph
from nbseq.io import (
    ParseError,
    decode_graph6,
    encode_graph6,
    iter_graph6_lines,
    parse_graph,
    write_graph,
    write_graph6_lines,
)

from conftest import graphs, path


def test_graph6_known_strings():
    g = decode_graph6("D?{")
    assert g.n == 5
    assert encode_graph6(g) == b"D?{"
    assert decode_graph6("@") == Graph(1)
    assert decode_graph6("?") == Graph(0)
    assert encode_graph6(Graph(1)) == bytes([63 + 1])


def test_graph6_matches_networkx():
    import random

    rng = random.Random(7)
    for n in [0, 1, 2, 3, 7, 12, 40, 62, 63, 64]:
        for _ in range(5):
            mask = rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0
            g = graph_from_edge_mask(n, mask)
            ref = nx.Graph()
            ref.add_nodes_from(range(n))
            ref.add_edges_from(g.edges())
            expected = nx.to_graph6_bytes(ref, header=False).strip()
            assert encode_graph6(g) == expected
            back = nx.from_graph6_bytes(expected)
            assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_edgelist_parse():
    assert parse_graph("3\n0 1\n1 2", "edgelist") == path(3)
    text = "# comment\n3\n\n0 1\n1 0\n1 2\n"
    assert parse_graph(text.encode(), "edgelist") == path(3)


@pytest.mark.parametrize(
    "text",
    ["", "0 1\n", "3\n0 3\n", "3\n1 1\n", "3\n0\n", "3\nx y\n", "65\n"],
)
def test_edgelist_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text, "edgelist")


@pytest.mark.parametrize(
    "data",
    [
        b"",
        b"D?",  # truncated body
        b"D?{?",  # extra byte
        b"~?@~",  # long header used for n = 62
        b"~??~",
        b"A`",  # n = 2, padding bits set
        b"D? {",  # space is outside 63..126
        b"~?AB" + b"?" * 400,  # n = 65
    ],
)
def test_graph6_errors(data):
    with pytest.raises(ParseError):
        decode_graph6(data)


def test_round_trip_all_small_graphs():
    for n in range(7):
        for g in all_labeled_graphs(n):
            assert decode_graph6(encode_graph6(g)) == g
            assert parse_graph(write_graph(g, "edgelist"), "edgelist") == g


@given(graphs(max_n=64))
def test_round_trip_random(g):
    for fmt in ("graph6", "edgelist"):
        assert parse_graph(write_graph(g, fmt), fmt) == g


def test_graph6_lines_keep_going_after_errors():
    data = write_graph6_lines([path(3), path(4)]) + b"!!\n\n" + encode_graph6(path(5))
    out = list(iter_graph6_lines(data.splitlines()))
    assert [lineno for lineno, _ in out] == [1, 2, 3, 5]
    assert isinstance(out[2][1], ParseError)
    assert out[3][1] == path(5)


def test_header_prefix_accepted():
    assert decode_graph6(b">>graph6<<Bw") == decode_graph6(b"Bw")


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_graph("@", "dot")
