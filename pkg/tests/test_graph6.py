import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from minordensity.errors import CapacityError, Graph6Error
from minordensity.graph6 import HEADER, emit_graph6, parse_graph6, read_graph6_stream, write_graph6_stream
from minordensity.graph_core import Graph, complete_graph


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=0, max_n=20))
def test_matches_networkx_encoding(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert emit_graph6(g) == expected
    assert parse_graph6(expected) == g


def test_large_sizes_use_long_header():
    rng = random.Random(7)
    for n in (62, 63, 64):
        g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3])
        text = emit_graph6(g)
        assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert parse_graph6(text) == g
        assert text.startswith("~") == (n >= 63)


def test_known_strings():
    assert emit_graph6(Graph(1)) == "@"
    assert emit_graph6(complete_graph(4)) == "C~"
    assert parse_graph6(HEADER + "C~") == complete_graph(4)


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "A_x", "B?x"])
def test_malformed_strings_raise(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_nonzero_padding_is_rejected():
    # n=2 has one data bit; the five padding bits must be zero
    with pytest.raises(Graph6Error):
        parse_graph6("A" + chr(63 + 0b100001))


def test_over_capacity():
    text = "~" + "".join(chr(63 + ((65 >> s) & 63)) for s in (12, 6, 0))
    with pytest.raises(CapacityError):
        parse_graph6(text + "?" * 347)


def test_stream_round_trip(tmp_path):
    gs = [complete_graph(k) for k in range(1, 6)]
    path = tmp_path / "g.g6"
    with open(path, "w") as fh:
        write_graph6_stream(gs, fh)
    with open(path) as fh:
        assert list(read_graph6_stream(fh)) == gs
