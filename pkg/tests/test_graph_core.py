from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from minordensity.errors import CapacityError, DomainError
from minordensity.graph_core import (Graph, blocks, bowtie, clique_number, complete_bipartite, complete_graph,
                                     connectivity, cycle_graph, density, diamond, disjoint_union, empty_graph,
                                     format_rational, parse_rational, path_graph, star_graph, t_density)


def test_construction_rejects_bad_input():
    with pytest.raises(DomainError):
        Graph(3, [(0, 3)])
    with pytest.raises(DomainError):
        Graph(3, [(1, 1)])
    with pytest.raises(CapacityError):
        Graph(65)


def test_parallel_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.num_edges == 1


def test_named_graphs_sizes():
    assert (complete_graph(5).n, complete_graph(5).num_edges) == (5, 10)
    assert path_graph(4).num_edges == 3
    assert cycle_graph(5).num_edges == 5
    assert star_graph(3).degrees() == [3, 1, 1, 1]
    assert complete_bipartite(2, 3).num_edges == 6
    assert diamond().num_edges == 5
    assert bowtie().num_edges == 6
    assert disjoint_union(complete_graph(3), complete_graph(2)).num_edges == 4
    with pytest.raises(DomainError):
        cycle_graph(2)


def test_density_values():
    assert density(complete_graph(5)) == 2
    assert density(path_graph(4)) == Fraction(3, 4)
    with pytest.raises(DomainError):
        density(empty_graph(0))


def test_t_density_definition():
    k4 = complete_graph(4)
    assert t_density(k4, 0) == Fraction(3, 2)
    assert t_density(k4, 1) == 2
    assert t_density(k4, 2) == Fraction(5, 2)
    # three edges do not exceed C(3,2), so the 3-density of a triangle is zero
    assert t_density(complete_graph(3), 3) == 0
    with pytest.raises(DomainError):
        t_density(k4, -1)


def test_rational_text_round_trip():
    assert parse_rational("25/11") == Fraction(25, 11)
    assert parse_rational(" 2 ") == 2
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(6, 4)) == "3/2"
    for bad in ("0.5", "1e3", "x", "1/0"):
        with pytest.raises(DomainError):
            parse_rational(bad)


def test_connectivity_small_cases():
    assert connectivity(complete_graph(1)) == 0
    assert connectivity(complete_graph(5)) == 4
    assert connectivity(cycle_graph(6)) == 2
    assert connectivity(disjoint_union(complete_graph(3), complete_graph(3))) == 0
    assert connectivity(complete_bipartite(3, 4)) == 3


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    expected = nx.node_connectivity(h) if g.n > 1 else 0
    assert connectivity(g) == expected


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_blocks_match_networkx(g):
    h = to_nx(g)
    expected = {frozenset(c) for c in nx.biconnected_components(h)}
    expected |= {frozenset([v]) for v in h.nodes if h.degree(v) == 0}
    got = blocks(g)
    assert set(got) == expected
    assert len(got) == len(expected)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_clique_number_matches_networkx(g):
    assert clique_number(g) == max(len(c) for c in nx.find_cliques(to_nx(g)))


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_relabel_preserves_counts(g):
    perm = list(reversed(range(g.n)))
    h = g.relabel(perm)
    assert h.num_edges == g.num_edges
    assert sorted(h.degrees()) == sorted(g.degrees())


def test_induced_subgraph():
    g = complete_graph(5).induced([4, 2, 0])
    assert (g.n, g.num_edges) == (3, 3)


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=2, max_n=11))
def test_one_density_lies_between_block_values(g):
    if not g.is_connected():
        return
    vals = [t_density(g.induced(sorted(b)), 1) for b in blocks(g)]
    own = t_density(g, 1)
    assert min(vals) <= own <= max(vals)
    assert density(g) < own


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=3, max_n=20))
def test_t_density_ordering(g):
    v, e = g.n, g.num_edges
    for t in range(2, v):
        if 2 * e < (t - 1) * (2 * v - t):
            continue
        vals = [t_density(g, s) for s in range(t + 1)]
        assert vals[t] >= vals[t - 1]
        assert all(vals[s] > vals[s - 1] for s in range(1, t))


@given(st.fractions(), st.fractions())
def test_rational_arithmetic_is_exact(a, b):
    assert (a + b) - b == a
    assert (a < b) == (a.numerator * b.denominator < b.numerator * a.denominator)
    assert parse_rational(format_rational(a)) == a


def test_listed_examples():
    assert density(complete_graph(1)) == 0
    assert density(diamond()) == Fraction(5, 4)
    assert t_density(complete_graph(3), 1) == Fraction(3, 2)
    assert t_density(complete_graph(2), 2) == 0
    assert connectivity(complete_graph(4)) == 3
    assert connectivity(path_graph(4)) == 1
    assert connectivity(cycle_graph(5)) == 2
    assert sorted(len(b) for b in blocks(bowtie())) == [3, 3]
    assert sorted(len(b) for b in blocks(path_graph(3))) == [2, 2]
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(cycle_graph(5)) == 2
