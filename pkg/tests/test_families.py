from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import networkx as nx

from conftest import graphs, to_nx
from minordensity.canon import are_isomorphic
from minordensity.errors import DomainError
from minordensity.families import (FamilySpec, a_k, b_k, build_bowtie_star, build_clique_star, build_fan_cliques,
                                   build_fkm, build_gkm, build_k_plus_2a, build_path, build_star_of_plants,
                                   build_witness_25_11, c_k, closed_form, deltas, extend, fkm_density,
                                   gkm_density, gkm_n, k_sum, n1_delta1, n2_delta2, overlap_copies,
                                   overlap_edge_density)
from minordensity.graph_core import (Graph, blocks, bowtie, clique_number, complete_graph, cycle_graph, density,
                                     diamond, disjoint_union, path_graph, t_density)


def _valid_gkm_ms(k):
    n = gkm_n(k)
    return [m for m in range(n + 1) if 2 * m <= n or (m - n // 2) % 3 == 0]


def _specs():
    for k in range(2, 7):
        for m in _valid_gkm_ms(k):
            if k + gkm_n(k) <= 64:
                yield FamilySpec("Gkm", (k, m))
        for m in range(3, 40, 3):
            yield FamilySpec("Fkm", (k, m))
        for m in range(1, 5):
            for t in range(k):
                yield FamilySpec("StarOfPlants", (k, m, t))
    for a in range(1, 12):
        yield FamilySpec("KPlus2", (a,))
    for k in range(0, 6):
        for t in range(1, 4):
            if (k + 1) * (2 * t + 1) <= 64:
                yield FamilySpec("FanCliques", (k, t))
    for k in range(1, 8):
        yield FamilySpec("BowtieStar", (k,))
    for h in range(2, 8):
        for t in range(1, h):
            for m in range(1, 5):
                yield FamilySpec("CliqueStar", (h, t, m))
    for t in range(1, 10):
        yield FamilySpec("Path", (t,))
    yield FamilySpec("Witness2511")


def test_closed_forms_match_built_graphs():
    count = 0
    for spec in _specs():
        g = spec.build()
        cf = closed_form(spec)
        assert (cf.v, cf.e) == (g.n, g.num_edges), spec
        assert cf.rho == density(g)
        if cf.rho1 is not None:
            assert cf.rho1 == t_density(g, 1)
        count += 1
    assert count > 300


def test_spec_text_round_trip():
    for spec in _specs():
        assert FamilySpec.parse(str(spec)) == spec
    assert FamilySpec.parse("gkm(2, 7)") == FamilySpec("Gkm", (2, 7))
    for bad in ("Nope(1)", "Gkm(1)", "Gkm(a,b)", "Gkm(2,7"):
        with pytest.raises(DomainError):
            FamilySpec.parse(bad)


# --- G_k(m) and F_k(m) ------------------------------------------------------------------

def test_gkm_examples():
    g = build_gkm(2, 0)
    assert (g.n, g.num_edges, density(g)) == (10, 17, Fraction(17, 10)) and density(g) == a_k(2)
    g = build_gkm(2, 7)
    assert (g.n, g.num_edges, density(g)) == (10, 24, Fraction(12, 5))
    # X (two vertices) plus a triangle of Y is a 5-clique; networkx agrees
    assert clique_number(g) == 5 == max(len(c) for c in nx.find_cliques(to_nx(g)))
    assert density(build_gkm(2, 3)) == density(build_gkm(2, 0)) + Fraction(3, 10) == 2
    for k in range(2, 7):
        n = gkm_n(k)
        assert gkm_density(k, n // 2 - 1) == k
    with pytest.raises(DomainError):
        build_gkm(2, 5)


def test_fkm_examples():
    g = build_fkm(2, 9)
    assert (g.n, g.num_edges) == (11, 28)
    assert are_isomorphic(build_fkm(2, 3), complete_graph(5))
    g = build_fkm(3, 6)
    assert (g.n, g.num_edges, density(g)) == (9, 27, 3)
    with pytest.raises(DomainError):
        build_fkm(2, 4)


def test_parameter_closed_forms():
    assert closed_form(FamilySpec("Gkm", (2, 7))).rho == b_k(2) == Fraction(12, 5)
    assert closed_form(FamilySpec("FanCliques", (3, 2))).rho1 == Fraction(45, 19)
    assert closed_form(FamilySpec("Fkm", (2, 9))).rho == Fraction(28, 11)
    for k in range(2, 30):
        d1, d2 = deltas(k)
        assert d1 + d2 == 3
        n1, _ = n1_delta1(k)
        n2, _ = n2_delta2(k)
        assert gkm_density(k, n1) == b_k(k)
        assert n2 % 3 == 0 and n2 <= gkm_n(k)


@pytest.mark.parametrize("k", range(2, 7))
def test_mesh_steps(k):
    n = gkm_n(k)
    step = Fraction(1, k * k + 2 * k + 2)
    for m in range(n // 2):
        diff = gkm_density(k, m + 1) - gkm_density(k, m)
        assert diff == step and diff < Fraction(3, k * k)
    n2, _ = n2_delta2(k)
    for m in range(n2, n2 + 12 * k, 3):
        diff = fkm_density(k, m + 3) - fkm_density(k, m)
        assert 0 <= diff < Fraction(3, 2 * k * k)


@pytest.mark.parametrize("k", range(2, 7))
def test_gaps_between_families_shrink_quadratically(k):
    n2, _ = n2_delta2(k)
    assert abs(fkm_density(k, n2) - b_k(k)) * k * k < 2
    assert abs(c_k(k) - a_k(k + 1)) * k * k < 2
    assert fkm_density(k, n2 + 4 * k) >= c_k(k)


# --- plants, fans and stars ----------------------------------------------------------------

def test_star_of_plants_examples():
    g = build_star_of_plants(2, 2, 0)
    assert are_isomorphic(g, bowtie()) and density(g) == Fraction(6, 5)
    g = build_star_of_plants(3, 4, 0)
    assert (g.n, g.num_edges, density(g)) == (13, 20, Fraction(20, 13))
    bl = blocks(g)
    assert len(bl) == 4 and all(are_isomorphic(g.induced(sorted(b)), diamond()) for b in bl)
    assert are_isomorphic(build_star_of_plants(2, 1, 1), diamond())
    with pytest.raises(DomainError):
        build_star_of_plants(3, 1, 3)


def test_k_plus_2a_examples():
    assert are_isomorphic(build_k_plus_2a(1), complete_graph(3))
    assert are_isomorphic(build_k_plus_2a(2), diamond())
    g = build_k_plus_2a(4)
    assert (g.n, g.num_edges, density(g)) == (6, 9, Fraction(3, 2))


def test_fan_cliques_examples():
    g = build_fan_cliques(3, 2)
    assert (g.n, g.num_edges) == (20, 45)
    assert t_density(build_fan_cliques(3, 1), 1) == Fraction(25, 11)
    g = build_fan_cliques(1, 1)
    assert (g.n, g.num_edges) == (6, 11)
    assert are_isomorphic(build_fan_cliques(0, 3), complete_graph(4))
    for k in range(1, 5):
        for t in range(1, 4):
            g = build_fan_cliques(k, t)
            assert (g.n, g.num_edges) == ((k + 1) * (2 * t + 1), (k + 1) * (5 * t + 2) - 3)


def test_bowtie_star_examples():
    g = build_bowtie_star(1)
    assert (g.n, g.num_edges) == (6, 11)
    assert density(build_bowtie_star(2)) == 2
    assert density(build_bowtie_star(3)) == Fraction(33, 16)


def test_clique_star_examples():
    g = build_clique_star(4, 2, 3)
    assert (g.n, g.num_edges, density(g)) == (7, 9, Fraction(9, 7))
    assert all(len(b) == 3 for b in blocks(g))
    assert are_isomorphic(build_clique_star(5, 2, 1), complete_graph(4))
    # density climbs toward (h+t-3)/2 = 5/2
    vals = [density(build_clique_star(5, 3, m)) for m in range(1, 20)]
    assert all(a < b for a, b in zip(vals, vals[1:])) and vals[-1] < Fraction(5, 2)
    assert all(Fraction(5, 2) - d == Fraction(2, m + 1) for m, d in enumerate(vals, start=1))
    with pytest.raises(DomainError):
        build_clique_star(3, 3, 1)


def test_witness_25_11():
    g = build_witness_25_11()
    assert (g.n, g.num_edges, density(g)) == (11, 25, Fraction(25, 11))
    base = g.induced(list(range(10)))
    assert density(base) == Fraction(3, 2)
    assert t_density(g, 1) == Fraction(5, 2)


# --- operations ---------------------------------------------------------------------------------

def test_extend_examples():
    assert are_isomorphic(extend(Graph(1)), complete_graph(2))
    fan = extend(build_path(4))
    assert (fan.n, fan.num_edges) == (5, 7)
    assert max(fan.degrees()) == 4


def test_k_sum_examples():
    assert are_isomorphic(k_sum(complete_graph(3), complete_graph(3), [0], [0]), bowtie())
    assert are_isomorphic(k_sum(complete_graph(4), complete_graph(4), [0, 1], [0, 1]), build_fan_cliques(1, 1))
    assert are_isomorphic(k_sum(complete_graph(3), path_graph(2), [], []),
                          disjoint_union(complete_graph(3), path_graph(2)))
    g = k_sum(complete_graph(4), complete_graph(4), [0, 1], [0, 1], drop=[(0, 1)])
    assert g.num_edges == 10
    with pytest.raises(DomainError):
        k_sum(cycle_graph(4), complete_graph(3), [0, 2], [0, 1])
    with pytest.raises(DomainError):
        k_sum(complete_graph(3), complete_graph(3), [0, 1], [0])


def test_overlap_examples():
    assert are_isomorphic(overlap_copies(complete_graph(3), [0], 2), bowtie())
    g1 = build_bowtie_star(1)
    hub = [v for v in range(g1.n) if g1.degree(v) == g1.n - 1][0]
    for c in range(1, 5):
        assert are_isomorphic(overlap_copies(g1, [hub], c), build_bowtie_star(c))
    with pytest.raises(DomainError):
        overlap_copies(path_graph(3), [0, 2], 2)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=7), st.integers(1, 5))
def test_edge_overlap_density_formula(g, c):
    if not g.num_edges:
        return
    u, v = g.edges()[0]
    h = overlap_copies(g, [u, v], c)
    assert density(h) == overlap_edge_density(g.n, g.num_edges, c)


def test_overlap_density_tends_to_t_density():
    g = complete_graph(5)
    target = t_density(g, 2)
    prev = None
    for c in range(1, 12):
        d = density(overlap_copies(g, [0, 1], c))
        assert d < target
        if prev is not None:
            assert d > prev
        prev = d
    assert target - prev < Fraction(1, 5)


def test_edge_counts_by_formula():
    for h in range(3, 8):
        for t in range(1, h):
            for m in range(1, 4):
                g = build_clique_star(h, t, m)
                assert g.n == (h - t) * m + t - 1
                assert g.num_edges == m * (comb(h - t, 2) + (h - t) * (t - 1)) + comb(t - 1, 2)
