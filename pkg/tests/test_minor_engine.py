from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings

from conftest import atlas, graphs
from minordensity.canon import are_isomorphic, canonical_form
from minordensity.errors import BudgetExceeded, DomainError
from minordensity.families import build_fan_cliques, build_gkm, build_k_plus_2a, build_witness_25_11
from minordensity.graph_core import (Graph, complete_bipartite, complete_graph, cycle_graph, diamond,
                                     disjoint_union, path_graph, star_graph, t_density)
from minordensity.minor_engine import (MINOR_BALANCED, STRICTLY_MINOR_BALANCED, MinorCertificate, MinorOp, Mode,
                                       apply_minor_op, apply_ops, balance_check, balanced_from_profile,
                                       contract_edge, delete_edge, delete_vertex, densest_minor, extend_graph,
                                       in_ex_class, is_minor, minor_profile, validate_certificate)


def subdivided_k4():
    return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])


# --- naive oracle: the full minor closure, edge deletions included ----------------------

def _one_step(g: Graph, with_edge_deletion: bool):
    if g.n >= 2:
        for v in range(g.n):
            yield delete_vertex(g, v)
    for u, v in g.edges():
        yield contract_edge(g, u, v)
        if with_edge_deletion:
            yield delete_edge(g, u, v)


def closure(g: Graph, with_edge_deletion: bool = True) -> dict:
    """Canonical form -> graph for every proper minor of g."""
    seen = {}
    todo = [g]
    root = canonical_form(g)
    while todo:
        cur = todo.pop()
        for h in _one_step(cur, with_edge_deletion):
            key = canonical_form(h)
            if key not in seen and key != root:
                seen[key] = h
                todo.append(h)
    return seen


@lru_cache(maxsize=None)
def oracle_profile(g: Graph, with_edge_deletion: bool = True) -> dict:
    prof = {}
    for h in closure(g, with_edge_deletion).values():
        prof[h.n] = max(prof.get(h.n, -1), h.num_edges)
    return prof


def oracle_balanced(g: Graph, mode: Mode) -> bool:
    t = mode.density_index
    own = t_density(g, t)
    if mode.t is not None and own <= 0:
        return False
    for v, e in oracle_profile(g).items():
        other = t_density(Graph(v, []), t) if e == 0 else _counts(v, e, t)
        if other > own or (mode.strict and other == own):
            return False
    return True


def _counts(v, e, t):
    base = t * (t - 1) // 2
    return Fraction(e - base, v - t) if e > base else Fraction(0)


SMALL = [g for n in range(1, 7) for g in atlas(n)]
MODES = [Mode(False, None), Mode(True, None), Mode(False, 0), Mode(False, 1), Mode(True, 1),
         Mode(False, 2), Mode(True, 2)]


def test_densest_minor_matches_oracle():
    for g in SMALL:
        best = max([Fraction(g.num_edges, g.n)] +
                   [Fraction(h.num_edges, h.n) for h in closure(g).values()])
        _, value = densest_minor(g)
        assert value == best, g


def test_edge_deletion_elision_is_sound():
    for g in SMALL:
        full, induced = oracle_profile(g, True), oracle_profile(g, False)
        # edge deletions only add vertex counts that the induced closure misses entirely
        assert set(induced) <= set(full)
        assert all(full[v] >= induced[v] for v in induced)
        assert all(full[v] == induced[v] for v in induced if v < g.n)
        own = Fraction(g.num_edges, g.n)
        assert max([own] + [Fraction(e, v) for v, e in full.items()]) == \
            max([own] + [Fraction(e, v) for v, e in induced.items()])
        assert minor_profile(g) == induced


def test_balance_modes_match_oracle():
    for g in SMALL:
        prof = minor_profile(g)
        for mode in MODES:
            expected = oracle_balanced(g, mode)
            assert balance_check(g, mode).verdict == expected, (g, mode)
            assert balanced_from_profile(g, prof, mode) == expected


# --- operations ----------------------------------------------------------------------

def test_operation_examples():
    assert are_isomorphic(apply_minor_op(complete_graph(3), MinorOp("contract_edge", 0, 1)), complete_graph(2))
    d = diamond()
    low = [v for v in range(4) if d.degree(v) == 2][0]
    assert are_isomorphic(apply_minor_op(d, MinorOp("delete_vertex", low)), complete_graph(3))
    g = subdivided_k4()
    assert are_isomorphic(apply_minor_op(g, MinorOp("contract_edge", 2, 4)), complete_graph(4))
    assert apply_minor_op(g, MinorOp("delete_edge", 0, 1)).num_edges == 6


def test_operation_errors():
    g = path_graph(3)
    with pytest.raises(DomainError):
        apply_minor_op(g, MinorOp("contract_edge", 0, 2))
    with pytest.raises(DomainError):
        apply_minor_op(g, MinorOp("delete_vertex", 5))
    with pytest.raises(DomainError):
        apply_minor_op(g, MinorOp("delete_edge", 0, 2))


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_contraction_discards_loops_and_parallels(g):
    for u, v in g.edges()[:3]:
        h = contract_edge(g, u, v)
        assert h.n == g.n - 1
        common = len(set(g.neighbors(u)) & set(g.neighbors(v)))
        assert h.num_edges == g.num_edges - 1 - common


# --- densest minor and balance examples ------------------------------------------------

def test_densest_minor_examples():
    h, value = densest_minor(subdivided_k4())
    assert value == Fraction(3, 2) and are_isomorphic(h, complete_graph(4))
    h, value = densest_minor(complete_graph(5))
    assert value == 2 and are_isomorphic(h, complete_graph(5))
    h, value = densest_minor(path_graph(4))
    assert value == Fraction(3, 4) and are_isomorphic(h, path_graph(4))


def test_densest_minor_prefers_fewer_vertices():
    # K3 and C4-free cycles tie at density 1; the triangle has fewer vertices
    h, value = densest_minor(cycle_graph(6))
    assert value == 1 and h.n == 3


def test_balance_examples():
    assert balance_check(complete_graph(5), STRICTLY_MINOR_BALANCED).verdict
    rep = balance_check(subdivided_k4(), MINOR_BALANCED)
    assert not rep.verdict
    assert rep.counterexample.value > Fraction(7, 5)
    assert balance_check(build_gkm(2, 7), MINOR_BALANCED).verdict


def two_trees(max_n):
    """All 2-trees up to max_n vertices, built by stacking vertices on edges."""
    out = {canonical_form(complete_graph(2)): complete_graph(2)}
    frontier = list(out.values())
    while frontier:
        nxt = []
        for g in frontier:
            if g.n == max_n:
                continue
            for u, v in g.edges():
                h = Graph(g.n + 1, g.edges() + [(u, g.n), (v, g.n)])
                key = canonical_form(h)
                if key not in out:
                    out[key] = h
                    nxt.append(h)
        frontier = nxt
    return list(out.values())


def test_two_trees_are_strictly_balanced():
    trees = two_trees(7)
    assert len(trees) > 10
    for g in trees:
        assert balance_check(g, STRICTLY_MINOR_BALANCED).verdict


def test_counterexample_replays():
    for g in [subdivided_k4(), Graph(5, complete_graph(4).edges() + [(3, 4)]), disjoint_union(complete_graph(4), path_graph(3))]:
        rep = balance_check(g, STRICTLY_MINOR_BALANCED)
        assert not rep.verdict
        c = rep.counterexample
        assert are_isomorphic(apply_ops(g, c.ops), c.minor)
        assert c.ops
        assert c.value >= rep.value


def test_t_mode_requires_positive_density():
    rep = balance_check(complete_graph(3), Mode(False, 3))
    assert not rep.verdict and rep.counterexample.ops == ()


def test_mode_names_round_trip():
    for mode in MODES + [Mode(True, 5)]:
        assert Mode.parse(mode.name) == mode
    with pytest.raises(DomainError):
        Mode.parse("balanced")


def test_jobs_do_not_change_reports():
    cases = [(build_witness_25_11(), STRICTLY_MINOR_BALANCED),
             (build_fan_cliques(3, 1), Mode(True, 1)),
             (subdivided_k4(), MINOR_BALANCED),
             (disjoint_union(complete_graph(4), complete_graph(4)), STRICTLY_MINOR_BALANCED)]
    for g, mode in cases:
        one = balance_check(g, mode, jobs=1)
        two = balance_check(g, mode, jobs=2)
        assert one == two


def test_small_memo_gives_same_verdict():
    g = build_k_plus_2a(5)
    assert balance_check(g, STRICTLY_MINOR_BALANCED, memo_size=4).verdict
    assert balance_check(subdivided_k4(), MINOR_BALANCED, memo_size=1).verdict is False


def test_budget_is_an_error_not_a_verdict():
    with pytest.raises(BudgetExceeded):
        balance_check(build_witness_25_11(), STRICTLY_MINOR_BALANCED, budget=3)
    with pytest.raises(BudgetExceeded):
        densest_minor(build_gkm(2, 7), budget=3)


# --- t-density identities -------------------------------------------------------------

@settings(max_examples=500, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_extension_adds_one_to_positive_t_density(g):
    h = extend_graph(g)
    assert (h.n, h.num_edges) == (g.n + 1, g.num_edges + g.n)
    for t in (0, 1, 2):
        if t_density(g, t) > 0:
            assert t_density(h, t + 1) == t_density(g, t) + 1


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_one_density_exceeds_density_when_edges_exist(g):
    if g.num_edges:
        assert t_density(g, 1) > t_density(g, 0)


# --- minor containment ------------------------------------------------------------------

def _check(h, g):
    cert = is_minor(h, g)
    if cert is not None:
        assert validate_certificate(h, g, cert)
    return cert


def test_containment_examples():
    assert _check(complete_graph(4), complete_graph(5)) is not None
    assert _check(complete_graph(4), star_graph(6)) is None
    assert _check(complete_graph(4), path_graph(7)) is None
    assert _check(complete_graph(4), build_fan_cliques(1, 1)) is not None
    assert _check(complete_graph(3), cycle_graph(5)) is not None
    assert _check(complete_graph(5), complete_graph(4)) is None


def test_containment_matches_closure():
    gs = [g for n in range(1, 6) for g in atlas(n)]
    for g in gs:
        minors = set(closure(g)) | {canonical_form(g)}
        for h in gs:
            if h.n > g.n:
                continue
            assert (_check(h, g) is not None) == (canonical_form(h) in minors), (h, g)


def test_certificate_validation_rejects_bad_certificates():
    h, g = complete_graph(3), cycle_graph(5)
    cert = is_minor(h, g)
    sets = list(cert.branch_sets)
    overlapping = MinorCertificate(tuple([sets[0] | sets[1]] + sets[1:]), cert.edge_witnesses)
    assert not validate_certificate(h, g, overlapping)
    split = MinorCertificate((frozenset({0, 2}), frozenset({1}), frozenset({3, 4})), {})
    assert not validate_certificate(h, g, split)


def test_excluded_minor_classes():
    assert not in_ex_class(cycle_graph(5), [complete_graph(3)])
    assert in_ex_class(complete_graph(4), [complete_graph(5), complete_bipartite(3, 3)])
    assert not in_ex_class(complete_graph(5), [complete_graph(5), complete_bipartite(3, 3)])
    forbidden = [cycle_graph(3), star_graph(3), path_graph(4)]
    for parts in ([1], [2, 3], [3, 3, 1], [2, 2, 2]):
        forest = Graph(0)
        for p in parts:
            forest = disjoint_union(forest, path_graph(p))
        assert in_ex_class(forest, forbidden)
    with pytest.raises(DomainError):
        in_ex_class(complete_graph(3), [])
