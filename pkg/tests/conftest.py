import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from minordensity.graph_core import Graph


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically least sorted edge list over all relabellings."""
    edges = g.edges()
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return (g.n, best)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = list(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(pos[a], pos[b]) for a, b in h.edges()])


def atlas(n: int) -> list[Graph]:
    """Every graph on n <= 7 vertices, one per isomorphism class, from networkx's atlas."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def relabelled(draw, g):
    perm = draw(st.permutations(range(g.n)))
    return g.relabel(list(perm))


@pytest.fixture(scope="session")
def small_graphs():
    return {n: atlas(n) for n in range(1, 8)}
