"""Explicit graph families with closed-form vertex, edge and density counts."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .errors import CapacityError, DomainError
from .graph_core import MAX_VERTICES, Graph, bowtie, complete_graph, disjoint_union, path_graph
from .minor_engine import extend_graph


def _check_size(n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityError(f"construction needs {n} vertices; capacity is {MAX_VERTICES}")


# --- the Y-side parameters of G_k(m) ---------------------------------------------

def gkm_n(k: int) -> int:
    """Size of the independent side Y in G_k(m)."""
    return k * (k + 1) + 2


def n1_delta1(k: int) -> tuple[int, int]:
    """Largest m <= n with 3 | (m - n/2), and n minus it."""
    n = gkm_n(k)
    m = n
    while (m - n // 2) % 3:
        m -= 1
    return m, n - m


def n2_delta2(k: int) -> tuple[int, int]:
    """Largest multiple of 3 that is <= n, and n minus it."""
    n = gkm_n(k)
    n2 = n - n % 3
    return n2, n - n2


def deltas(k: int) -> tuple[int, int]:
    _, d1 = n1_delta1(k)
    _, d2 = n2_delta2(k)
    if d1 + d2 != 3:
        raise AssertionError(f"delta identity fails at k={k}: {d1} + {d2} != 3")
    return d1, d2


def a_k(k: int) -> Fraction:
    return k - Fraction(1, 2) + Fraction(k + 2, 2 * (k * k + 2 * k + 2))


def b_k(k: int) -> Fraction:
    d1, _ = deltas(k)
    return k + Fraction(1, 2) - Fraction(k - 2 + 2 * d1, 2 * (k + gkm_n(k)))


def c_k(k: int) -> Fraction:
    """Lower bound for the density of F_k(n2 + 4k)."""
    return k + Fraction(1, 2) + Fraction(k - 1, 2 * (k * k + 5 * k + 1))


def gkm_density(k: int, m: int) -> Fraction:
    """Density of G_k(m); the same linear formula holds across the whole range of m."""
    return k - Fraction(1, 2) + Fraction(k + 2 + 2 * m, 2 * (k * k + 2 * k + 2))


def fkm_density(k: int, m: int) -> Fraction:
    return k + Fraction(1, 2) + Fraction(m - k * k - 2 * k, 2 * (k + m))


def fan_cliques_rho1(k: int, t: int) -> Fraction:
    return Fraction(5 * t + 2, 2 * t + 1) - Fraction(t + 1, (2 * t + 1) * ((k + 1) * (2 * t + 1) - 1))


def bowtie_star_density(k: int) -> Fraction:
    return 2 + Fraction(k - 2, 5 * k + 1)


# --- constructors -----------------------------------------------------------------

def build_gkm(k: int, m: int) -> Graph:
    """Clique X on k vertices joined to an independent-ish set Y of size k(k+1)+2.

    Y carries an m-edge matching, or for m above n/2 some triangles (lowest
    labels first) plus a perfect matching on the rest.
    """
    if k < 2:
        raise DomainError("G_k(m) needs k >= 2")
    n = gkm_n(k)
    if not 0 <= m <= n:
        raise DomainError(f"m must lie in [0, {n}]")
    if 2 * m > n and (m - n // 2) % 3:
        raise DomainError(f"for m > n/2 = {n // 2}, m - n/2 must be divisible by 3")
    _check_size(k + n)
    edges = list(combinations(range(k), 2))
    ys = list(range(k, k + n))
    edges += [(x, y) for x in range(k) for y in ys]
    if 2 * m <= n:
        edges += [(ys[2 * i], ys[2 * i + 1]) for i in range(m)]
    else:
        tri = 2 * (m - n // 2) // 3
        for i in range(tri):
            a, b, c = ys[3 * i: 3 * i + 3]
            edges += [(a, b), (a, c), (b, c)]
        rest = ys[3 * tri:]
        edges += [(rest[2 * i], rest[2 * i + 1]) for i in range(len(rest) // 2)]
    return Graph(k + n, edges)


def build_fkm(k: int, m: int) -> Graph:
    """m/3 cliques on k+3 vertices sharing one k-clique."""
    if k < 2:
        raise DomainError("F_k(m) needs k >= 2")
    if m < 3 or m % 3:
        raise DomainError("F_k(m) needs m >= 3 divisible by 3")
    _check_size(k + m)
    edges = list(combinations(range(k), 2))
    for j in range(m // 3):
        block = list(range(k)) + [k + 3 * j + i for i in range(3)]
        edges += [(a, b) for a, b in combinations(block, 2) if b >= k]
    return Graph(k + m, edges)


def build_k_plus_2a(a: int) -> Graph:
    """K_{2,a} with the two-vertex side joined; vertices 0,1 are that side."""
    if a < 1:
        raise DomainError("K+_{2,a} needs a >= 1")
    _check_size(a + 2)
    edges = [(0, 1)] + [(s, 2 + i) for i in range(a) for s in (0, 1)]
    return Graph(a + 2, edges)


def build_star_of_plants(k: int, m: int, t: int) -> Graph:
    """m copies of K+_{2,k-1} glued at a degree-2 vertex of each (the hub, vertex 0).

    The t extra vertices join the two high-degree vertices of the first copy.
    """
    if k < 2 or m < 1 or not 0 <= t <= k - 1:
        raise DomainError("star of plants needs k >= 2, m >= 1, 0 <= t <= k-1")
    n = m * k + 1 + t
    _check_size(n)
    edges = []
    nxt = 1
    for j in range(m):
        x, y = nxt, nxt + 1
        nxt += 2
        edges += [(x, y), (0, x), (0, y)]
        for _ in range(k - 2):
            edges += [(x, nxt), (y, nxt)]
            nxt += 1
        if j == 0:
            for _ in range(t):
                edges += [(x, nxt), (y, nxt)]
                nxt += 1
    return Graph(n, edges)


def build_fan_cliques(k: int, t: int) -> Graph:
    """The fan on a k-vertex path with t copies of K4 glued along each outer edge.

    For k = 1 the single outer edge carries 2t copies; k = 0 gives K4.
    """
    if k < 0 or t < 1:
        raise DomainError("fan of cliques needs k >= 0, t >= 1")
    if k == 0:
        return complete_graph(4)
    v = (k + 1) * (2 * t + 1)
    _check_size(v)
    hub = 0
    path = list(range(1, k + 1))
    edges = [(hub, p) for p in path] + [(path[i], path[i + 1]) for i in range(k - 1)]
    outer = [(path[i], path[i + 1]) for i in range(k - 1)] + [(hub, path[0]), (hub, path[-1])]
    nxt = k + 1
    for a, b in outer:
        for _ in range(t):
            c, d = nxt, nxt + 1
            nxt += 2
            edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
    return Graph(v, edges)


def build_bowtie_star(k: int) -> Graph:
    """k disjoint bowties plus a universal vertex (the last label)."""
    if k < 1:
        raise DomainError("bowtie star needs k >= 1")
    _check_size(5 * k + 1)
    return extend_graph(disjoint_union(*[bowtie()] * k))


def build_clique_star(h: int, t: int, m: int) -> Graph:
    """m copies of K_{h-1} all sharing a fixed set of t-1 vertices (labels 0..t-2)."""
    if not (h >= t + 1 >= 2) or m < 1:
        raise DomainError("clique star needs h >= t+1 >= 2 and m >= 1")
    core = t - 1
    size = h - t
    v = size * m + core
    _check_size(v)
    edges = list(combinations(range(core), 2))
    for j in range(m):
        block = list(range(core)) + list(range(core + j * size, core + (j + 1) * size))
        edges += [(a, b) for a, b in combinations(block, 2) if b >= core]
    return Graph(v, edges)


def build_path(t: int) -> Graph:
    if t < 1:
        raise DomainError("a path needs at least one vertex")
    return path_graph(t)


def build_witness_25_11() -> Graph:
    """C10 with the chords i,i+2 for odd i (1-based, wrapping), plus a universal vertex."""
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(i, (i + 2) % 10) for i in range(0, 10, 2)]
    return extend_graph(Graph(10, edges))


def extend(g: Graph) -> Graph:
    """Complete one-vertex extension: add a vertex adjacent to everything."""
    _check_size(g.n + 1)
    return extend_graph(g)


def _is_clique(g: Graph, vs: Sequence[int]) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def k_sum(g: Graph, h: Graph, map_g: Sequence[int], map_h: Sequence[int],
          drop: Sequence[tuple[int, int]] = ()) -> Graph:
    """Glue ``h`` onto ``g`` identifying ``map_h[i]`` with ``map_g[i]``.

    Vertices of ``g`` keep their labels; the rest of ``h`` follows in order.
    ``drop`` lists clique edges (in ``g`` labels) to remove afterwards.
    """
    if len(map_g) != len(map_h):
        raise DomainError("vertex maps differ in length")
    if len(set(map_g)) != len(map_g) or len(set(map_h)) != len(map_h):
        raise DomainError("vertex maps must be injective")
    if any(not 0 <= x < g.n for x in map_g) or any(not 0 <= x < h.n for x in map_h):
        raise DomainError("vertex map out of range")
    if not _is_clique(g, map_g) or not _is_clique(h, map_h):
        raise DomainError("glued vertex sets must induce cliques")
    clique = set(map_g)
    for a, b in drop:
        if a not in clique or b not in clique or a == b:
            raise DomainError(f"dropped edge ({a}, {b}) is not a clique edge")
    _check_size(g.n + h.n - len(map_g))
    where = dict(zip(map_h, map_g))
    nxt = g.n
    for x in range(h.n):
        if x not in where:
            where[x] = nxt
            nxt += 1
    edges = set(g.edges())
    for a, b in h.edges():
        x, y = where[a], where[b]
        edges.add((min(x, y), max(x, y)))
    for a, b in drop:
        edges.discard((min(a, b), max(a, b)))
    return Graph(nxt, sorted(edges))


def overlap_copies(g: Graph, s: Sequence[int], c: int) -> Graph:
    """``c`` copies of ``g`` identified along the clique ``s`` (which takes labels 0..|s|-1)."""
    if c < 1:
        raise DomainError("need at least one copy")
    if len(set(s)) != len(s) or any(not 0 <= x < g.n for x in s):
        raise DomainError("bad overlap set")
    if not _is_clique(g, s):
        raise DomainError("overlap set must induce a clique")
    rest = [x for x in range(g.n) if x not in set(s)]
    _check_size(len(s) + c * len(rest))
    edges = set()
    for j in range(c):
        where = {x: i for i, x in enumerate(s)}
        for i, x in enumerate(rest):
            where[x] = len(s) + j * len(rest) + i
        for a, b in g.edges():
            x, y = where[a], where[b]
            edges.add((min(x, y), max(x, y)))
    return Graph(len(s) + c * len(rest), sorted(edges))


def overlap_edge_density(v: int, e: int, c: int) -> Fraction:
    """Density of ``c`` copies of a (v, e) graph sharing one edge."""
    return Fraction(1 + c * (e - 1), 2 + c * (v - 2))


# --- specs and closed forms ----------------------------------------------------------

_ARITY = {
    "Gkm": 2, "Fkm": 2, "StarOfPlants": 3, "KPlus2": 1, "FanCliques": 2,
    "BowtieStar": 1, "CliqueStar": 3, "Path": 1, "Witness2511": 0,
}

_BUILDERS = {
    "Gkm": build_gkm, "Fkm": build_fkm, "StarOfPlants": build_star_of_plants,
    "KPlus2": build_k_plus_2a, "FanCliques": build_fan_cliques, "BowtieStar": build_bowtie_star,
    "CliqueStar": build_clique_star, "Path": build_path, "Witness2511": build_witness_25_11,
}


def resolve_kind(name: str) -> str:
    """Canonical spelling of a family name, matched case-insensitively."""
    kind = {k.lower(): k for k in _ARITY}.get(name.strip().lower())
    if kind is None:
        raise DomainError(f"unknown family {name!r}; choose from {', '.join(_ARITY)}")
    return kind


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its integer parameters, e.g. ``FamilySpec("Gkm", (2, 7))``."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise DomainError(f"unknown family {self.kind!r}")
        if len(self.params) != _ARITY[self.kind]:
            raise DomainError(f"{self.kind} takes {_ARITY[self.kind]} parameters")

    def build(self) -> Graph:
        return _BUILDERS[self.kind](*self.params)

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.params))})"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``Kind(a,b,...)``; the kind name is matched case-insensitively."""
        mt = re.fullmatch(r"\s*([A-Za-z0-9]+)\s*(?:\(([^)]*)\))?\s*", text)
        if not mt:
            raise DomainError(f"cannot parse family spec {text!r}")
        name = resolve_kind(mt.group(1))
        body = (mt.group(2) or "").strip()
        try:
            params = tuple(int(x) for x in body.split(",")) if body else ()
        except ValueError as exc:
            raise DomainError(f"non-integer parameter in {text!r}") from exc
        return cls(name, params)


@dataclass(frozen=True)
class ClosedForm:
    v: int
    e: int
    rho: Fraction
    rho1: Optional[Fraction] = None

    def __post_init__(self):
        if self.rho != Fraction(self.e, self.v):
            raise AssertionError(f"closed form density {self.rho} != {self.e}/{self.v}")
        if self.rho1 is not None and self.rho1 != Fraction(self.e, self.v - 1):
            raise AssertionError(f"closed form 1-density {self.rho1} != {self.e}/{self.v - 1}")


def _from_density(v: int, rho: Fraction) -> int:
    e = rho * v
    if e.denominator != 1:
        raise AssertionError(f"density {rho} on {v} vertices gives a fractional edge count")
    return int(e)


def closed_form(spec: FamilySpec) -> ClosedForm:
    """Vertex and edge counts from the family's formulas, without building the graph."""
    p = spec.params
    kind = spec.kind
    if kind == "Gkm":
        k, m = p
        n = gkm_n(k)
        if k < 2 or not 0 <= m <= n or (2 * m > n and (m - n // 2) % 3):
            raise DomainError("invalid G_k(m) parameters")
        v = k + gkm_n(k)
        rho = gkm_density(k, m)
        return ClosedForm(v, _from_density(v, rho), rho)
    if kind == "Fkm":
        k, m = p
        if k < 2 or m < 3 or m % 3:
            raise DomainError("invalid F_k(m) parameters")
        v = k + m
        rho = fkm_density(k, m)
        e = comb(k, 2) + m * (k + 1)
        if _from_density(v, rho) != e:
            raise AssertionError("F_k(m) closed forms disagree")
        return ClosedForm(v, e, rho)
    if kind == "StarOfPlants":
        k, m, t = p
        if k < 2 or m < 1 or not 0 <= t <= k - 1:
            raise DomainError("invalid star-of-plants parameters")
        n = m * k + 1 + t
        return ClosedForm(n, 2 * n - 2 - m, Fraction(2 * n - 2 - m, n))
    if kind == "KPlus2":
        (a,) = p
        if a < 1:
            raise DomainError("invalid K+_{2,a} parameter")
        return ClosedForm(a + 2, 2 * a + 1, Fraction(2 * a + 1, a + 2))
    if kind == "FanCliques":
        k, t = p
        if k < 0 or t < 1:
            raise DomainError("invalid fan-of-cliques parameters")
        if k == 0:
            return ClosedForm(4, 6, Fraction(3, 2), Fraction(2))
        v = (k + 1) * (2 * t + 1)
        e = (k + 1) * (5 * t + 2) - 3
        rho1 = fan_cliques_rho1(k, t)
        if rho1 != Fraction(e, v - 1):
            raise AssertionError("fan-of-cliques closed forms disagree")
        return ClosedForm(v, e, Fraction(e, v), rho1)
    if kind == "BowtieStar":
        (k,) = p
        if k < 1:
            raise DomainError("invalid bowtie-star parameter")
        v = 5 * k + 1
        rho = bowtie_star_density(k)
        e = _from_density(v, rho)
        if e != 11 * k:
            raise AssertionError("bowtie-star closed forms disagree")
        return ClosedForm(v, e, rho)
    if kind == "CliqueStar":
        h, t, m = p
        if not (h >= t + 1 >= 2) or m < 1:
            raise DomainError("invalid clique-star parameters")
        v = (h - t) * m + t - 1
        e = m * (comb(h - t, 2) + (h - t) * (t - 1)) + comb(t - 1, 2)
        return ClosedForm(v, e, Fraction(e, v))
    if kind == "Path":
        (t,) = p
        if t < 1:
            raise DomainError("invalid path length")
        return ClosedForm(t, t - 1, Fraction(t - 1, t))
    return ClosedForm(11, 25, Fraction(25, 11))
