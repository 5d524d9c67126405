"""Simple undirected graphs on at most 64 vertices, plus exact density queries.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
intersections and degree counts are single machine-word operations for the
sizes we care about.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CapacityError, DomainError

MAX_VERTICES = 64

# Densities are exact fractions throughout; the stdlib type is normalised on
# construction and its integers are unbounded, so nothing can overflow.
Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal into an exact fraction."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc
    if "." in text or "e" in text.lower():
        raise DomainError(f"decimal notation is not exact enough: {text!r}")
    return value


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    >>> Graph(3, [(0, 1), (1, 2)]).num_edges
    2
    """

    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._n = n
        self._rows = tuple(rows)
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        """Build from adjacency bitmasks; the caller guarantees symmetry."""
        rows = tuple(rows)
        if len(rows) > MAX_VERTICES:
            raise CapacityError(f"{len(rows)} vertices exceeds capacity {MAX_VERTICES}")
        g = cls.__new__(cls)
        g._n = len(rows)
        g._rows = rows
        g._m = sum(r.bit_count() for r in rows) // 2
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in _bits(self._rows[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled in the given vertex order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for u in _bits(self._rows[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph.from_rows(rows)

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self._n
        for v, r in enumerate(self._rows):
            nr = 0
            for u in _bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph.from_rows(rows)

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        return len(self.components()) == 1

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._rows[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def __eq__(self, other):
        return isinstance(other, Graph) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        from .graph6 import emit_graph6

        return f"Graph({emit_graph6(self)!r}, n={self._n}, e={self._m})"


# --- named graphs -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def diamond() -> Graph:
    """K4 minus an edge; vertices 0 and 1 carry degree 3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    for g in graphs:
        off = len(rows)
        rows.extend(r << off for r in g.rows)
    return Graph.from_rows(rows)


# --- density ----------------------------------------------------------------

def density(g: Graph) -> Fraction:
    """Edges per vertex, exactly."""
    if g.n == 0:
        raise DomainError("density of the empty graph is undefined")
    return Fraction(g.num_edges, g.n)


def t_density(g: Graph, t: int) -> Fraction:
    """``(e - C(t,2)) / (v - t)`` when ``e > C(t,2)``, and 0 otherwise."""
    if t < 0:
        raise DomainError("t must be non-negative")
    return t_density_counts(g.n, g.num_edges, t)


def t_density_counts(v: int, e: int, t: int) -> Fraction:
    base = t * (t - 1) // 2
    if e <= base:
        return Fraction(0)
    # e > C(t,2) forces v >= t+1 for a simple graph
    return Fraction(e - base, v - t)


# --- structure --------------------------------------------------------------

def connectivity(g: Graph) -> int:
    """Vertex connectivity; K_n gives n-1, K_1 and disconnected graphs give 0."""
    n = g.n
    if n == 0:
        raise DomainError("connectivity of the empty graph is undefined")
    if n == 1 or not g.is_connected():
        return 0
    rows = g.rows
    best = n - 1
    # Menger: minimum over non-adjacent pairs of the local vertex connectivity.
    for i in range(n):
        for j in range(i + 1, n):
            if not rows[i] >> j & 1:
                best = min(best, _local_connectivity(rows, i, j, best))
    return best


def _local_connectivity(rows: tuple[int, ...], s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths, stopping at ``cap``."""
    n = len(rows)
    # split vertex v into v_in = 2v, v_out = 2v+1 with unit capacity
    flow: dict[tuple[int, int], int] = {}

    def residual(a: int, b: int) -> int:
        return _capacity(rows, a, b, s, t) - flow.get((a, b), 0) + flow.get((b, a), 0)

    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        parent = {source: None}
        queue = [source]
        found = False
        while queue and not found:
            nxt = []
            for a in queue:
                for b in _arcs(rows, a, n):
                    if b not in parent and residual(a, b) > 0:
                        parent[b] = a
                        if b == sink:
                            found = True
                            break
                        nxt.append(b)
                if found:
                    break
            queue = nxt
        if not found:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            back = flow.get((b, a), 0)
            if back:
                flow[(b, a)] = back - 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        total += 1
    return total


def _capacity(rows, a, b, s, t) -> int:
    va, oa = divmod(a, 2)
    vb, ob = divmod(b, 2)
    if va == vb and oa == 0 and ob == 1:
        return 1
    if oa == 1 and ob == 0 and va != vb and rows[va] >> vb & 1:
        return 1
    return 0


def _arcs(rows, a, n):
    v, out = divmod(a, 2)
    if out:
        for u in _bits(rows[v]):
            yield 2 * u
        yield 2 * v
    else:
        yield 2 * v + 1
        for u in _bits(rows[v]):
            yield 2 * u + 1


def blocks(g: Graph) -> list[frozenset[int]]:
    """Maximal 2-connected subgraphs, bridges and isolated vertices, as vertex sets.

    Ordered by smallest member for determinism.
    """
    n = g.n
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    out: list[frozenset[int]] = []
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if rows[root] == 0:
            disc[root] = counter
            counter += 1
            out.append(frozenset([root]))
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(_bits(rows[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(_bits(rows[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (parent, v):
                        break
                out.append(frozenset(comp))
    out.sort(key=lambda s: (min(s), len(s)))
    return out


def clique_number(g: Graph) -> int:
    """Size of a largest complete subgraph (branch and bound over bitmasks)."""
    if g.n == 0:
        raise DomainError("clique number of the empty graph is undefined")
    rows = g.rows
    best = 1

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & rows[v])

    grow(0, (1 << g.n) - 1)
    return best
