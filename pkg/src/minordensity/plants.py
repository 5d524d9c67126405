"""2-plants: graphs grown from an edge by adding vertices with at least two earlier neighbours.

Recognition is a closure: start from an edge and keep absorbing any vertex
with two absorbed neighbours.  The absorbed set does not depend on the order
of absorption, so one pass per starting edge decides plant-hood.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import BudgetExceeded, DomainError
from .graph_core import Graph, _bits

NOT_PLANT = "NotPlant"
PLANT_EQ = "PlantEq"
PLANT_PLUS = "PlantPlus"

DEFAULT_SUBSET_BUDGET = 5_000_000
MAX_PLUS_SUBSET = 12


@dataclass(frozen=True)
class PlantCertificate:
    ordering: tuple[int, ...]
    back_degrees: tuple[int, ...]  # entry i is the back-degree of ordering[i + 2]
    classification: str


@dataclass(frozen=True)
class PlantResult:
    status: str
    certificate: Optional[PlantCertificate] = None

    @property
    def is_plant(self) -> bool:
        return self.status != NOT_PLANT


def closure(rows, start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` by two-neighbour absorption."""
    absorbed = start
    while True:
        grow = 0
        for w in _bits(within & ~absorbed):
            if (rows[w] & absorbed).bit_count() >= 2:
                grow |= 1 << w
        if not grow:
            return absorbed
        absorbed |= grow


def _ordering(rows, a: int, b: int, within: int) -> Optional[tuple[list[int], list[int]]]:
    """Absorption order from edge ab, or None if it stalls before covering ``within``."""
    order = [a, b]
    absorbed = (1 << a) | (1 << b)
    backs = []
    progress = True
    while absorbed != within and progress:
        progress = False
        for w in _bits(within & ~absorbed):
            d = (rows[w] & absorbed).bit_count()
            if d >= 2:
                order.append(w)
                backs.append(d)
                absorbed |= 1 << w
                progress = True
    return (order, backs) if absorbed == within else None


def is_two_plant_on(rows, within: int) -> bool:
    """Is the subgraph induced on the vertex mask ``within`` a 2-plant?"""
    for a in _bits(within):
        for b in _bits(rows[a] & within):
            if b > a and closure(rows, (1 << a) | (1 << b), within) == within:
                return True
    return False


def plant_classify(g: Graph) -> PlantResult:
    if g.n < 2:
        raise DomainError("plant recognition needs at least two vertices")
    rows = g.rows
    full = (1 << g.n) - 1
    for a, b in g.edges():
        found = _ordering(rows, a, b, full)
        if found is None:
            continue
        order, backs = found
        kind = PLANT_EQ if g.num_edges == 2 * g.n - 3 else PLANT_PLUS
        return PlantResult(kind, PlantCertificate(tuple(order), tuple(backs), kind))
    return PlantResult(NOT_PLANT)


def validate_plant_certificate(g: Graph, cert: PlantCertificate) -> bool:
    order = cert.ordering
    if sorted(order) != list(range(g.n)) or not g.has_edge(order[0], order[1]):
        return False
    seen = (1 << order[0]) | (1 << order[1])
    backs = []
    for v in order[2:]:
        d = (g.rows[v] & seen).bit_count()
        if d < 2:
            return False
        backs.append(d)
        seen |= 1 << v
    if tuple(backs) != cert.back_degrees:
        return False
    expected = PLANT_EQ if all(d == 2 for d in backs) else PLANT_PLUS
    return cert.classification == expected


def edge_plant_cover(g: Graph, k: int, *, budget: int = DEFAULT_SUBSET_BUDGET) -> dict[tuple[int, int], bool]:
    """For each edge, whether it lies in a (k+1)-vertex 2=-plant or in some 2+-plant of ``g``.

    A subset U spans a plant subgraph through a given edge exactly when the
    induced graph on U is itself a 2-plant, because the edge can always be
    chosen among the back-edges of its later endpoint.  So both tests reduce
    to closures on induced subgraphs.  The 2+ branch looks at subsets of at
    most 12 vertices.
    """
    if g.n < 2:
        raise DomainError("edge cover needs at least two vertices")
    if k < 2:
        raise DomainError("k must be at least 2")
    return dict(_cover(g, k, budget, stop_early=False))


def edges_all_covered(g: Graph, k: int, *, budget: int = DEFAULT_SUBSET_BUDGET) -> bool:
    """True iff every edge passes the cover test; stops at the first failure."""
    if g.n < 2:
        raise DomainError("edge cover needs at least two vertices")
    if k < 2:
        raise DomainError("k must be at least 2")
    return all(hit for _, hit in _cover(g, k, budget, stop_early=True))


def _cover(g: Graph, k: int, budget: int, stop_early: bool):
    rows = g.rows
    n = g.n
    spent = 0
    known: dict[int, bool] = {}

    def plant(mask: int) -> bool:
        nonlocal spent
        spent += 1
        if spent > budget:
            raise BudgetExceeded(f"edge cover examined more than {budget} vertex subsets", spent)
        if mask not in known:
            known[mask] = is_two_plant_on(rows, mask)
        return known[mask]

    def edges_in(mask: int) -> int:
        return sum((rows[w] & mask).bit_count() for w in _bits(mask)) // 2

    for u, v in g.edges():
        # every vertex of a plant on three or more vertices has degree at least 2
        hit = False
        if rows[u].bit_count() >= 2 and rows[v].bit_count() >= 2:
            others = [w for w in range(n) if w not in (u, v)]
            base = (1 << u) | (1 << v)
            if k + 1 <= n:
                for extra in combinations(others, k - 1):
                    mask = base
                    for w in extra:
                        mask |= 1 << w
                    if plant(mask):
                        hit = True
                        break
            if not hit:
                for size in range(4, min(n, MAX_PLUS_SUBSET) + 1):
                    for extra in combinations(others, size - 2):
                        mask = base
                        for w in extra:
                            mask |= 1 << w
                        if edges_in(mask) > 2 * size - 3 and plant(mask):
                            hit = True
                            break
                    if hit:
                        break
        yield (u, v), hit
        if stop_early and not hit:
            return


def plant_edge_bound(n: int, k: int, t: int) -> int:
    """Fewest edges a connected n-vertex graph can have when every edge is plant-covered."""
    if n < 1 or k < 2 or not 0 <= t <= k - 1:
        raise DomainError("need n >= 1, k >= 2, 0 <= t <= k-1")
    if (n - 1 - t) % k or n - 1 - t < 0:
        raise DomainError(f"n={n} is not of the form m*{k} + 1 + {t}")
    m = (n - 1 - t) // k
    bound = 2 * n - 2 - m
    other = (2 - Fraction(1, k)) * n + Fraction(t + 1, k) - 2
    if other != bound:
        raise AssertionError("the two forms of the edge bound disagree")
    return bound
