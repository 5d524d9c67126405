"""Minor operations and exhaustive minor search.

Density questions only need *induced minors*: graphs reached from ``G`` by
vertex deletions and edge contractions.  Deleting an edge never helps.  A
minor built from the same branch sets with the deleted edge kept has the same
vertex count and at least as many edges.  The one exception is a proper
spanning subgraph of ``G`` itself, which has fewer edges than ``G`` and so
can never match or beat it.

The search is a depth-first walk over isomorphism classes of induced minors,
deduplicated through canonical labels held in an LRU memo.  Only one
representative of each automorphism orbit of vertices and edges is expanded.
"""

from __future__ import annotations

import os
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .canon import Labeling, canonical_labeling, orbit_partition
from .errors import BudgetExceeded, DomainError
from .graph_core import Graph, _bits, t_density_counts
from .graph6 import emit_graph6

DEFAULT_BUDGET = 10**8
DEFAULT_MEMO = 1 << 22


# --- elementary operations --------------------------------------------------

@dataclass(frozen=True)
class MinorOp:
    """One minor step.  ``kind`` is delete_vertex, delete_edge or contract_edge."""

    kind: str
    u: int
    v: Optional[int] = None

    def __str__(self):
        if self.kind == "delete_vertex":
            return f"delete_vertex({self.u})"
        return f"{self.kind}({self.u},{self.v})"


def _drop_bit(r: int, v: int) -> int:
    return (r & ((1 << v) - 1)) | ((r >> (v + 1)) << v)


def _delete_vertex_rows(rows: Sequence[int], v: int) -> tuple[int, ...]:
    return tuple(_drop_bit(r, v) for i, r in enumerate(rows) if i != v)


def _contract_rows(rows: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Merge ``v`` into ``u``, dropping loops and parallel edges; ``v`` disappears."""
    rows = list(rows)
    merged = (rows[u] | rows[v]) & ~((1 << u) | (1 << v))
    for w in _bits(rows[v]):
        if w != u:
            rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
    rows[u] = merged
    return _delete_vertex_rows(rows, v)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise DomainError(f"no vertex {v}")
    return Graph.from_rows(_delete_vertex_rows(g.rows, v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise DomainError(f"no edge ({u}, {v})")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph.from_rows(rows)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract ``uv``; the merged vertex takes the smaller label."""
    if not g.has_edge(u, v):
        raise DomainError(f"cannot contract non-edge ({u}, {v})")
    a, b = min(u, v), max(u, v)
    return Graph.from_rows(_contract_rows(g.rows, a, b))


def apply_minor_op(g: Graph, op: MinorOp) -> Graph:
    if op.kind == "delete_vertex":
        return delete_vertex(g, op.u)
    if op.kind == "delete_edge":
        return delete_edge(g, op.u, op.v)
    if op.kind == "contract_edge":
        return contract_edge(g, op.u, op.v)
    raise DomainError(f"unknown minor operation {op.kind!r}")


def apply_ops(g: Graph, ops: Iterable[MinorOp]) -> Graph:
    for op in ops:
        g = apply_minor_op(g, op)
    return g


def extend_graph(g: Graph) -> Graph:
    """Add a universal vertex with label ``n``."""
    n = g.n
    rows = [r | (1 << n) for r in g.rows]
    rows.append((1 << n) - 1)
    return Graph.from_rows(rows)


# --- balance modes and reports ------------------------------------------------

@dataclass(frozen=True)
class Mode:
    """Which balancedness predicate to decide.

    ``t=None`` is plain (strict) minor-balance on the ordinary density; an
    integer ``t`` uses the t-density and additionally demands it be positive.
    """

    strict: bool = False
    t: Optional[int] = None

    @property
    def name(self) -> str:
        core = "minor_balanced" if self.t is None else f"{self.t}_minor_balanced"
        return ("strictly_" + core) if self.strict else core

    @property
    def density_index(self) -> int:
        return 0 if self.t is None else self.t

    @classmethod
    def parse(cls, text: str) -> "Mode":
        s = text.strip().lower().replace("-", "_")
        strict = s.startswith("strictly_") or s.startswith("strict_")
        if strict:
            s = s.split("_", 1)[1]
        if s == "minor_balanced":
            return cls(strict, None)
        head, _, tail = s.partition("_")
        if tail == "minor_balanced" and head.isdigit():
            return cls(strict, int(head))
        raise DomainError(f"unknown balance mode {text!r}")

    def __str__(self):
        return self.name


MINOR_BALANCED = Mode(False, None)
STRICTLY_MINOR_BALANCED = Mode(True, None)


@dataclass(frozen=True)
class Counterexample:
    minor: Graph
    value: Fraction
    ops: tuple[MinorOp, ...]


@dataclass(frozen=True)
class BalanceReport:
    verdict: bool
    mode: Mode
    value: Fraction
    counterexample: Optional[Counterexample] = None
    explored: int = 0

    def __bool__(self):
        return self.verdict


# --- search -------------------------------------------------------------------

@lru_cache(maxsize=None)
def upper_bound(v: int, e: int, t: int) -> Fraction:
    """Largest t-density any minor of a (v, e) graph could have.

    A minor on ``w`` vertices has at most ``min(e, C(w,2))`` edges.
    """
    best = Fraction(0)
    base = t * (t - 1) // 2
    for w in range(t + 1, v + 1):
        edges = min(e, w * (w - 1) // 2)
        if edges > base:
            val = Fraction(edges - base, w - t)
            if val > best:
                best = val
    return best


class _Memo:
    """Set of canonical keys with least-recently-used eviction."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self.evicted = False
        self._d: OrderedDict = OrderedDict()

    def seen(self, key) -> bool:
        """Record ``key``; True if it was already present."""
        d = self._d
        if key in d:
            d.move_to_end(key)
            return True
        d[key] = None
        if len(d) > self.capacity:
            d.popitem(last=False)
            self.evicted = True
        return False

    def keys(self) -> frozenset:
        return frozenset(self._d)


def _orbit_reps(n: int, rows: Sequence[int], gens) -> tuple[list[int], list[tuple[int, int]]]:
    """One vertex and one edge from each orbit of the known automorphisms."""
    edges = [(u, w) for u in range(n) for w in _bits(rows[u] >> (u + 1) << (u + 1))]
    if not gens:
        return list(range(n)), edges
    orb = orbit_partition(n, gens)
    verts = [v for v in range(n) if orb[v] == v]
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gm in gens:
        for i, (a, b) in enumerate(edges):
            x, y = gm[a], gm[b]
            j = index[(x, y) if x < y else (y, x)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return verts, [e for i, e in enumerate(edges) if find(i) == i]


def _children(rows, lab: Labeling):
    n = len(rows)
    verts, edges = _orbit_reps(n, rows, lab.generators)
    out = []
    if n >= 2:
        for v in verts:
            out.append((MinorOp("delete_vertex", v), _delete_vertex_rows(rows, v)))
    for u, w in edges:
        out.append((MinorOp("contract_edge", u, w), _contract_rows(rows, u, w)))
    return out


def _unwind(link) -> tuple[MinorOp, ...]:
    ops = []
    while link is not None:
        op, link = link
        ops.append(op)
    return tuple(reversed(ops))


@dataclass
class _Outcome:
    found: Optional[Counterexample] = None
    best: Optional[tuple] = None  # (value, n, code, rows)
    explored: int = 0
    keys: Optional[frozenset] = None  # visited keys, when requested and nothing was evicted


def _better(cand, best) -> bool:
    if best is None:
        return True
    if cand[0] != best[0]:
        return cand[0] > best[0]
    if cand[1] != best[1]:
        return cand[1] < best[1]
    return cand[2] < best[2]


def _run(roots, *, t, threshold, inclusive, maximise, budget, memo_size, best=None,
         collect=False) -> _Outcome:
    """Depth-first search below each root.

    ``roots`` are (rows, labeling, link) triples already counted as visited.
    In existence mode stops at the first minor whose t-density is
    ``>= threshold`` (inclusive) or ``> threshold``.  In maximise mode keeps
    the densest minor, pruning subtrees that cannot reach the incumbent.
    """
    memo = _Memo(memo_size)
    out = _Outcome(best=best)
    for rows, lab, _ in roots:
        memo.seen(lab.key)
    stack = list(reversed(roots))
    explored = 0
    while stack:
        rows, lab, link = stack.pop()
        for op, child in _children(rows, lab):
            clab = canonical_labeling(Graph.from_rows(child))
            if memo.seen(clab.key):
                continue
            explored += 1
            if explored > budget:
                raise BudgetExceeded(f"minor search exceeded {budget} states", explored)
            v = len(child)
            e = sum(r.bit_count() for r in child) // 2
            value = t_density_counts(v, e, t)
            clink = (op, link)
            if maximise:
                if out.best is None or value >= out.best[0]:
                    cand = (value, v, clab.code, clab.key)
                    if _better(cand, out.best):
                        out.best = cand
                if upper_bound(v, e, t) < out.best[0]:
                    continue
            else:
                if value > threshold or (inclusive and value == threshold):
                    out.found = Counterexample(Graph.from_rows(child), value, _unwind(clink))
                    out.explored = explored
                    return out
                ub = upper_bound(v, e, t)
                if ub < threshold or (ub == threshold and not inclusive):
                    continue
            stack.append((child, clab, clink))
    out.explored = explored
    if collect and not memo.evicted:
        out.keys = memo.keys()
    return out


def _first_level(g: Graph, t: int):
    lab = canonical_labeling(g)
    seen = {lab.key}
    level = []
    for op, child in _children(g.rows, lab):
        clab = canonical_labeling(Graph.from_rows(child))
        if clab.key in seen:
            continue
        seen.add(clab.key)
        level.append((child, clab, (op, None)))
    return level


def _worker(args):
    roots, kwargs = args
    return _run(roots, **kwargs)


def _resolve(budget, jobs):
    if budget is None:
        budget = int(os.environ.get("MD_BUDGET", DEFAULT_BUDGET))
    if jobs is None:
        jobs = int(os.environ.get("MD_JOBS", 1))
    return budget, max(1, jobs)


def _parallel(level, jobs, kwargs) -> list[_Outcome]:
    """Run each first-level subtree chunk in its own process with its own memo."""
    chunks = [level[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_worker, [(c, kwargs) for c in chunks if c]))


def find_violation(
    g: Graph,
    t: int,
    threshold: Fraction,
    inclusive: bool,
    *,
    budget: Optional[int] = None,
    memo_size: int = DEFAULT_MEMO,
    jobs: Optional[int] = None,
) -> tuple[Optional[Counterexample], int]:
    """Search the proper induced minors of ``g`` for one at or above ``threshold``."""
    budget, jobs = _resolve(budget, jobs)
    level = _first_level(g, t)
    explored = len(level)
    # check the first level in order so the reported witness never depends on jobs
    for rows, lab, link in level:
        v = len(rows)
        e = sum(r.bit_count() for r in rows) // 2
        value = t_density_counts(v, e, t)
        if value > threshold or (inclusive and value == threshold):
            return Counterexample(Graph.from_rows(rows), value, _unwind(link)), explored
    kwargs = dict(t=t, threshold=threshold, inclusive=inclusive, maximise=False,
                  budget=budget, memo_size=memo_size)
    if jobs == 1 or len(level) < 2:
        out = _run(level, **kwargs)
        return out.found, explored + out.explored
    outs = _parallel(level, jobs, dict(kwargs, collect=True))
    if any(o.found is not None for o in outs):
        # the sequential search is the reference report; it stops at the first violation
        out = _run(level, **kwargs)
        return out.found, explored + out.explored
    if all(o.keys is not None for o in outs):
        # pruning here does not depend on search order, so the union of visited
        # states equals what one worker would visit
        union = frozenset().union(*(o.keys for o in outs))
        return None, explored + len(union - {lab.key for _, lab, _ in level})
    return None, explored + sum(o.explored for o in outs)


def densest_minor(
    g: Graph,
    *,
    budget: Optional[int] = None,
    memo_size: int = DEFAULT_MEMO,
    jobs: Optional[int] = None,
) -> tuple[Graph, Fraction]:
    """A densest minor of ``g`` (fewest vertices, then smallest canonical code)."""
    if g.n == 0:
        raise DomainError("the empty graph has no minors with vertices")
    budget, jobs = _resolve(budget, jobs)
    lab = canonical_labeling(g)
    best = (Fraction(g.num_edges, g.n), g.n, lab.code, lab.key)
    level = _first_level(g, 0)
    for rows, clab, _ in level:
        v = len(rows)
        cand = (Fraction(sum(r.bit_count() for r in rows) // 2, v), v, clab.code, clab.key)
        if _better(cand, best):
            best = cand
    if level and upper_bound(g.n - 1, g.num_edges, 0) >= best[0]:
        kwargs = dict(t=0, threshold=None, inclusive=False, maximise=True,
                      budget=budget, memo_size=memo_size, best=best)
        if jobs == 1 or len(level) < 2:
            outs = [_run(level, **kwargs)]
        else:
            outs = _parallel(level, jobs, kwargs)
        for o in outs:
            if _better(o.best, best):
                best = o.best
    return Graph.from_rows(best[3]), best[0]


def balance_check(
    g: Graph,
    mode: Mode = MINOR_BALANCED,
    *,
    budget: Optional[int] = None,
    memo_size: int = DEFAULT_MEMO,
    jobs: Optional[int] = None,
) -> BalanceReport:
    """Decide the balancedness predicate named by ``mode`` exhaustively."""
    if isinstance(mode, str):
        mode = Mode.parse(mode)
    if g.n == 0:
        raise DomainError("balance of the empty graph is undefined")
    t = mode.density_index
    if t < 0:
        raise DomainError("t must be non-negative")
    value = t_density_counts(g.n, g.num_edges, t)
    if mode.t is not None and value <= 0:
        return BalanceReport(False, mode, value, Counterexample(g, value, ()), 0)
    found, explored = find_violation(g, t, value, inclusive=mode.strict,
                                     budget=budget, memo_size=memo_size, jobs=jobs)
    return BalanceReport(found is None, mode, value, found, explored)


def is_minor_balanced(g: Graph, **kw) -> bool:
    return balance_check(g, MINOR_BALANCED, **kw).verdict


def is_strictly_minor_balanced(g: Graph, **kw) -> bool:
    return balance_check(g, STRICTLY_MINOR_BALANCED, **kw).verdict


def minor_profile(g: Graph, *, budget: Optional[int] = None) -> dict[int, int]:
    """For each vertex count, the most edges on a proper induced minor.

    Exhaustive and unpruned; every balance predicate on ``g`` can be read off
    this table, which makes it a cross-check for :func:`balance_check`.
    """
    budget, _ = _resolve(budget, 1)
    lab = canonical_labeling(g)
    seen = {lab.key}
    stack = [(g.rows, lab)]
    profile: dict[int, int] = {}
    while stack:
        rows, lab = stack.pop()
        for _, child in _children(rows, lab):
            clab = canonical_labeling(Graph.from_rows(child))
            if clab.key in seen:
                continue
            seen.add(clab.key)
            if len(seen) > budget:
                raise BudgetExceeded(f"profile exceeded {budget} states", len(seen))
            v = len(child)
            e = sum(r.bit_count() for r in child) // 2
            if e > profile.get(v, -1):
                profile[v] = e
            stack.append((child, clab))
    return profile


def balanced_from_profile(g: Graph, profile: dict[int, int], mode: Mode) -> bool:
    t = mode.density_index
    value = t_density_counts(g.n, g.num_edges, t)
    if mode.t is not None and value <= 0:
        return False
    for v, e in profile.items():
        other = t_density_counts(v, e, t)
        if other > value or (mode.strict and other == value):
            return False
    return True


# --- minor containment ----------------------------------------------------------

@dataclass(frozen=True)
class MinorCertificate:
    """Branch set in ``G`` for each vertex of ``H`` plus a G-edge per H-edge."""

    branch_sets: tuple[frozenset, ...]
    edge_witnesses: dict = field(hash=False, compare=False)


def validate_certificate(h: Graph, g: Graph, cert: MinorCertificate) -> bool:
    """Independent check that ``cert`` exhibits ``h`` as a minor of ``g``."""
    sets = cert.branch_sets
    if len(sets) != h.n:
        return False
    used: set[int] = set()
    for s in sets:
        if not s or used & s or any(not 0 <= x < g.n for x in s):
            return False
        used |= s
        if not g.induced(sorted(s)).is_connected():
            return False
    for a, b in h.edges():
        wit = cert.edge_witnesses.get((a, b))
        if wit is None:
            return False
        x, y = wit
        if x not in sets[a] or y not in sets[b] or not g.has_edge(x, y):
            return False
    return True


def _monomorphism(h: Graph, s: Graph) -> Optional[list[int]]:
    """Injective map V(h) -> V(s) preserving edges, or None."""
    if h.n > s.n or h.num_edges > s.num_edges:
        return None
    hr, sr = h.rows, s.rows
    hdeg = h.degrees()
    sdeg = s.degrees()
    # place high-degree vertices first, preferring ones adjacent to already-placed ones
    order: list[int] = []
    remaining = set(range(h.n))
    while remaining:
        placed = 0
        for x in order:
            placed |= 1 << x
        v = max(remaining, key=lambda x: ((hr[x] & placed).bit_count(), hdeg[x], -x))
        order.append(v)
        remaining.discard(v)
    image = [-1] * h.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        need = 0
        for y in _bits(hr[x]):
            if image[y] >= 0:
                need |= 1 << image[y]
        for c in range(s.n):
            if used >> c & 1 or sdeg[c] < hdeg[x] or (sr[c] & need) != need:
                continue
            image[x] = c
            if extend(i + 1, used | (1 << c)):
                return True
            image[x] = -1
        return False

    return image if extend(0, 0) else None


def is_minor(h: Graph, g: Graph, *, budget: Optional[int] = None,
             memo_size: int = DEFAULT_MEMO) -> Optional[MinorCertificate]:
    """A certificate that ``h`` is a minor of ``g``, or None."""
    if h.n < 1:
        raise DomainError("the pattern graph needs at least one vertex")
    budget, _ = _resolve(budget, 1)
    if h.n > g.n or h.num_edges > g.num_edges:
        return None

    def certify(state: Graph, branch: tuple[int, ...], image: list[int]) -> MinorCertificate:
        sets = tuple(frozenset(_bits(branch[image[a]])) for a in range(h.n))
        wits = {}
        for a, b in h.edges():
            wits[(a, b)] = next((x, y) for x in sorted(sets[a]) for y in sorted(sets[b]) if g.has_edge(x, y))
        return MinorCertificate(sets, wits)

    root_branch = tuple(1 << v for v in range(g.n))
    image = _monomorphism(h, g)
    if image is not None:
        return certify(g, root_branch, image)
    memo = _Memo(memo_size)
    lab = canonical_labeling(g)
    memo.seen(lab.key)
    stack = [(g.rows, root_branch, lab)]
    explored = 0
    while stack:
        rows, branch, lab = stack.pop()
        for op, child in _children(rows, lab):
            if len(child) < h.n:
                continue
            e = sum(r.bit_count() for r in child) // 2
            if e < h.num_edges:
                continue
            if op.kind == "delete_vertex":
                cbranch = branch[:op.u] + branch[op.u + 1:]
            else:
                u, w = op.u, op.v
                merged = list(branch)
                merged[u] = branch[u] | branch[w]
                del merged[w]
                cbranch = tuple(merged)
            cgraph = Graph.from_rows(child)
            clab = canonical_labeling(cgraph)
            if memo.seen(clab.key):
                continue
            explored += 1
            if explored > budget:
                raise BudgetExceeded(f"minor containment search exceeded {budget} states", explored)
            if len(child) == h.n:
                image = _monomorphism(h, cgraph)
                if image is not None:
                    return certify(cgraph, cbranch, image)
                continue
            stack.append((child, cbranch, clab))
    return None


def in_ex_class(g: Graph, excluded: Sequence[Graph], **kw) -> bool:
    """True iff no graph in ``excluded`` is a minor of ``g``."""
    if not excluded:
        raise DomainError("need at least one excluded minor")
    return all(is_minor(h, g, **kw) is None for h in excluded)


def describe_counterexample(c: Counterexample) -> str:
    ops = " ".join(str(op) for op in c.ops) or "(none)"
    return f"{emit_graph6(c.minor)} value={c.value} ops={ops}"
