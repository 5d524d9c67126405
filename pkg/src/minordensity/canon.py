"""Canonical labelling by colour refinement and individualisation.

The search tree is the usual one: refine to an equitable ordered partition,
individualise each vertex of the first non-singleton cell in turn, recurse.
Every leaf is a discrete partition, i.e. a relabelling; the canonical form is
the smallest relabelled adjacency among the leaves.  Leaves that relabel to
the same graph expose automorphisms, which prune siblings lying in a common
orbit of the pointwise stabiliser of the current path.

Exactness does not depend on the pruning: the leaf set is a labelling
invariant, and orbit pruning only removes subtrees whose leaves repeat codes
already seen.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, _bits
from .graph6 import emit_graph6


@dataclass(frozen=True)
class Labeling:
    """Result of canonicalising one graph.

    ``perm[v]`` is the canonical position of vertex ``v``; ``generators``
    are automorphisms (as vertex maps) found during the search.
    """

    perm: tuple[int, ...]
    key: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def code(self) -> bytes:
        return emit_graph6(Graph.from_rows(self.key)).encode("ascii")

    def orbits(self) -> list[int]:
        """Orbit representative (smallest member) for every vertex."""
        return orbit_partition(len(self.perm), self.generators)


def orbit_partition(n: int, generators) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def _refine(rows, cells):
    """Coarsest equitable refinement of an ordered partition (list of lists)."""
    n = len(rows)
    while len(cells) < n:
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            new = []
            split = False
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for v in c:
                    groups.setdefault((rows[v] & mask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(c)
                else:
                    split = True
                    for k in sorted(groups):
                        new.append(groups[k])
            if split:
                cells = new
                break
        else:
            return cells
    return cells


def _relabel_key(rows, order):
    """Adjacency rows of the graph relabelled so ``order[i]`` becomes ``i``."""
    pos = [0] * len(rows)
    for i, v in enumerate(order):
        pos[v] = i
    key = []
    for v in order:
        r = 0
        for u in _bits(rows[v]):
            r |= 1 << pos[u]
        key.append(r)
    return tuple(key), pos


def canonical_labeling(g: Graph) -> Labeling:
    rows = g.rows
    n = g.n
    if n == 0:
        return Labeling((), (), ())
    root = _refine(rows, [list(range(n))])
    first_key = None
    first_pos = None
    best_key = None
    best_pos = None
    gens: list[tuple[int, ...]] = []

    def note_automorphism(pos_a, pos_b):
        inv_a = [0] * n
        for v, p in enumerate(pos_a):
            inv_a[p] = v
        gamma = tuple(inv_a[pos_b[v]] for v in range(n))
        if any(gamma[v] != v for v in range(n)):
            gens.append(gamma)

    first_path: list[int] = []

    def search(cells, path):
        """Returns a depth to unwind to, or None to carry on normally."""
        nonlocal first_key, first_pos, best_key, best_pos, first_path
        if len(cells) == n:
            key, pos = _relabel_key(rows, [c[0] for c in cells])
            if first_key is None:
                first_key, first_pos, first_path = key, pos, list(path)
                best_key, best_pos = key, pos
                return None
            if key == first_key:
                note_automorphism(first_pos, pos)
                # this subtree mirrors the first path's subtree from the point they diverge
                return next(i for i, (a, b) in enumerate(zip(path, first_path)) if a != b)
            if key == best_key:
                note_automorphism(best_pos, pos)
            elif key < best_key:
                best_key, best_pos = key, pos
            return None
        depth = len(path)
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        done: list[int] = []
        for v in target:
            if done:
                fixing = [gm for gm in gens if all(gm[p] == p for p in path)]
                if fixing:
                    orb = orbit_partition(n, fixing)
                    if any(orb[v] == orb[w] for w in done):
                        continue
            rest = [w for w in target if w != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            back = search(_refine(rows, child), path + [v])
            done.append(v)
            if back is not None and back < depth:
                return back
        return None

    search(root, [])
    return Labeling(tuple(best_pos), best_key, tuple(gens))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant code: graph6 bytes of the canonical relabelling.

    Codes compare as bytes, giving a total order on isomorphism classes.
    """
    return canonical_labeling(g).code


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_rows(canonical_labeling(g).key)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    return canonical_labeling(a).key == canonical_labeling(b).key
