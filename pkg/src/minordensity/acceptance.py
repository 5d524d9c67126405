"""Acceptance checks shared by ``minordensity verify`` and the test suite.

Each check returns a :class:`Check`; the slow strict-balance runs on 11-vertex
graphs only happen with ``deep=True``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction as F
from itertools import combinations, permutations
from typing import Callable

from .canon import are_isomorphic, canonical_form
from .catalog import IN_B, NOT_IN_B, enumerate_B, lookup, membership, witness
from .families import (b_k, build_bowtie_star, build_fan_cliques, build_fkm, build_gkm,
                       build_witness_25_11, bowtie_star_density, closed_form,
                       FamilySpec, fkm_density, gkm_n, n2_delta2)
from .graph_core import Graph, blocks, bowtie, density, diamond, t_density
from .minor_engine import (MINOR_BALANCED, STRICTLY_MINOR_BALANCED, Mode, balance_check,
                           contract_edge, delete_edge, delete_vertex, densest_minor, extend_graph)
from .plants import NOT_PLANT, PLANT_EQ, PLANT_PLUS, plant_classify
from .searchlab import crosscheck, enumerate_graphs, sweep_connectivity, sweep_density_order


@dataclass
class Check:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:>2}. {self.title} ({self.seconds:.2f}s / {self.limit:g}s) {self.detail}"


class _Fail(Exception):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


def _run(number: int, title: str, limit: float, body: Callable[[], str]) -> Check:
    start = time.perf_counter()
    try:
        detail = body()
        ok = True
    except _Fail as exc:
        detail, ok = str(exc), False
    elapsed = time.perf_counter() - start
    if ok and elapsed > limit:
        ok, detail = False, f"too slow: {elapsed:.1f}s > {limit:g}s"
    return Check(number, title, ok, detail, elapsed, limit)


# --- the criteria ----------------------------------------------------------------------

def _catalog_order() -> str:
    vals = [e.beta for e in enumerate_B(1, F(3, 2), max_n=40)]
    first = [v for v in vals if v > 1][:4]
    _need(first == [F(6, 5), F(5, 4), F(9, 7), F(4, 3)], f"first values above 1: {first}")
    _need(vals[0] == 1, "1 should open the slice")
    return "6/5 < 5/4 < 9/7 < 4/3"


def _sub_one_slice() -> str:
    got = [e.beta for e in enumerate_B(0, 1, max_t=100)]
    _need(got == [F(t - 1, t) for t in range(1, 101)], "slice [0,1) differs from (t-1)/t, t <= 100")
    return "100 values"


def _k2_closed_form() -> str:
    got = {e.beta for e in enumerate_B(1, F(3, 2), max_n=200)}
    want = ({F(3, 2) - F(3, 2 * n) for n in range(5, 201, 2)}
            | {F(3, 2) - F(1, n) for n in range(4, 201, 2)} | {F(1)})
    _need(got == want, f"{len(got ^ want)} values differ")
    return f"{len(got)} values"


def _membership() -> str:
    _need(membership(F(14, 11)).status == NOT_IN_B, "14/11 should not be in B")
    r = membership(F(20, 13))
    _need(r.status == IN_B and r.entry.parametrizations == ((3, 13, 0, 4),), f"20/13: {r}")
    r = membership(F(4, 3))
    _need(r.status == IN_B and len(r.entry.parametrizations) == 2, f"4/3: {r}")
    return "14/11 out; 20/13 at (3,13,0,4); 4/3 twice"


def _witnesses() -> str:
    w54, w65 = witness(lookup(F(5, 4))), witness(lookup(F(6, 5)))
    _need(are_isomorphic(w54, diamond()), "witness(5/4) is not the diamond")
    _need(are_isomorphic(w65, bowtie()), "witness(6/5) is not the bowtie")
    for g in (w54, w65):
        _need(balance_check(g, STRICTLY_MINOR_BALANCED).verdict, "small witness not strictly balanced")
    g = witness(lookup(F(20, 13)))
    _need((g.n, g.num_edges) == (13, 20), "20/13 witness size")
    blks = [b for b in blocks(g)]
    _need(len(blks) == 4 and all(are_isomorphic(g.induced(sorted(b)), diamond()) for b in blks),
          "20/13 witness should have four diamond blocks")
    rep = balance_check(g, STRICTLY_MINOR_BALANCED)
    _need(rep.verdict, "20/13 witness not strictly balanced")
    return f"20/13 witness explored {rep.explored} minors"


def _dense_families() -> str:
    _need(density(build_gkm(2, 0)) == F(17, 10), "rho(G_2(0))")
    _need(density(build_gkm(2, 3)) == 2, "rho(G_2(3))")
    _need(density(build_gkm(2, 7)) == F(12, 5) == b_k(2), "rho(G_2(7)) vs b_2")
    n = gkm_n(2)
    for m in range(n // 2):
        _need(density(build_gkm(2, m + 1)) - density(build_gkm(2, m)) == F(1, 10), f"step at m={m}")
    explored = 0
    for m in (0, 4, 7):
        rep = balance_check(build_gkm(2, m), MINOR_BALANCED)
        _need(rep.verdict, f"G_2({m}) not minor-balanced")
        explored += rep.explored
    return f"{explored} minors explored"


def _f_family() -> str:
    g = build_fkm(2, 9)
    _need((g.n, g.num_edges) == (11, 28), "F_2(9) size")
    for k in range(2, 7):
        for m in range(3, 31, 3):
            g = build_fkm(k, m)
            cf = closed_form(FamilySpec("Fkm", (k, m)))
            _need((g.n, g.num_edges) == (cf.v, cf.e) and density(g) == cf.rho, f"F_{k}({m}) closed form")
        n = gkm_n(k)
        for m in range(n // 2):
            step = density(build_gkm(k, m + 1)) - density(build_gkm(k, m))
            _need(step == F(1, k * k + 2 * k + 2) and step < F(3, k * k), f"G_{k} step at m={m}")
        n2, _ = n2_delta2(k)
        for m in range(n2, n2 + 31, 3):
            step = fkm_density(k, m + 3) - fkm_density(k, m)
            _need(0 <= step < F(3, 2 * k * k), f"F_{k} step at m={m}")
    return "k = 2..6"


def _fan_family() -> str:
    _need(t_density(build_fan_cliques(3, 1), 1) == F(25, 11), "rho_1(H_{3,1})")
    _need(t_density(build_fan_cliques(3, 2), 1) == F(45, 19), "rho_1(H_{3,2})")
    explored = 0
    for k in (1, 2):
        rep = balance_check(build_fan_cliques(k, 1), Mode(True, 1))
        _need(rep.verdict, f"H_{{{k},1}} not strictly 1-minor-balanced: {rep.counterexample}")
        explored += rep.explored
    return f"{explored} minors explored"


def _witness_25_11(deep: bool) -> Callable[[], str]:
    def body() -> str:
        g = build_witness_25_11()
        _need((g.n, g.num_edges) == (11, 25), "size")
        base = delete_vertex(g, 10)
        _need(density(base) == F(3, 2) and balance_check(base, MINOR_BALANCED).verdict, "10-vertex base")
        if not deep:
            return "strict check needs --deep"
        rep = balance_check(g, STRICTLY_MINOR_BALANCED)
        _need(rep.verdict, "not strictly minor-balanced")
        return f"strict: {rep.explored} minors explored"
    return body


def _bowtie_stars(deep: bool) -> Callable[[], str]:
    def body() -> str:
        g1 = build_bowtie_star(1)
        _need(density(g1) == F(11, 6) and balance_check(g1, STRICTLY_MINOR_BALANCED).verdict, "k=1")
        for k in range(1, 7):
            _need(density(build_bowtie_star(k)) == bowtie_star_density(k), f"density at k={k}")
        if not deep:
            return "k=2 strict check needs --deep"
        g2 = build_bowtie_star(2)
        _need(g2.n == 11 and density(g2) == 2, "k=2 size")
        rep = balance_check(g2, STRICTLY_MINOR_BALANCED)
        _need(rep.verdict, "k=2 not strictly minor-balanced")
        return f"k=2 strict: {rep.explored} minors explored"
    return body


def _crosscheck_and_sweeps() -> str:
    rep = crosscheck(7)
    _need(not rep.catalog_misses, f"catalog misses {rep.catalog_misses}")
    _need(not rep.witness_misses, f"witness misses {rep.witness_misses}")
    _need(not rep.flagged, "partial scan")
    sweeps = sweep_connectivity(7)
    bad = {k: v.exceptions for k, v in sweeps.items() if v.exceptions}
    _need(not bad, f"sweep exceptions {bad}")
    return f"{len(rep.densities_found)} densities below 2; {sweeps['connected'].checked} graphs swept"


# naive oracles: full minor closure with edge deletions, and every vertex ordering

def _full_closure(g: Graph) -> dict[bytes, Graph]:
    seen = {canonical_form(g): g}
    stack = [g]
    while stack:
        h = stack.pop()
        kids = [delete_vertex(h, v) for v in range(h.n)] if h.n >= 2 else []
        for u, v in h.edges():
            kids += [delete_edge(h, u, v), contract_edge(h, u, v)]
        for c in kids:
            code = canonical_form(c)
            if code not in seen:
                seen[code] = c
                stack.append(c)
    return seen


def _plant_by_orderings(g: Graph) -> str:
    for p in permutations(range(g.n)):
        if not g.has_edge(p[0], p[1]):
            continue
        if all(sum(g.has_edge(p[i], p[j]) for j in range(i)) >= 2 for i in range(2, g.n)):
            return PLANT_EQ if g.num_edges == 2 * g.n - 3 else PLANT_PLUS
    return NOT_PLANT


def _oracles() -> str:
    count = 0
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            closure = _full_closure(g)
            top = max(density(h) for h in closure.values())
            best = min((h.n, code) for code, h in closure.items() if density(h) == top)
            h, val = densest_minor(g)
            _need(val == top and (h.n, canonical_form(h)) == best, f"densest minor differs on {g}")
            if n >= 2:
                _need(plant_classify(g).status == _plant_by_orderings(g), f"plant class differs on {g}")
            count += 1
    return f"{count} graphs"


def _identities() -> str:
    rng = random.Random(20240611)
    for t in (0, 1, 2):
        done = 0
        while done < 500:
            n = rng.randint(1, 14)
            p = rng.random()
            g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
            if t_density(g, t) <= 0:
                continue
            _need(t_density(extend_graph(g), t + 1) == t_density(g, t) + 1, f"extension identity t={t}")
            done += 1
    rep = sweep_density_order(7)
    _need(rep.passed, f"ordering exceptions {rep.exceptions[:3]}")
    return f"1500 random graphs; ordering on {rep.checked} (graph, t) pairs"


def criteria(deep: bool = False) -> list[tuple[int, str, float, Callable[[], str]]]:
    return [
        (1, "catalog order above 1", 1, _catalog_order),
        (2, "values below 1", 1, _sub_one_slice),
        (3, "k=2 closed form", 1, _k2_closed_form),
        (4, "membership", 1, _membership),
        (5, "witness verification", 600, _witnesses),
        (6, "G_k(m) family", 900, _dense_families),
        (7, "F_k(m) family and mesh", 60, _f_family),
        (8, "fan of cliques", 600, _fan_family),
        (9, "25/11 witness", 1800, _witness_25_11(deep)),
        (10, "bowtie stars", 1800, _bowtie_stars(deep)),
        (11, "crosscheck and connectivity sweeps at n <= 7", 1800, _crosscheck_and_sweeps),
        (12, "oracle equivalence at n <= 6", 600, _oracles),
        (13, "t-density identities", 600, _identities),
    ]


def run_checks(deep: bool = False, only: set[int] | None = None) -> list[Check]:
    out = []
    for number, title, limit, body in criteria(deep):
        if only and number not in only:
            continue
        out.append(_run(number, title, limit, body))
    return out
