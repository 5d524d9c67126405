"""Exhaustive small-graph enumeration and empirical checks of the density catalog."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .canon import canonical_labeling
from .catalog import enumerate_B, membership, witness
from .errors import BudgetExceeded, CapacityError, DomainError
from .graph6 import emit_graph6
from .graph_core import Graph, connectivity, format_rational, t_density
from .minor_engine import (MINOR_BALANCED, Mode, _delete_vertex_rows, balance_check,
                           balanced_from_profile, extend_graph, minor_profile)

MAX_ENUMERATION = 10
DEFAULT_SCAN_LIMIT = 8


# --- orderly generation --------------------------------------------------------------

@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical adjacency keys of all graphs on n vertices, sorted."""
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    out = []
    new = n - 1
    for parent in _level(n - 1):
        seen = set()
        for nbhd in range(1 << new):
            rows = [r | ((nbhd >> v & 1) << new) for v, r in enumerate(parent)]
            rows.append(nbhd)
            lab = canonical_labeling(Graph.from_rows(rows))
            if lab.key in seen:
                continue
            last = lab.perm.index(n - 1)
            if last != new:
                # keep the child only if deleting its canonically last vertex gives back this parent
                if canonical_labeling(Graph.from_rows(_delete_vertex_rows(rows, last))).key != parent:
                    continue
            seen.add(lab.key)
            out.append(lab.key)
    out.sort(key=lambda key: (sum(r.bit_count() for r in key), key))
    return tuple(out)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on n vertices, in canonical labelling.

    Sizes above 8 work but grow quickly (about 275 thousand classes at 9).
    """
    if not 1 <= n <= MAX_ENUMERATION:
        raise CapacityError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION}")
    for key in _level(n):
        g = Graph.from_rows(key)
        if not connected_only or g.is_connected():
            yield g


# --- scans ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanHit:
    graph6: str
    v: int
    e: int
    rho: Fraction
    connected: bool

    def to_record(self) -> dict:
        return {"graph6": self.graph6, "v": self.v, "e": self.e,
                "rho": format_rational(self.rho), "connected": self.connected}


@dataclass
class ScanReport:
    max_n: int
    mode: Mode
    hits: list[ScanHit] = field(default_factory=list)
    totals: dict[int, tuple[int, int]] = field(default_factory=dict)  # n -> (graphs, hits)
    flagged: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def partial(self) -> bool:
        return bool(self.flagged)

    def to_jsonl(self) -> str:
        """Deterministic serialisation; timing is left out so reruns compare equal."""
        lines = [json.dumps({"record": "summary", "max_n": self.max_n, "mode": self.mode.name,
                             "partial": self.partial,
                             "totals": {str(n): list(v) for n, v in sorted(self.totals.items())},
                             "flagged": self.flagged}, separators=(",", ":"))]
        lines += [json.dumps({"record": "hit", **h.to_record()}, separators=(",", ":")) for h in self.hits]
        return "\n".join(lines) + "\n"

    def table(self) -> str:
        rows = [f"{'n':>3} {'graphs':>8} {'hits':>6}"]
        rows += [f"{n:>3} {g:>8} {h:>6}" for n, (g, h) in sorted(self.totals.items())]
        if self.flagged:
            rows.append(f"partial: {len(self.flagged)} graph(s) exceeded the budget")
        return "\n".join(rows)


def _graphs_upto(max_n: int, connected_only: bool, source: Optional[Iterable[Graph]], allow_large: bool):
    if source is not None:
        for g in source:
            yield g
        return
    if max_n > DEFAULT_SCAN_LIMIT and not allow_large:
        raise CapacityError(f"scans above n={DEFAULT_SCAN_LIMIT} need allow_large=True")
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n, connected_only)


def scan_balanced(max_n: int, mode: Mode = MINOR_BALANCED, *, connected_only: bool = False,
                  source: Optional[Iterable[Graph]] = None, budget: Optional[int] = None,
                  allow_large: bool = False) -> ScanReport:
    """Classify every graph up to ``max_n`` vertices (or every graph in ``source``)."""
    if isinstance(mode, str):
        mode = Mode.parse(mode)
    if max_n < 1:
        raise DomainError("max_n must be at least 1")
    start = time.perf_counter()
    report = ScanReport(max_n, mode)
    for g in _graphs_upto(max_n, connected_only, source, allow_large):
        if g.n > max_n:
            continue
        graphs, hits = report.totals.get(g.n, (0, 0))
        # canonical strings make reports independent of how the input was labelled
        code = canonical_labeling(g).code.decode("ascii")
        try:
            verdict = balance_check(g, mode, budget=budget).verdict
        except BudgetExceeded:
            report.flagged.append(code)
            report.totals[g.n] = (graphs + 1, hits)
            continue
        if verdict:
            report.hits.append(ScanHit(code, g.n, g.num_edges, t_density(g, mode.density_index),
                                       g.is_connected()))
            hits += 1
        report.totals[g.n] = (graphs + 1, hits)
    report.hits.sort(key=lambda h: (h.v, h.e, h.graph6))
    report.flagged.sort()
    report.seconds = time.perf_counter() - start
    return report


@dataclass
class CrosscheckReport:
    max_n: int
    densities_found: list[Fraction]
    catalog_misses: list[Fraction]
    witness_misses: list[Fraction]
    flagged: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.catalog_misses and not self.witness_misses and not self.flagged

    def to_jsonl(self) -> str:
        rec = {"record": "crosscheck", "max_n": self.max_n, "passed": self.passed,
               "densities_found": [format_rational(x) for x in self.densities_found],
               "catalog_misses": [format_rational(x) for x in self.catalog_misses],
               "witness_misses": [format_rational(x) for x in self.witness_misses],
               "flagged": self.flagged}
        return json.dumps(rec, separators=(",", ":")) + "\n"


def crosscheck(max_n: int, *, budget: Optional[int] = None,
               source: Optional[Iterable[Graph]] = None) -> CrosscheckReport:
    """Compare densities of minor-balanced graphs up to ``max_n`` with the catalog below 2.

    Every such density must be a catalog member, and every catalog value whose
    witness fits in ``max_n`` vertices must show up.
    """
    if not 1 <= max_n <= DEFAULT_SCAN_LIMIT:
        raise CapacityError(f"crosscheck supports 1 <= max_n <= {DEFAULT_SCAN_LIMIT}")
    scan = scan_balanced(max_n, MINOR_BALANCED, source=source, budget=budget)
    found = sorted({h.rho for h in scan.hits if h.rho < 2})
    misses = [x for x in found if not membership(x).member]
    # witnesses on at most max_n vertices: paths up to max_n, and interval values with n <= max_n
    expected = enumerate_B(0, Fraction(2) - Fraction(1, max_n + 1), max_n=max_n, max_t=max_n)
    present = set(found)
    wmiss = [e.beta for e in expected if witness(e).n <= max_n and e.beta not in present]
    return CrosscheckReport(max_n, found, misses, wmiss, scan.flagged)


# --- structural sweeps -----------------------------------------------------------------

@dataclass
class SweepReport:
    name: str
    checked: int = 0
    exceptions: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.exceptions


def _modes(g: Graph, prof) -> dict[str, bool]:
    return {name: balanced_from_profile(g, prof, Mode(strict, t))
            for name, strict, t in [("mb", False, None), ("smb", True, None),
                                    ("1mb", False, 1), ("s1mb", True, 1), ("s2mb", True, 2),
                                    ("0mb", False, 0), ("2mb", False, 2)]}


def sweep_connectivity(max_n: int = 7, graphs: Optional[Iterable[Graph]] = None) -> dict[str, SweepReport]:
    """Consequences of 1- and 2-minor-balance for connectivity and strict balance.

    * 1-minor-balanced implies connected;
    * strictly 1-minor-balanced implies K2 or 2-connected;
    * 1-minor-balanced implies strictly minor-balanced;
    * strictly 2-minor-balanced on at least 5 vertices implies 3-connected.
    """
    reps = {k: SweepReport(k) for k in ("connected", "two_connected", "strict", "three_connected")}
    if graphs is None:
        graphs = (g for n in range(1, max_n + 1) for g in enumerate_graphs(n))
    for g in graphs:
        prof = minor_profile(g)
        m = _modes(g, prof)
        code = emit_graph6(g)
        for r in reps.values():
            r.checked += 1
        if m["1mb"] and not g.is_connected():
            reps["connected"].exceptions.append(code)
        if m["s1mb"] and not (g.n == 2 and g.num_edges == 1) and not (g.n >= 3 and connectivity(g) >= 2):
            reps["two_connected"].exceptions.append(code)
        if m["1mb"] and not m["smb"]:
            reps["strict"].exceptions.append(code)
        if m["s2mb"] and g.n >= 5 and connectivity(g) < 3:
            reps["three_connected"].exceptions.append(code)
    return reps


def sweep_extension(max_n: int = 6, ts: Iterable[int] = (0, 1)) -> SweepReport:
    """A t-minor-balanced graph's universal-vertex extension is (t+1)-minor-balanced."""
    rep = SweepReport("extension")
    ts = tuple(ts)
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            prof = minor_profile(g)
            for t in ts:
                if not balanced_from_profile(g, prof, Mode(False, t)):
                    continue
                rep.checked += 1
                h = extend_graph(g)
                if not balance_check(h, Mode(False, t + 1)).verdict:
                    rep.exceptions.append(f"{emit_graph6(g)} t={t}")
    return rep


def sweep_density_order(max_n: int = 7) -> SweepReport:
    """With e >= (t-1)(v - t/2) and v >= t+1: rho_t >= rho_{t-1} > ... > rho_0."""
    rep = SweepReport("density_order")
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n):
            v, e = g.n, g.num_edges
            for t in range(2, v):
                if 2 * e < (t - 1) * (2 * v - t):
                    continue
                rep.checked += 1
                vals = [t_density(g, s) for s in range(t + 1)]
                ok = vals[t] >= vals[t - 1] and all(vals[s] > vals[s - 1] for s in range(1, t))
                if not ok:
                    rep.exceptions.append(f"{emit_graph6(g)} t={t}")
    return rep
