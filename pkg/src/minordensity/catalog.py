"""Critical densities of minor-closed classes up to 2, enumerated exactly.

Below 1 the values are (t-1)/t.  On [1, 2) they split into intervals
[2 - 1/(k-1), 2 - 1/k) for k >= 2.  Each interval holds its left endpoint
plus the values

    2 - 1/k - (2k-t-1)/(kn)  =  2 - (m+2)/n,    n = mk + 1 + t,

where m >= 1, 0 <= t <= k-1 and n > (2k-1-t)(k-1).  That last condition keeps
the value above the interval's left end.  Then 2 closes the range.  Every
interval accumulates at its right end, so listing a slice that reaches an
accumulation point needs an explicit cap on n (or on t below 1).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Iterator, Optional

from .errors import DomainError
from .families import (FamilySpec, bowtie_star_density, fan_cliques_rho1, fkm_density,
                       gkm_density, gkm_n, n2_delta2)
from .graph6 import emit_graph6
from .graph_core import Graph, density, format_rational

SUB_ONE = "SubOne"
ENDPOINT = "IntervalEndpoint"
INTERIOR = "Interior"
TWO = "Two"

IN_B = "InB"
NOT_IN_B = "NotInB"
UNKNOWN_ABOVE_2 = "UnknownAbove2"

CONJECTURES = {
    "min(B ∩ (2,∞))": Fraction(33, 16),
    "min(B₂ ∩ (2,∞))": Fraction(11, 5),
}


@dataclass(frozen=True)
class CatalogEntry:
    beta: Fraction
    kind: str
    k: Optional[int] = None
    n: Optional[int] = None
    t: Optional[int] = None
    m: Optional[int] = None
    witness_spec: Optional[FamilySpec] = None
    parametrizations: tuple[tuple[int, int, int, int], ...] = ()

    def label(self) -> str:
        if self.kind == SUB_ONE:
            return f"SubOne(t={self.t})"
        if self.kind == ENDPOINT:
            return f"IntervalEndpoint(k={self.k})"
        if self.kind == INTERIOR:
            return f"Interior(k={self.k}, n={self.n}, t={self.t}, m={self.m})"
        return "Two"

    def to_record(self) -> dict:
        return {
            "beta": format_rational(self.beta),
            "kind": self.kind,
            "k": self.k,
            "n": self.n,
            "t": self.t,
            "m": self.m,
            "witness": emit_graph6(witness(self)),
            "parametrizations": [list(p) for p in self.parametrizations],
        }


@dataclass(frozen=True)
class MembershipResult:
    status: str
    entry: Optional[CatalogEntry] = None
    known_hit: tuple[str, ...] = field(default=())

    @property
    def member(self) -> bool:
        return self.status == IN_B


# --- entry constructors -------------------------------------------------------------

def interval_index(x: Fraction) -> int:
    """The k with 2 - 1/(k-1) <= x < 2 - 1/k, for 1 <= x < 2."""
    return floor(1 / (2 - x)) + 1


def interior_value(k: int, n: int, t: int) -> Fraction:
    return 2 - Fraction(1, k) - Fraction(2 * k - t - 1, k * n)


def _sub_one(t: int) -> CatalogEntry:
    return CatalogEntry(Fraction(t - 1, t), SUB_ONE, t=t, witness_spec=FamilySpec("Path", (t,)))


def _endpoint(k: int) -> CatalogEntry:
    # for k = 2 the value is 1, witnessed by a triangle, which is K+_{2,1}
    a = 1 if k == 2 else 3 * k - 5
    return CatalogEntry(2 - Fraction(1, k - 1), ENDPOINT, k=k, witness_spec=FamilySpec("KPlus2", (a,)))


def _two() -> CatalogEntry:
    return CatalogEntry(Fraction(2), TWO, witness_spec=FamilySpec("Fkm", (2, 3)))


def _interior(params: Iterable[tuple[int, int, int, int]]) -> CatalogEntry:
    ps = tuple(sorted(set(params)))
    k, n, t, m = ps[0]
    return CatalogEntry(interior_value(k, n, t), INTERIOR, k=k, n=n, t=t, m=m,
                        witness_spec=FamilySpec("StarOfPlants", (k, m, t)), parametrizations=ps)


def _min_interior_n(k: int, t: int) -> int:
    """Smallest admissible n for (k, t): n = mk+1+t, m >= 1, n > (2k-1-t)(k-1)."""
    n = max(k + 1 + t, (2 * k - 1 - t) * (k - 1) + 1)
    return n + (-(n - 1 - t)) % k


def _interior_params_for(q: Fraction, k: int) -> list[tuple[int, int, int, int]]:
    out = []
    denom = k * (2 - q) - 1
    if denom <= 0:
        return out
    for t in range(k):
        n = Fraction(2 * k - t - 1) / denom
        if n.denominator != 1:
            continue
        n = int(n)
        if (n - 1 - t) % k:
            continue
        m = (n - 1 - t) // k
        if m >= 1 and n > (2 * k - 1 - t) * (k - 1):
            out.append((k, n, t, m))
    return out


# --- enumeration -------------------------------------------------------------------

def _accumulates_in(lo: Fraction, hi: Fraction) -> list[Fraction]:
    """Accumulation points a of B with infinitely many members in [lo, hi)."""
    pts = []
    a = Fraction(1)
    k = 2
    while a < 2 and a <= hi:
        if lo < a:
            pts.append(a)
        a = 2 - Fraction(1, k)
        k += 1
    return pts


def enumerate_B(lo, hi, *, max_n: Optional[int] = None, max_t: Optional[int] = None) -> list[CatalogEntry]:
    """Members of B in [lo, hi), ascending, each once with every parametrization.

    ``max_t`` caps the values (t-1)/t below 1 and ``max_n`` caps n for the
    interval values; a cap is required whenever the slice reaches an
    accumulation point, since the slice is then infinite.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo < 0:
        raise DomainError("lo must be non-negative")
    if hi >= 2:
        raise DomainError("hi must be below 2; use next_above to walk toward 2")
    if lo >= hi:
        return []
    for a in _accumulates_in(lo, hi):
        if a == 1 and max_t is None:
            raise DomainError("the slice accumulates at 1; pass max_t")
        if a > 1 and max_n is None:
            raise DomainError(f"the slice accumulates at {format_rational(a)}; pass max_n")
    found: dict[Fraction, CatalogEntry] = {}

    if lo < 1:
        t = max(1, floor(1 / (1 - lo)))
        while True:
            beta = Fraction(t - 1, t)
            if beta >= hi or (max_t is not None and t > max_t):
                break
            if beta >= lo:
                found[beta] = _sub_one(t)
            t += 1

    if hi > 1:
        kmin = interval_index(max(lo, Fraction(1)))
        kmax = interval_index(hi)
        interior: dict[Fraction, list] = {}
        for k in range(kmin, kmax + 1):
            end = 2 - Fraction(1, k - 1)
            if lo <= end < hi:
                found[end] = _endpoint(k)
            top = 2 - Fraction(1, k)
            for t in range(k):
                n = _min_interior_n(k, t)
                if lo > end:
                    # first n whose value reaches lo
                    need = Fraction(2 * k - t - 1) / (k * (top - lo))
                    n = max(n, ceil(need))
                    n += (-(n - 1 - t)) % k
                while max_n is None or n <= max_n:
                    beta = interior_value(k, n, t)
                    if beta >= hi:
                        break
                    if beta >= lo:
                        interior.setdefault(beta, []).append((k, n, t, (n - 1 - t) // k))
                    n += k
        for beta, ps in interior.items():
            found[beta] = _interior(ps)
    return [found[b] for b in sorted(found)]


# --- single-value queries -------------------------------------------------------------

def known_members_above_two(q: Fraction) -> tuple[str, ...]:
    """Documented values above 2 that ``q`` matches; empty when none do."""
    q = Fraction(q)
    hits = []
    if q == Fraction(25, 11):
        hits.append("25/11: achievable, the 1-density of the fan of cliques H(3,1)")
    if q == Fraction(11, 5):
        hits.append("11/5: in B2, blocks that are minors of a bowtie plus a universal vertex")
    if 2 < q < Fraction(11, 5):
        k = q / (11 - 5 * q)
        if k.denominator == 1 and k >= 3 and bowtie_star_density(int(k)) == q:
            hits.append(f"bowtie star with k={k}: 2 + (k-2)/(5k+1)")
    for t in range(1, 400):
        top = Fraction(5 * t + 2, 2 * t + 1)
        if q >= top:
            continue
        size = Fraction(t + 1) / ((2 * t + 1) * (top - q))
        if size.denominator == 1 and (size + 1) % (2 * t + 1) == 0:
            k = int((size + 1) // (2 * t + 1)) - 1
            if k >= 1 and fan_cliques_rho1(k, t) == q:
                hits.append(f"in B2 as the 1-density of the fan of cliques H({k},{t})")
    if 2 < q <= 3:
        inner = membership(q - 1)
        if inner.member:
            hits.append(f"in B2 as 1 + {format_rational(q - 1)}")
    if (2 * q).denominator == 1:
        hits.append(f"density of the clique K{int(2 * q) + 1}")
    for k in (floor(q), floor(q) + 1):
        if k < 2:
            continue
        m = (q - k + Fraction(1, 2)) * 2 * (k * k + 2 * k + 2) / 2 - Fraction(k + 2, 2)
        n = gkm_n(k)
        if m.denominator == 1 and 0 <= m <= n and (2 * m <= n or (m - n // 2) % 3 == 0):
            if gkm_density(k, int(m)) == q:
                hits.append(f"density of G_{k}({m})")
    for k in (floor(q) - 1, floor(q)):
        if k < 2:
            continue
        s = q - k - Fraction(1, 2)
        if 1 - 2 * s == 0:
            continue
        m = (k * k + 2 * k + 2 * k * s) / (1 - 2 * s)
        if m.denominator == 1 and m >= n2_delta2(k)[0] and m % 3 == 0 and fkm_density(k, int(m)) == q:
            hits.append(f"density of F_{k}({m})")
    return tuple(hits)


def membership(q) -> MembershipResult:
    q = Fraction(q)
    if q < 0:
        raise DomainError("membership is defined for non-negative values")
    if q > 2:
        return MembershipResult(UNKNOWN_ABOVE_2, known_hit=known_members_above_two(q))
    if q == 2:
        return MembershipResult(IN_B, _two())
    if q < 1:
        t = 1 / (1 - q)
        if t.denominator == 1:
            return MembershipResult(IN_B, _sub_one(int(t)))
        return MembershipResult(NOT_IN_B)
    k = interval_index(q)
    if q == 2 - Fraction(1, k - 1):
        return MembershipResult(IN_B, _endpoint(k))
    params = _interior_params_for(q, k)
    if params:
        return MembershipResult(IN_B, _interior(params))
    return MembershipResult(NOT_IN_B)


def lookup(q) -> CatalogEntry:
    """The catalog entry for ``q``; raises if ``q`` is not a member up to 2."""
    res = membership(q)
    if not res.member:
        raise DomainError(f"{format_rational(Fraction(q))} is not a catalogued member of B")
    return res.entry


def next_above(x) -> CatalogEntry:
    """Least member of B strictly above ``x``, for 0 <= x < 2."""
    x = Fraction(x)
    if x < 0:
        raise DomainError("x must be non-negative")
    if x >= 2:
        raise DomainError("B above 2 is not characterised")
    if x < 1:
        return _sub_one(floor(1 / (1 - x)) + 1)
    k = interval_index(x)
    top = 2 - Fraction(1, k)
    best = top
    for t in range(k):
        n = _min_interior_n(k, t)
        # value exceeds x once n > (2k-t-1) / (k (top - x))
        need = floor(Fraction(2 * k - t - 1) / (k * (top - x))) + 1
        n = max(n, need)
        n += (-(n - 1 - t)) % k
        beta = interior_value(k, n, t)
        if x < beta < best:
            best = beta
    return membership(best).entry


def gap(x) -> Fraction:
    x = Fraction(x)
    return next_above(x).beta - x


def iter_B(start=0) -> Iterator[CatalogEntry]:
    """Walk B upward from ``start`` (inclusive) toward 2, ending with 2."""
    x = Fraction(start)
    res = membership(x) if x <= 2 else None
    if res is not None and res.member:
        yield res.entry
    while x < 2:
        e = next_above(x)
        yield e
        x = e.beta


def witness(entry: CatalogEntry) -> Graph:
    """A strictly minor-balanced graph whose density is ``entry.beta``."""
    g = entry.witness_spec.build()
    if density(g) != entry.beta:
        raise AssertionError(f"witness density {density(g)} differs from {entry.beta}")
    return g


# --- the addable and limit slices, and related bounds --------------------------------------

def slice_B2_upto2(k_max: int) -> list[Fraction]:
    """B2 ∩ [1, 2] truncated to 2 - 1/k for k <= k_max, plus 2.  B2 has nothing below 1."""
    if k_max < 1:
        raise DomainError("k_max must be at least 1")
    return sorted({2 - Fraction(1, k) for k in range(1, k_max + 1)} | {Fraction(2)})


def slice_Bprime_1_2(k_max: int) -> list[Fraction]:
    """B' ∩ [1, 2]; the same set as the B2 slice."""
    return slice_B2_upto2(k_max)


def slice_B2_below_one() -> list[Fraction]:
    return []


def least_B3_values() -> list[Fraction]:
    return [Fraction(2), Fraction(5, 2)]


def lower_bound_t_connected(h: int, t: int) -> Fraction:
    """Lower bound (h+t-3)/2 on the critical density when an excluded minor is t-connected on h vertices."""
    if not h >= t + 1 >= 2:
        raise DomainError("need h >= t+1 >= 2")
    return Fraction(h + t - 3, 2)


def min_Bt_bounds(t: int) -> tuple[Fraction, Fraction]:
    """Interval holding min B_t; a single point t-1 for t <= 8."""
    if t < 1:
        raise DomainError("t must be at least 1")
    if t <= 8:
        return Fraction(t - 1), Fraction(t - 1)
    return Fraction(t - 1), Fraction(2 * t - 2)


def max_edges_path_forest(n: int, t: int) -> int:
    """Most edges in an n-vertex forest of paths with at most t vertices each."""
    if n < 1 or t < 1:
        raise DomainError("need n >= 1 and t >= 1")
    return n - ceil(Fraction(n, t))


# --- export ----------------------------------------------------------------------------

CSV_FIELDS = ["beta", "kind", "k", "n", "t", "m", "witness", "parametrizations"]


def export_jsonl(entries: Iterable[CatalogEntry]) -> str:
    return "".join(json.dumps(e.to_record(), separators=(",", ":")) + "\n" for e in entries)


def export_csv(entries: Iterable[CatalogEntry]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for e in entries:
        r = e.to_record()
        r["parametrizations"] = ";".join(":".join(map(str, p)) for p in r["parametrizations"])
        w.writerow(["" if r[f] is None else r[f] for f in CSV_FIELDS])
    return buf.getvalue()
