"""Orbit census: graph generation, orbit classification, counting tables.

Connected LC/ELC orbits on ``n`` vertices are found by extending every
connected orbit representative on ``n - 1`` vertices by one vertex with each
non-empty neighbourhood, then closing each unseen extension under the orbit
operation.  This reaches every orbit: a connected graph has a vertex ``v``
whose removal leaves it connected, and LC/ELC moves away from ``v`` commute
with deleting ``v``.
"""

from __future__ import annotations

import json
import logging
import os
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .canon import canonize
from .circle import has_obstruction
from .graph import Graph, disjoint_union, is_bipartite, is_connected, parse_graph6
from .interlace import InterlaceCache, Polynomial, evaluate, interlace_Q, interlace_q, is_unimodal, shifted_q
from .orbits import DEFAULT_BUDGET, OrbitBudgetExceeded, elc_neighbors, lc_neighbors, orbit

log = logging.getLogger(__name__)

__all__ = [
    "OrbitRecord",
    "Census",
    "CountsTable",
    "generate_graphs",
    "classify_orbits",
    "euler_transform",
    "count_distinct_polynomials",
    "distinct_polynomials",
    "seed_polynomials",
    "witness_graph",
    "unimodality_scan",
    "UnimodalityReport",
    "delta_table",
    "degQ_q4_ranges",
    "table1",
    "table2",
    "table3",
    "table4",
    "table5",
    "table7",
    "table8",
    "circle_delta_table",
    "build_table",
    "MAX_GENERATED_ORDER",
]

MAX_GENERATED_ORDER = 10
CIRCLE_MIN_ORDER = 6  # smallest obstruction


# graph generation

_graph_levels: dict[tuple[int, bool], list[tuple[str, tuple[int, ...]]]] = {}


def _level(n: int, connected_only: bool) -> list[tuple[str, tuple[int, ...]]]:
    key = (n, connected_only)
    if key in _graph_levels:
        return _graph_levels[key]
    if n == 1:
        out = [canonize(1, (0,))]
    else:
        parents = _level(n - 1, connected_only)
        found: dict[str, tuple[int, ...]] = {}
        new = 1 << (n - 1)
        first = 1 if connected_only else 0
        for _, rows in parents:
            for s in range(first, new):
                child = [r | new if s >> i & 1 else r for i, r in enumerate(rows)]
                child.append(s)
                f, canon = canonize(n, child)
                if f not in found:
                    found[f] = canon
        out = sorted(found.items())
    _graph_levels[key] = out
    return out


def generate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonically labeled graph per isomorphism class, sorted by canonical form.

    Order ``n`` graphs come from order ``n - 1`` graphs plus a vertex with
    every neighbourhood (non-empty ones from connected parents when
    ``connected_only``), deduplicated by canonical form.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_GENERATED_ORDER:
        raise ValueError(f"built-in generation stops at n={MAX_GENERATED_ORDER}; supply graph6 files")
    for _, rows in _level(n, connected_only):
        yield Graph(n, rows, check=False)


def read_graph6_file(path: str | os.PathLike) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield parse_graph6(line)


# orbit records


@dataclass
class OrbitRecord:
    """Summary of one connected orbit."""

    rep: str
    size: int
    delta: int
    bipartite: bool  # some member is bipartite
    circle: bool | None  # None when not checked
    poly: Polynomial | None = None  # Q for LC orbits, q for ELC orbits

    @property
    def n(self) -> int:
        return ord(self.rep[0]) - 63

    def graph(self) -> Graph:
        return parse_graph6(self.rep)

    def to_json(self) -> dict:
        return {
            "rep": self.rep,
            "size": self.size,
            "delta": self.delta,
            "bipartite": self.bipartite,
            "circle": self.circle,
            "poly": None if self.poly is None else [str(c) for c in self.poly.coeffs],
        }

    @classmethod
    def from_json(cls, d: dict) -> OrbitRecord:
        poly = None if d["poly"] is None else Polynomial(int(c) for c in d["poly"])
        return cls(d["rep"], d["size"], d["delta"], d["bipartite"], d["circle"], poly)


def _close(
    n: int,
    rows: tuple[int, ...],
    form: str,
    kind: str,
    seen: set[str],
    budget: int,
    check_circle: bool,
) -> OrbitRecord:
    expand = lc_neighbors if kind == "LC" else elc_neighbors
    members = {form}
    seen.add(form)
    queue = deque([rows])
    delta = n
    bip = False
    obstructed = False
    rep = form
    while queue:
        cur = queue.popleft()
        d = min(r.bit_count() for r in cur)
        if d < delta:
            delta = d
        g = Graph(n, cur, check=False)
        if not bip and is_bipartite(g):
            bip = True
        if check_circle and not obstructed and has_obstruction(g):
            obstructed = True
        for nxt in expand(n, cur):
            f, r = canonize(n, nxt)
            if f not in members:
                if len(members) >= budget:
                    raise OrbitBudgetExceeded(f"{kind} orbit exceeds {budget} members")
                members.add(f)
                seen.add(f)
                if f < rep:
                    rep = f
                queue.append(r)
    circle = (not obstructed) if check_circle else None
    return OrbitRecord(rep, len(members), delta, bip, circle)


class Census:
    """Connected LC or ELC orbits by order, computed incrementally.

    With ``directory`` set, each finished order is written as a sorted
    representative file plus a JSON sidecar and reloaded on later runs.
    """

    def __init__(
        self,
        kind: str = "LC",
        directory: str | os.PathLike | None = None,
        budget: int = DEFAULT_BUDGET,
        circle_max: int = 8,
        cache: InterlaceCache | None = None,
        polynomials: bool = True,
    ):
        self.kind = kind.upper()
        if self.kind not in ("LC", "ELC"):
            raise ValueError(f"unknown orbit kind {kind!r}")
        self.directory = Path(directory) if directory is not None else None
        self.budget = budget
        self.circle_max = circle_max if self.kind == "LC" else 0
        self.cache = cache if cache is not None else InterlaceCache()
        self.polynomials = polynomials
        self._levels: dict[int, list[OrbitRecord]] = {}

    # persistence

    def _paths(self, n: int) -> tuple[Path, Path]:
        assert self.directory is not None
        stem = f"{self.kind.lower()}-{n:02d}"
        return self.directory / f"{stem}.g6", self.directory / f"{stem}.json"

    def _load(self, n: int) -> list[OrbitRecord] | None:
        if self.directory is None:
            return None
        _, meta = self._paths(n)
        if not meta.exists():
            return None
        data = json.loads(meta.read_text())
        if self.circle_max >= n and not data.get("circle_checked"):
            return None
        recs = [OrbitRecord.from_json(d) for d in data["orbits"]]
        if self.polynomials and any(r.poly is None for r in recs):
            return None
        return recs

    def _save(self, n: int, recs: list[OrbitRecord]) -> None:
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        reps, meta = self._paths(n)
        lines = [f"# kind={self.kind} n={n} size={len(recs)}"] + [r.rep for r in recs]
        reps.write_text("\n".join(lines) + "\n")
        payload = {
            "kind": self.kind,
            "n": n,
            "count": len(recs),
            "graphs": sum(r.size for r in recs),
            "circle_checked": self.circle_max >= n,
            "orbits": [r.to_json() for r in recs],
        }
        meta.write_text(json.dumps(payload, indent=0) + "\n")

    # computation

    def seeds(self, n: int) -> Iterator[tuple[int, ...]]:
        if n == 1:
            yield (0,)
            return
        new = 1 << (n - 1)
        for rec in self.level(n - 1):
            rows = parse_graph6(rec.rep).adj
            for s in range(1, new):
                child = [r | new if s >> i & 1 else r for i, r in enumerate(rows)]
                child.append(s)
                yield tuple(child)

    def classify(self, n: int, seeds: Iterable[Graph | tuple[int, ...]] | None = None) -> list[OrbitRecord]:
        """Connected orbits of order ``n`` reached from ``seeds`` (default: extensions)."""
        check_circle = CIRCLE_MIN_ORDER <= n <= self.circle_max
        seen: set[str] = set()
        recs = []
        source = self.seeds(n) if seeds is None else (s.adj if isinstance(s, Graph) else s for s in seeds)
        for rows in source:
            if len(rows) != n:
                raise ValueError(f"seed of order {len(rows)} in a census of order {n}")
            f, canon = canonize(n, rows)
            if f in seen:
                continue
            if not is_connected(Graph(n, canon, check=False)):
                continue
            recs.append(_close(n, canon, f, self.kind, seen, self.budget, check_circle))
            if len(recs) % 500 == 0:
                log.info("%s n=%d: %d orbits, %d graphs", self.kind, n, len(recs), len(seen))
        recs.sort(key=lambda r: r.rep)
        if self.polynomials:
            poly = interlace_Q if self.kind == "LC" else interlace_q
            for r in recs:
                r.poly = poly(r.graph(), self.cache)
        return recs

    def level(self, n: int) -> list[OrbitRecord]:
        if n < 1:
            raise ValueError("n must be at least 1")
        if n not in self._levels:
            recs = self._load(n)
            if recs is None:
                recs = self.classify(n)
                self._save(n, recs)
            self._levels[n] = recs
        return self._levels[n]

    def count(self, n: int) -> int:
        return len(self.level(n))

    def counts(self, n_max: int) -> list[int]:
        return [self.count(n) for n in range(1, n_max + 1)]


def classify_orbits(
    n: int,
    kind: str = "LC",
    connected_only: bool = True,
    census: Census | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, list[str]]:
    """Number of orbits of order ``n`` and their least canonical representatives.

    Disconnected orbits are products of connected ones; their
    representatives are found by closing each disjoint union.
    """
    census = census or Census(kind, budget=budget, circle_max=0, polynomials=False)
    conn = census.level(n)
    if connected_only:
        return len(conn), [r.rep for r in conn]
    reps = []
    for combo in _multisets(n, {k: [r.rep for r in census.level(k)] for k in range(1, n + 1)}):
        g = disjoint_union(*(parse_graph6(f) for f in combo))
        reps.append(orbit(g, census.kind, budget).representative)
    reps.sort()
    return len(reps), reps


def _multisets(n: int, items_by_order: dict[int, list]) -> Iterator[tuple]:
    """Multisets of items whose orders sum to ``n`` (items ordered by (order, index))."""
    flat = [(k, i) for k in sorted(items_by_order) for i in range(len(items_by_order[k]))]

    def rec(remaining: int, start: int, acc: list) -> Iterator[tuple]:
        if remaining == 0:
            yield tuple(items_by_order[k][i] for k, i in acc)
            return
        for j in range(start, len(flat)):
            k, _ = flat[j]
            if k > remaining:
                break
            acc.append(flat[j])
            yield from rec(remaining - k, j, acc)
            acc.pop()

    yield from rec(n, 0, [])


# counting


def euler_transform(c: Sequence[int]) -> list[int]:
    """Counts of all structures from counts ``c[0..]`` of connected ones (``c[0]`` is order 1)."""
    m = len(c)
    a = [0] * (m + 1)
    for n in range(1, m + 1):
        a[n] = sum(d * c[d - 1] for d in range(1, n + 1) if n % d == 0)
    t = [0] * (m + 1)
    for n in range(1, m + 1):
        total = a[n] + sum(a[k] * t[n - k] for k in range(1, n))
        q, r = divmod(total, n)
        if r:
            raise ArithmeticError(f"Euler transform not integral at n={n}: {total}/{n}")
        t[n] = q
    return t[1:]


def distinct_polynomials(
    census: Census, n: int, connected_only: bool = True
) -> dict[Polynomial, str]:
    """Distinct polynomials of order ``n`` mapped to a witness graph6 string.

    Disconnected graphs contribute products of connected polynomials.
    """
    if connected_only:
        out: dict[Polynomial, str] = {}
        for r in census.level(n):
            out.setdefault(r.poly, r.rep)
        return out
    levels: dict[int, dict[Polynomial, str]] = {0: {Polynomial([1]): ""}}
    conn = {k: distinct_polynomials(census, k, True) for k in range(1, n + 1)}
    # S(m) = union over the largest component order k of C(k) * S(m - k) restricted to parts <= k
    by_max: dict[tuple[int, int], dict[Polynomial, str]] = {}

    def products(m: int, kmax: int) -> dict[Polynomial, str]:
        if m == 0:
            return levels[0]
        key = (m, kmax)
        if key in by_max:
            return by_max[key]
        res: dict[Polynomial, str] = {}
        for k in range(1, min(m, kmax) + 1):
            for p, w in conn[k].items():
                for p2, w2 in products(m - k, k).items():
                    prod = p * p2
                    if prod not in res:
                        res[prod] = w + (" " + w2 if w2 else "")
        by_max[key] = res
        return res

    return products(n, n)


def count_distinct_polynomials(census: Census, n: int, connected_only: bool = True) -> int:
    """Distinct Q (LC census) or q (ELC census) over orbits of order ``n``."""
    return len(distinct_polynomials(census, n, connected_only))


def seed_polynomials(census: Census, n: int, progress_every: int = 100_000) -> dict[Polynomial, list[str]]:
    """Distinct q (ELC census) or Q (LC census) of connected graphs of order ``n``.

    Needs only the order ``n - 1`` level: every connected orbit of order ``n``
    contains an extension seed, and the polynomial is an orbit invariant, so
    the seeds' polynomials are all of them.  Values are the distinct seeds
    (canonical forms) realizing each polynomial.
    """
    poly = interlace_q if census.kind == "ELC" else interlace_Q
    seen: set[str] = set()
    out: dict[Polynomial, list[str]] = {}
    for i, rows in enumerate(census.seeds(n)):
        f, canon = canonize(n, rows)
        if f in seen:
            continue
        seen.add(f)
        p = poly(Graph(n, canon, check=False), census.cache)
        out.setdefault(p, []).append(f)
        if progress_every and i % progress_every == 0:
            log.info("%s seeds n=%d: %d scanned, %d distinct seeds, %d polynomials", census.kind, n, i, len(seen), len(out))
    return out


def witness_graph(witness: str) -> Graph:
    """Disjoint union of the space-separated graph6 strings in a witness."""
    return disjoint_union(*(parse_graph6(w) for w in witness.split()))


@dataclass
class UnimodalityReport:
    n: int
    non_unimodal_q: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    non_unimodal_Q: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    non_unimodal_shifted_q: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    polynomials_checked: int = 0

    @property
    def clean(self) -> bool:
        return not (self.non_unimodal_q or self.non_unimodal_Q or self.non_unimodal_shifted_q)


def unimodality_scan(n: int, elc: Census, lc: Census | None = None, connected_only: bool = False) -> UnimodalityReport:
    """Distinct q of order ``n`` that are not unimodal, plus the checks on
    Q and x*q(x+1).  Reports only; nothing is asserted."""
    report = UnimodalityReport(n)
    qs = distinct_polynomials(elc, n, connected_only)
    for p, w in sorted(qs.items(), key=lambda kv: kv[0].coeffs):
        report.polynomials_checked += 1
        seq = p.sequence()
        if not is_unimodal(seq):
            report.non_unimodal_q.append((w, p.sequence(pad_to=n)))
        s = shifted_q(p).sequence()
        if not is_unimodal(s):
            report.non_unimodal_shifted_q.append((w, s))
    if lc is not None:
        for p, w in sorted(distinct_polynomials(lc, n, connected_only).items(), key=lambda kv: kv[0].coeffs):
            report.polynomials_checked += 1
            if not is_unimodal(p.sequence()):
                report.non_unimodal_Q.append((w, p.sequence(pad_to=n)))
    return report


# tables


Cell = int | tuple[int, int] | None


@dataclass
class CountsTable:
    name: str
    row_labels: list[str]
    col_labels: list[str]
    cells: list[list[Cell]]
    corner: str = ""

    def cell(self, row: str, col: str) -> Cell:
        return self.cells[self.row_labels.index(str(row))][self.col_labels.index(str(col))]

    def column(self, col: str) -> list[Cell]:
        j = self.col_labels.index(str(col))
        return [r[j] for r in self.cells]

    def row(self, row: str) -> list[Cell]:
        return self.cells[self.row_labels.index(str(row))]

    @staticmethod
    def _fmt(c: Cell) -> str:
        if c is None:
            return ""
        if isinstance(c, tuple):
            lo, hi = c
            return str(lo) if lo == hi else f"{lo}-{hi}"
        return str(c)

    def to_csv(self) -> str:
        lines = [",".join([self.corner] + self.col_labels)]
        for label, row in zip(self.row_labels, self.cells):
            lines.append(",".join([label] + [self._fmt(c) for c in row]))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "corner": self.corner,
                "rows": self.row_labels,
                "columns": self.col_labels,
                "cells": [[list(c) if isinstance(c, tuple) else c for c in row] for row in self.cells],
            }
        ) + "\n"

    def to_text(self) -> str:
        body = [[self.corner] + self.col_labels] + [
            [label] + [self._fmt(c) for c in row] for label, row in zip(self.row_labels, self.cells)
        ]
        widths = [max(len(r[j]) for r in body) for j in range(len(body[0]))]
        lines = [self.name]
        for r in body:
            lines.append("  ".join(s.rjust(w) for s, w in zip(r, widths)))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"csv": self.to_csv, "json": self.to_json, "text": self.to_text}[fmt]()


def table1(lc: Census, elc: Census, n_max: int) -> CountsTable:
    """Number of LC and ELC orbits: c_L, t_L, c_E, t_E by n."""
    cL, cE = lc.counts(n_max), elc.counts(n_max)
    tL, tE = euler_transform(cL), euler_transform(cE)
    cells = [[cL[i], tL[i], cE[i], tE[i]] for i in range(n_max)]
    return CountsTable("Number of LC and ELC orbits", [str(n) for n in range(1, n_max + 1)],
                       ["c_L", "t_L", "c_E", "t_E"], cells, "n")


def table2(lc: Census, elc: Census, n_max: int) -> CountsTable:
    """Number of distinct interlace polynomials: c_Q, t_Q, c_q, t_q by n."""
    cells = []
    for n in range(1, n_max + 1):
        cells.append([
            count_distinct_polynomials(lc, n, True),
            count_distinct_polynomials(lc, n, False),
            count_distinct_polynomials(elc, n, True),
            count_distinct_polynomials(elc, n, False),
        ])
    return CountsTable("Number of distinct interlace polynomials", [str(n) for n in range(1, n_max + 1)],
                       ["c_Q", "t_Q", "c_q", "t_q"], cells, "n")


def circle_counts(lc: Census, n_max: int) -> tuple[list[int], list[int]]:
    """(connected circle graphs, LC orbits of connected circle graphs) for n = 1..n_max."""
    graphs, orbits = [], []
    for n in range(1, n_max + 1):
        recs = lc.level(n)
        if n >= CIRCLE_MIN_ORDER and any(r.circle is None for r in recs):
            raise ValueError(f"circle status not computed at n={n}; raise circle_max")
        circ = [r for r in recs if r.circle is not False]
        graphs.append(sum(r.size for r in circ))
        orbits.append(len(circ))
    return graphs, orbits


def table3(lc: Census, n_max: int) -> CountsTable:
    """Number of circle graphs: c_c, t_c and LC orbit counts c'_c, t'_c."""
    cc, co = circle_counts(lc, n_max)
    tc, to = euler_transform(cc), euler_transform(co)
    cells = [[cc[i], tc[i], co[i], to[i]] for i in range(n_max)]
    return CountsTable("Number of circle graphs", [str(n) for n in range(1, n_max + 1)],
                       ["c_c", "t_c", "c'_c", "t'_c"], cells, "n")


_FAMILIES = {
    "all": lambda r: True,
    "bipartite": lambda r: r.bipartite,
    "circle": lambda r: r.circle is not False,
}


def delta_table(lc: Census, n_values: Iterable[int], family: str = "all") -> CountsTable:
    """Connected LC orbits by (delta, n), restricted to orbits with a member in ``family``."""
    ns = list(n_values)
    pick = _FAMILIES[family]
    per_n = {}
    for n in ns:
        recs = lc.level(n)
        if family == "circle" and n >= CIRCLE_MIN_ORDER and any(r.circle is None for r in recs):
            raise ValueError(f"circle status not computed at n={n}")
        hist: dict[int, int] = {}
        for r in recs:
            if pick(r):
                hist[r.delta] = hist.get(r.delta, 0) + 1
        per_n[n] = hist
    dmax = max((d for h in per_n.values() for d in h), default=0)
    rows = []
    for d in range(1, dmax + 1):
        rows.append([per_n[n].get(d) for n in ns])
    rows.append([sum(per_n[n].values()) for n in ns])
    titles = {
        "all": "Number of LC orbits of connected graphs by delta and n",
        "bipartite": "Number of LC orbits containing connected bipartite graphs by delta and n",
        "circle": "Number of LC orbits of connected circle graphs by delta and n",
    }
    return CountsTable(titles[family], [str(d) for d in range(1, dmax + 1)] + ["All"],
                       [str(n) for n in ns], rows, "delta\\n")


def degQ_q4_ranges(lc: Census, n_values: Iterable[int]) -> tuple[CountsTable, CountsTable]:
    """(deg Q range by (delta, n), Q(G,4)/2^n range by (n, delta)) over connected LC orbits."""
    ns = list(n_values)
    deg: dict[tuple[int, int], tuple[int, int]] = {}
    q4: dict[tuple[int, int], tuple[int, int]] = {}

    def widen(table: dict, key: tuple[int, int], v: int) -> None:
        lo, hi = table.get(key, (v, v))
        table[key] = (min(lo, v), max(hi, v))

    for n in ns:
        for r in lc.level(n):
            if r.poly is None:
                raise ValueError("census was built without polynomials")
            widen(deg, (r.delta, n), r.poly.degree)
            widen(q4, (r.delta, n), evaluate(r.poly, 4) // 2**n)
    dmax = max((d for d, _ in deg), default=0)
    deg_t = CountsTable("Range of deg(Q) for given delta and n", [str(d) for d in range(1, dmax + 1)],
                        [str(n) for n in ns],
                        [[deg.get((d, n)) for n in ns] for d in range(1, dmax + 1)], "delta\\n")
    q4_t = CountsTable("Range of Q(G,4)/2^n for given n and delta", [str(n) for n in ns],
                       [str(d) for d in range(1, dmax + 1)],
                       [[q4.get((d, n)) for d in range(1, dmax + 1)] for n in ns], "n\\delta")
    return deg_t, q4_t


def table4(lc: Census, n_values: Iterable[int]) -> CountsTable:
    return degQ_q4_ranges(lc, n_values)[0]


def table5(lc: Census, n_values: Iterable[int]) -> CountsTable:
    return degQ_q4_ranges(lc, n_values)[1]


def table7(lc: Census, n_values: Iterable[int]) -> CountsTable:
    return delta_table(lc, n_values, "bipartite")


def table8(lc: Census, n_values: Iterable[int]) -> CountsTable:
    return delta_table(lc, n_values, "all")


def circle_delta_table(lc: Census, n_values: Iterable[int]) -> CountsTable:
    return delta_table(lc, n_values, "circle")


def build_table(which: str, n_max: int, lc: Census | None = None, elc: Census | None = None) -> CountsTable:
    """Table by id: 1, 2, 3, 4, 5, 7 (bipartite by delta), 8 (all by delta), 7c (circle by delta)."""
    lc = lc or Census("LC")
    elc = elc or Census("ELC")
    from_two = range(2, n_max + 1)
    builders = {
        "1": lambda: table1(lc, elc, n_max),
        "2": lambda: table2(lc, elc, n_max),
        "3": lambda: table3(lc, n_max),
        "4": lambda: table4(lc, from_two),
        "5": lambda: table5(lc, from_two),
        "7": lambda: table7(lc, from_two),
        "8": lambda: table8(lc, from_two),
        "7c": lambda: circle_delta_table(lc, from_two),
    }
    if which not in builders:
        raise ValueError(f"unknown table {which!r}; choose from {sorted(builders)}")
    return builders[which]()
