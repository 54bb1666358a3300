"""LC and ELC orbits: breadth-first closure over canonical forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Literal

from .canon import CanonicalForm, canonize
from .graph import Graph, GraphError, bits, independence_number, parse_graph6
from .ops import edge_local_complement, local_complement, lc_rows, pivot_rows

__all__ = [
    "Orbit",
    "OrbitBudgetExceeded",
    "DEFAULT_BUDGET",
    "local_complement",
    "edge_local_complement",
    "lc_orbit",
    "elc_orbit",
    "orbit",
    "orbit_min_degree",
    "orbit_max_independence",
    "lc_neighbors",
    "elc_neighbors",
    "format_orbit_dump",
    "parse_orbit_dump",
]

Kind = Literal["LC", "ELC"]
DEFAULT_BUDGET = 10**7


class OrbitBudgetExceeded(RuntimeError):
    """The orbit has more members than the configured budget allows."""


@dataclass(frozen=True)
class Orbit:
    kind: str
    n: int
    members: frozenset[CanonicalForm]
    _rows: dict[CanonicalForm, tuple[int, ...]] = field(repr=False, compare=False, default_factory=dict)

    @property
    def representative(self) -> CanonicalForm:
        return min(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, form: object) -> bool:
        return form in self.members

    def graphs(self) -> Iterator[Graph]:
        """Member graphs (canonically labeled) in sorted order of their forms."""
        for form in sorted(self.members):
            rows = self._rows.get(form)
            yield Graph(self.n, rows, check=False) if rows is not None else parse_graph6(form)


def lc_neighbors(n: int, adj: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for v in range(n):
        if adj[v].bit_count() > 1:
            yield lc_rows(adj, v)


def elc_neighbors(n: int, adj: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # the label swap is irrelevant once the result is canonicalized
    for u in range(n):
        for v in bits(adj[u] >> (u + 1)):
            yield pivot_rows(adj, u, u + 1 + v)


_EXPAND = {"LC": lc_neighbors, "ELC": elc_neighbors}


def _closure(
    g: Graph,
    kind: str,
    budget: int,
    visit: Callable[[CanonicalForm, tuple[int, ...]], None] | None = None,
) -> dict[CanonicalForm, tuple[int, ...]]:
    kind = kind.upper()
    if kind not in _EXPAND:
        raise ValueError(f"unknown orbit kind {kind!r}")
    if g.n < 1:
        raise GraphError("orbits need at least one vertex")
    expand = _EXPAND[kind]
    n = g.n
    form, rows = canonize(n, g.adj)
    seen = {form: rows}
    if visit:
        visit(form, rows)
    queue = deque([rows])
    while queue:
        cur = queue.popleft()
        for nxt in expand(n, cur):
            f, r = canonize(n, nxt)
            if f not in seen:
                if len(seen) >= budget:
                    raise OrbitBudgetExceeded(f"{kind} orbit exceeds {budget} members")
                seen[f] = r
                if visit:
                    visit(f, r)
                queue.append(r)
    return seen


def orbit(g: Graph, kind: str = "LC", budget: int = DEFAULT_BUDGET) -> Orbit:
    members = _closure(g, kind, budget)
    return Orbit(kind.upper(), g.n, frozenset(members), members)


def lc_orbit(g: Graph, budget: int = DEFAULT_BUDGET) -> Orbit:
    return orbit(g, "LC", budget)


def elc_orbit(g: Graph, budget: int = DEFAULT_BUDGET) -> Orbit:
    return orbit(g, "ELC", budget)


def orbit_min_degree(o: Orbit) -> int:
    """Minimum vertex degree over all members (delta)."""
    return min(g.min_degree() for g in o.graphs())


def orbit_max_independence(o: Orbit) -> int:
    return max(independence_number(g) for g in o.graphs())


def format_orbit_dump(o: Orbit) -> str:
    lines = [f"# kind={o.kind} n={o.n} size={len(o)}"]
    lines.extend(sorted(o.members))
    return "\n".join(lines) + "\n"


def parse_orbit_dump(text: str | Iterable[str]) -> Orbit:
    lines = text.splitlines() if isinstance(text, str) else [l.rstrip("\n") for l in text]
    header = lines[0]
    if not header.startswith("# "):
        raise ValueError("orbit dump must start with a '# kind=... n=... size=...' line")
    fields = dict(part.split("=", 1) for part in header[2:].split())
    members = [l.strip() for l in lines[1:] if l.strip()]
    if len(members) != int(fields["size"]):
        raise ValueError(f"header says size={fields['size']}, found {len(members)} members")
    return Orbit(fields["kind"], int(fields["n"]), frozenset(members))
