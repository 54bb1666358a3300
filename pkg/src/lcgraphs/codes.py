"""Self-dual code metrics of LC orbits, bounds, and graph constructions."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal

from .graph import Graph, GraphError, MAX_ORDER, is_anti_eulerian, is_connected
from .interlace import InterlaceCache, evaluate, interlace_Q
from .orbits import DEFAULT_BUDGET, OrbitBudgetExceeded, lc_orbit, orbit_min_degree

__all__ = [
    "CodeMetrics",
    "metrics",
    "cmf",
    "code_type",
    "gamma",
    "q4_upper_bound",
    "delta_upper_bound",
    "paley_graph",
    "bordered_paley",
    "parse_circulant",
    "circulant_graph",
    "parse_adjacency_matrix",
    "METRICS_CSV_HEADER",
]

METRICS_CSV_HEADER = "n,delta,degQ,q4norm,cmf_num,cmf_den,type"


@dataclass(frozen=True)
class CodeMetrics:
    n: int
    delta: int | None  # None when the LC orbit was too large to enumerate
    degQ: int
    q4_norm: int
    cmf: Fraction
    type: Literal["I", "II"]

    def csv_row(self) -> str:
        delta = "" if self.delta is None else str(self.delta)
        return f"{self.n},{delta},{self.degQ},{self.q4_norm},{self.cmf.numerator},{self.cmf.denominator},{self.type}"


def code_type(g: Graph) -> Literal["I", "II"]:
    return "II" if is_anti_eulerian(g) else "I"


def cmf(n: int, q4: int) -> Fraction:
    """Clifford merit factor 6^n / (2^n Q(G,4) - 6^n)."""
    den = 2**n * q4 - 6**n
    if den <= 0:
        raise ArithmeticError(f"non-positive CMF denominator {den} (n={n}, Q(G,4)={q4})")
    return Fraction(6**n, den)


def metrics(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    cache: InterlaceCache | None = None,
    require_delta: bool = True,
) -> CodeMetrics:
    """delta, deg Q, Q(G,4)/2^n, CMF and code type of the LC orbit of ``g``.

    With ``require_delta=False`` an orbit over ``budget`` members leaves
    ``delta`` as None instead of raising.
    """
    if not is_connected(g):
        raise GraphError("code metrics need a connected graph")
    try:
        delta = orbit_min_degree(lc_orbit(g, budget))
    except OrbitBudgetExceeded:
        if require_delta:
            raise
        delta = None
    Q = interlace_Q(g, cache)
    q4 = evaluate(Q, 4)
    norm, rem = divmod(q4, 2**g.n)
    if rem:
        raise ArithmeticError(f"Q(G,4) = {q4} not divisible by 2^{g.n}")
    return CodeMetrics(g.n, delta, Q.degree, norm, cmf(g.n, q4), code_type(g))


def gamma(n: int, d: int) -> int:
    """sum_t C(n,t) 2^t sum_{k=max(1, d+t-n)}^{t} C(t,k) 2^(n-k)."""
    if not 1 <= d <= n + 1:
        raise ValueError(f"need 1 <= d <= n+1, got d={d}, n={n}")
    total = 0
    for t in range(n + 1):
        inner = sum(comb(t, k) * 2 ** (n - k) for k in range(max(1, d + t - n), t + 1))
        total += comb(n, t) * 2**t * inner
    return total


def q4_upper_bound(n: int, delta: int) -> Fraction:
    """Upper bound (gamma(delta+1) + 6^n) / 2^n on Q(G,4); ``int(...)`` gives the floor."""
    if delta < 1:
        raise ValueError("delta must be at least 1")
    return Fraction(gamma(n, delta + 1) + 6**n, 2**n)


def delta_upper_bound(n: int, kind: str) -> int:
    """Largest delta allowed for a Type I or Type II code of length ``n``."""
    base = 2 * (n // 6)
    kind = kind.upper()
    if kind == "II":
        if n % 2:
            raise ValueError("Type II codes have even length")
        return base + 1
    if kind != "I":
        raise ValueError(f"unknown code type {kind!r}")
    if n % 6 == 0:
        return base
    if n % 6 == 5:
        return base + 2
    return base + 1


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def paley_graph(p: int) -> Graph:
    """Vertices Z_p; i ~ j iff i - j is a nonzero square mod p (p prime, p = 1 mod 4)."""
    if not _is_prime(p):
        raise GraphError(f"{p} is not prime (prime powers are not supported)")
    if p % 4 != 1:
        raise GraphError(f"{p} is not 1 mod 4")
    if p > MAX_ORDER:
        raise GraphError(f"order {p} exceeds {MAX_ORDER}")
    squares = {x * x % p for x in range(1, p)}
    first = [1 if k in squares else 0 for k in range(p)]
    return circulant_graph(first)


def bordered_paley(p: int) -> Graph:
    """Paley graph plus one vertex joined to every other vertex."""
    if p + 1 > MAX_ORDER:
        raise GraphError(f"order {p + 1} exceeds {MAX_ORDER}")
    g = paley_graph(p)
    hub = 1 << p
    rows = [row | hub for row in g.adj] + [hub - 1]
    return Graph(p + 1, rows)


def circulant_graph(first_row: list[int]) -> Graph:
    """Row i is the first row shifted cyclically i places to the right."""
    n = len(first_row)
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    if first_row and first_row[0]:
        raise GraphError("first row has a self-loop bit")
    for k in range(1, n):
        if first_row[k] != first_row[n - k]:
            raise GraphError(f"circulant row is not symmetric at offset {k}")
    rows = []
    for i in range(n):
        r = 0
        for j in range(n):
            if first_row[(j - i) % n]:
                r |= 1 << j
        rows.append(r)
    return Graph(n, rows)


def parse_circulant(text: str) -> Graph:
    """Parse a first row like ``(00001011101000)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body or set(body) - {"0", "1"}:
        raise GraphError(f"circulant row must be 0/1 characters: {text!r}")
    return circulant_graph([int(c) for c in body])


def parse_adjacency_matrix(text: str) -> Graph:
    """Whitespace-separated 0/1 entries, one matrix row per line.

    ``&`` separators and ``\\\\`` line ends (as in LaTeX arrays) are tolerated.
    """
    rows = []
    for line in text.strip().splitlines():
        line = re.sub(r"[&\\]", " ", line).strip()
        if not line:
            continue
        toks = line.split()
        if any(t not in ("0", "1") for t in toks):
            raise GraphError(f"matrix entries must be 0 or 1: {line!r}")
        rows.append([int(t) for t in toks])
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise GraphError("adjacency matrix is not square")
    for i in range(n):
        if rows[i][i]:
            raise GraphError(f"nonzero diagonal entry at {i}")
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise GraphError(f"matrix not symmetric at ({i},{j})")
    return Graph(n, [sum(1 << j for j in range(n) if r[j]) for r in rows])
