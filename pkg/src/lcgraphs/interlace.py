"""Interlace polynomials q and Q, exact evaluations, oracles and identity checks.

Both polynomials are computed by the vertex-removal recursion

    q(G) = q(G \\ u) + q(G^(uv) \\ u)
    Q(G) = Q(G \\ u) + Q(G^(uv) \\ u) + Q(G*u \\ u)

with ``q(E_n) = Q(E_n) = x^n``.  Subproblems are memoized on their canonical
form, so a cache can be shared between calls (and between graphs of a
census run).
"""

from __future__ import annotations

import json
import re
import threading
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .canon import canonize
from .graph import (
    Graph,
    _delete_rows,
    _induced_rows,
    adjacency_plus_identity,
    delete_vertex,
    duplicate_vertex,
    gf2_rank,
    independence_number,
    substitute_clique,
)
from .ops import lc_rows, pivot_rows

__all__ = [
    "Polynomial",
    "Rational",
    "InterlaceCache",
    "IdentityViolation",
    "interlace_q",
    "interlace_Q",
    "evaluate",
    "is_unimodal",
    "count_induced_eulerian",
    "count_odd_pm_subgraphs",
    "rank_corank_check",
    "odd_quotient_check",
    "duplication_identity",
    "substitution_identity",
    "independence_number",
    "shifted_q",
]

Rational = Fraction


class IdentityViolation(ArithmeticError):
    """An identity that should hold for every graph failed on this input."""


# dense integer polynomials


def _norm(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _norm(out)


def _pmul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _norm(out)


_TERM = re.compile(r"([+-]?)(\d*)(x(?:\^(\d+))?)?")


class Polynomial:
    """Polynomial with exact integer coefficients; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _norm(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def from_json(cls, text: str | list) -> Polynomial:
        data = json.loads(text) if isinstance(text, str) else text
        return cls(int(c) for c in data)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lowest_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __call__(self, x: int | Fraction) -> int | Fraction:
        return evaluate(self, x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: Polynomial) -> bool:
        return (len(self.coeffs), self.coeffs) < (len(other.coeffs), other.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial(_padd(self.coeffs, other.coeffs))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        return Polynomial(_pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def sequence(self, pad_to: int | None = None) -> tuple[int, ...]:
        """Coefficients ``(a_1, ..., a_d)``, optionally zero-padded to length ``pad_to``."""
        seq = list(self.coeffs[1:])
        if pad_to is not None and len(seq) < pad_to:
            seq += [0] * (pad_to - len(seq))
        return tuple(seq)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """Inverse of ``str``: terms like ``10x^2 + 12x - 3``."""
        body = text.replace(" ", "")
        if not body:
            raise ValueError("empty polynomial")
        if body == "0":
            return cls()
        coeffs: dict[int, int] = {}
        pos = 0
        for m in _TERM.finditer(body):
            if m.start() != pos or not m.group(0):
                raise ValueError(f"cannot parse polynomial {text!r}")
            pos = m.end()
            sign, num, var, exp = m.groups()
            if (not num and not var) or (m.start() > 0 and not sign):
                raise ValueError(f"cannot parse polynomial {text!r}")
            c = int(num) if num else 1
            k = (int(exp) if exp else 1) if var else 0
            coeffs[k] = coeffs.get(k, 0) + (-c if sign == "-" else c)
            if pos == len(body):
                break
        if pos != len(body):
            raise ValueError(f"cannot parse polynomial {text!r}")
        out = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return cls(out)

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"


def evaluate(p: Polynomial | Sequence[int], x: int | Fraction) -> int | Fraction:
    coeffs = p.coeffs if isinstance(p, Polynomial) else p
    acc: int | Fraction = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def is_unimodal(seq: Sequence[int]) -> bool:
    """Non-decreasing up to some index, non-increasing afterwards."""
    i, m = 0, len(seq)
    while i + 1 < m and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < m and seq[i] >= seq[i + 1]:
        i += 1
    return i >= m - 1


def shifted_q(p: Polynomial) -> Polynomial:
    """``x * p(x + 1)``."""
    out = [0] * (len(p.coeffs) + 1)
    for k, c in enumerate(p.coeffs):
        for j in range(k + 1):
            out[j + 1] += c * comb(k, j)
    return Polynomial(out)


# the recursion


class MemoBudgetExceeded(RuntimeError):
    """The memo table would grow past its entry budget."""


class InterlaceCache:
    """Memo tables for q and Q keyed by canonical graph6 form.

    Safe to share between threads: entries are only ever added, and a
    duplicate insert stores an identical value.  ``max_entries`` caps the
    combined size of both tables.
    """

    def __init__(self, max_entries: int | None = None) -> None:
        if max_entries is not None and max_entries < 1:
            raise ValueError("max_entries must be positive")
        self.q: dict[str, tuple[int, ...]] = {}
        self.Q: dict[str, tuple[int, ...]] = {}
        self.max_entries = max_entries
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.q) + len(self.Q)

    def store(self, table: dict, key: str, value: tuple[int, ...]) -> None:
        with self._lock:
            if self.max_entries is not None and key not in table and len(self) >= self.max_entries:
                raise MemoBudgetExceeded(f"memo exceeds {self.max_entries} entries")
            table.setdefault(key, value)


_DEFAULT_CACHE = InterlaceCache()


def _strip_isolated(n: int, adj: Sequence[int]) -> tuple[int, int, tuple[int, ...]]:
    keep = [v for v in range(n) if adj[v]]
    if len(keep) == n:
        return 0, n, tuple(adj)
    return n - len(keep), len(keep), _induced_rows(adj, keep)


def _interlace(n: int, adj: Sequence[int], three_term: bool, cache: InterlaceCache) -> tuple[int, ...]:
    iso, n, adj = _strip_isolated(n, adj)
    if n == 0:
        return (0,) * iso + (1,)
    table = cache.Q if three_term else cache.q
    key = canonize(n, adj)[0]
    hit = table.get(key)
    if hit is None:
        u = 0
        row = adj[u]
        v = (row & -row).bit_length() - 1
        hit = _interlace(n - 1, _delete_rows(adj, u), three_term, cache)
        piv = pivot_rows(adj, u, v)
        hit = _padd(hit, _interlace(n - 1, _delete_rows(piv, v), three_term, cache))
        if three_term:
            loc = lc_rows(adj, u)
            hit = _padd(hit, _interlace(n - 1, _delete_rows(loc, u), three_term, cache))
        cache.store(table, key, hit)
    return (0,) * iso + hit if iso else hit


def interlace_q(g: Graph, cache: InterlaceCache | None = None) -> Polynomial:
    """The (vertex-nullity) interlace polynomial q(G)."""
    return Polynomial(_interlace(g.n, g.adj, False, _DEFAULT_CACHE if cache is None else cache))


def interlace_Q(g: Graph, cache: InterlaceCache | None = None) -> Polynomial:
    """The global interlace polynomial Q(G)."""
    return Polynomial(_interlace(g.n, g.adj, True, _DEFAULT_CACHE if cache is None else cache))


def interlace_unmemoized(g: Graph, three_term: bool, rng=None) -> Polynomial:
    """Plain recursion with no cache; ``rng`` picks a random edge at each step.

    Slow, used to check that the result does not depend on the edge chosen.
    """

    def rec(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
        edges = [(u, w) for u in range(n) for w in range(n) if adj[u] >> w & 1]
        if not edges:
            return (0,) * n + (1,)
        u, v = rng.choice(edges) if rng is not None else edges[0]
        out = rec(n - 1, _delete_rows(adj, u))
        out = _padd(out, rec(n - 1, _delete_rows(pivot_rows(adj, u, v), v)))
        if three_term:
            out = _padd(out, rec(n - 1, _delete_rows(lc_rows(adj, u), u)))
        return out

    return Polynomial(rec(g.n, g.adj))


# brute-force oracles


def count_induced_eulerian(g: Graph, max_order: int = 16) -> int:
    """Vertex subsets (including the empty one) inducing a graph with all degrees even."""
    if g.n > max_order:
        raise ValueError(f"oracle limited to n <= {max_order}, got {g.n}")
    adj = g.adj
    count = 0
    for s in range(1 << g.n):
        m = s
        ok = True
        while m:
            low = m & -m
            if (adj[low.bit_length() - 1] & s).bit_count() & 1:
                ok = False
                break
            m ^= low
        count += ok
    return count


def count_odd_pm_subgraphs(g: Graph, max_order: int = 12) -> int:
    """Vertex subsets whose induced subgraph has an odd number of perfect matchings.

    Perfect matchings are counted exactly by pairing the lowest vertex of each
    subset with each of its neighbours in the subset.
    """
    if g.n > max_order:
        raise ValueError(f"oracle limited to n <= {max_order}, got {g.n}")
    adj = g.adj
    pm = [0] * (1 << g.n)
    pm[0] = 1
    for s in range(1, 1 << g.n):
        if s.bit_count() & 1:
            continue
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        nb = adj[v] & rest
        total = 0
        while nb:
            b = nb & -nb
            total += pm[rest ^ b]
            nb ^= b
        pm[s] = total
    return sum(1 for c in pm if c & 1)


# identity checks


class CorankResult(NamedTuple):
    rank: int
    value: int


def rank_corank_check(g: Graph, cache: InterlaceCache | None = None) -> CorankResult:
    """GF(2) rank of Gamma + I and q(G, -1); ``|q(G,-1)| == 2**(n - rank)``."""
    r = gf2_rank(adjacency_plus_identity(g))
    value = evaluate(interlace_q(g, cache), -1)
    if abs(value) != 2 ** (g.n - r):
        raise IdentityViolation(f"|q(G,-1)| = {abs(value)} != 2^{g.n - r} for {g.to_graph6()}")
    return CorankResult(r, value)


def odd_quotient_check(g: Graph, cache: InterlaceCache | None = None) -> int:
    """q(G,3) / q(G,1); raises IdentityViolation unless it is an odd integer."""
    p = interlace_q(g, cache)
    q1, q3 = evaluate(p, 1), evaluate(p, 3)
    if q1 == 0:
        raise ValueError("q(G,1) is zero")
    quot, rem = divmod(q3, q1)
    if rem or not quot & 1:
        raise IdentityViolation(f"q(G,3)/q(G,1) = {q3}/{q1} is not an odd integer for {g.to_graph6()}")
    return quot


def duplication_identity(g: Graph, v: int, cache: InterlaceCache | None = None) -> tuple[Polynomial, Polynomial]:
    """``(q(G'), (1+x) q(G) - x q(G \\ v))`` where G' duplicates ``v``."""
    lhs = interlace_q(duplicate_vertex(g, v), cache)
    x = Polynomial.monomial(1)
    rhs = (Polynomial([1, 1]) * interlace_q(g, cache)) - x * interlace_q(delete_vertex(g, v), cache)
    return lhs, rhs


def substitution_identity(g: Graph, v: int, m: int, cache: InterlaceCache | None = None) -> tuple[Polynomial, Polynomial]:
    """``(q(G'), 2**(m-1) q(G))`` where G' replaces ``v`` by an ``m``-clique.

    The factor counts the ``m - 1`` vertices added; ``m = 1`` leaves G unchanged.
    """
    lhs = interlace_q(substitute_clique(g, v, m), cache)
    rhs = interlace_q(g, cache) * (2 ** (m - 1))
    return lhs, rhs
