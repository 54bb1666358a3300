"""Simple undirected graphs on at most 32 vertices, stored as adjacency bit masks.

Row ``adj[v]`` has bit ``w`` set iff ``{v, w}`` is an edge.  Graphs are
immutable values; every operation returns a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

MAX_ORDER = 32
GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Malformed graph input or an out-of-range vertex/capacity request."""


class Graph:
    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int] | None = None, *, check: bool = True):
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if check:
            if not 0 <= n <= MAX_ORDER:
                raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
            if len(adj) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"row {v} has bits at positions >= n")
                if row >> v & 1:
                    raise GraphError(f"self-loop at vertex {v}")
                w = row
                while w:
                    low = w & -w
                    u = low.bit_length() - 1
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric edge {v}-{u}")
                    w ^= low
        self.n = n
        self.adj = adj

    # construction helpers

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def wheel(cls, rim: int) -> Graph:
        """Hub (vertex 0) joined to every vertex of a ``rim``-cycle on 1..rim."""
        edges = [(0, i) for i in range(1, rim + 1)]
        edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
        return cls.from_edges(rim + 1, edges)

    @classmethod
    def from_graph6(cls, text: str | bytes) -> Graph:
        return parse_graph6(text)

    # value semantics

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({encode_graph6(self)!r})"

    def __len__(self) -> int:
        return self.n

    # queries

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.adj]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, _permute_rows(self.adj, perm), check=False)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _permute_rows(adj: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    n = len(adj)
    rows = [0] * n
    for v in range(n):
        row = adj[v]
        new = 0
        while row:
            low = row & -row
            new |= 1 << perm[low.bit_length() - 1]
            row ^= low
        rows[perm[v]] = new
    return tuple(rows)


# graph6


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header, trailing newline)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise GraphError("empty graph6 line")
    codes = [ord(c) - 63 for c in line]
    for c, val in zip(line, codes):
        if not 0 <= val <= 63:
            raise GraphError(f"character {c!r} outside graph6 range 63..126")
    n = codes[0]
    if n == 63:
        raise GraphError("graph6 orders >= 63 are not supported (n <= 32)")
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = codes[1:]
    if len(body) < nchars:
        raise GraphError(f"truncated graph6 bit field: need {nchars} chars, got {len(body)}")
    if len(body) > nchars:
        raise GraphError(f"trailing characters after graph6 bit field ({len(body) - nchars} extra)")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows, check=False)


def encode_graph6(g: Graph) -> str:
    return graph6_from_rows(g.n, g.adj)


def graph6_from_rows(n: int, adj: Sequence[int]) -> str:
    out = [chr(n + 63)]
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = 0
                nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterable[Graph]:
    """Yield graphs from graph6 lines, skipping blanks and ``#`` comments."""
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield parse_graph6(line)


# structural operations


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; survivors keep their relative order."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return Graph(g.n - 1, _delete_rows(g.adj, v), check=False)


def _delete_rows(adj: Sequence[int], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    rows = []
    for u, row in enumerate(adj):
        if u != v:
            rows.append((row & low) | ((row >> (v + 1)) << v))
    return tuple(rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0..k-1 in increasing order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return Graph(len(vs), _induced_rows(g.adj, vs), check=False)


def _induced_rows(adj: Sequence[int], vs: Sequence[int]) -> tuple[int, ...]:
    rows = []
    for v in vs:
        row = adj[v]
        new = 0
        for i, w in enumerate(vs):
            if row >> w & 1:
                new |= 1 << i
        rows.append(new)
    return tuple(rows)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(bits(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << g.n) - 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in bits(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_anti_eulerian(g: Graph) -> bool:
    """True iff every vertex has odd degree."""
    return all(row.bit_count() & 1 for row in g.adj)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)], check=False)


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add a new last vertex with the same neighbourhood as ``v`` (not joined to ``v``)."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    if g.n >= MAX_ORDER:
        raise GraphError(f"cannot exceed {MAX_ORDER} vertices")
    new = g.n
    nbrs = g.adj[v]
    rows = [row | (1 << new) if nbrs >> u & 1 else row for u, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(g.n + 1, rows, check=False)


def substitute_clique(g: Graph, v: int, m: int) -> Graph:
    """Replace ``v`` by an ``m``-clique whose vertices all inherit ``N(v)``.

    ``v`` keeps its label; the ``m - 1`` extra clique vertices are appended.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    if m < 1:
        raise GraphError("clique size must be at least 1")
    if g.n + m - 1 > MAX_ORDER:
        raise GraphError(f"cannot exceed {MAX_ORDER} vertices")
    h = g
    for _ in range(m - 1):
        h = duplicate_vertex(h, v)
    clique = [v] + list(range(g.n, h.n))
    rows = list(h.adj)
    cmask = sum(1 << c for c in clique)
    for c in clique:
        rows[c] |= cmask ^ (1 << c)
    return Graph(h.n, rows, check=False)


# GF(2) linear algebra


class Gf2Matrix:
    """Dense matrix over GF(2); ``rows[i]`` bit ``j`` is entry (i, j)."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Sequence[int], ncols: int):
        if len(rows) > MAX_ORDER or ncols > MAX_ORDER:
            raise GraphError(f"GF(2) matrices are limited to {MAX_ORDER}x{MAX_ORDER}")
        self.rows = tuple(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls([1 << i for i in range(n)], n)

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        return Gf2Matrix([a ^ b for a, b in zip(self.rows, other.rows)], self.ncols)

    def rank(self) -> int:
        return gf2_rank(self)


def gf2_rank(m: Gf2Matrix | Sequence[int]) -> int:
    rows = list(m.rows if isinstance(m, Gf2Matrix) else m)
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
    return rank


def adjacency_plus_identity(g: Graph) -> Gf2Matrix:
    return Gf2Matrix([row | (1 << v) for v, row in enumerate(g.adj)], g.n)


def independence_number(g: Graph) -> int:
    """Size of a maximum independent set (branch and bound on bit masks)."""
    return _mis_size(g.adj, (1 << g.n) - 1)


def _mis_size(adj: Sequence[int], mask: int) -> int:
    best = 0

    def grow(mask: int, size: int) -> None:
        nonlocal best
        while mask:
            if size + mask.bit_count() <= best:
                return
            # take vertices with no neighbour left in the mask for free
            v = -1
            low_deg = None
            m = mask
            while m:
                low = m & -m
                u = low.bit_length() - 1
                d = (adj[u] & mask).bit_count()
                if d == 0:
                    v = u
                    break
                if low_deg is None or d > low_deg[0]:
                    low_deg = (d, u)
                m ^= low
            if v >= 0:
                mask &= ~(1 << v)
                size += 1
                continue
            u = low_deg[1]
            grow(mask & ~adj[u] & ~(1 << u), size + 1)
            mask &= ~(1 << u)
        if size > best:
            best = size

    grow(mask, 0)
    return best
