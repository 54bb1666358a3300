"""Local complementation and edge-local complementation (pivoting)."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError


def lc_rows(adj: Sequence[int], v: int) -> tuple[int, ...]:
    nv = adj[v]
    rows = list(adj)
    m = nv
    while m:
        low = m & -m
        u = low.bit_length() - 1
        rows[u] ^= nv ^ low
        m ^= low
    return tuple(rows)


def pivot_rows(adj: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Toggle all pairs across the classes A, B, C of edge ``uv`` (no label swap)."""
    nu, nv = adj[u], adj[v]
    ends = (1 << u) | (1 << v)
    a = nu & ~nv & ~ends
    b = nv & ~nu & ~ends
    c = nu & nv
    rows = list(adj)
    for cls, other in ((a, b | c), (b, a | c), (c, a | b)):
        m = cls
        while m:
            low = m & -m
            rows[low.bit_length() - 1] ^= other
            m ^= low
    return tuple(rows)


def swap_rows(adj: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    rows = list(adj)
    rows[u], rows[v] = rows[v], rows[u]
    bu, bv = 1 << u, 1 << v
    for i, r in enumerate(rows):
        hu, hv = r & bu, r & bv
        if bool(hu) != bool(hv):
            rows[i] = r ^ bu ^ bv
    return tuple(rows)


def local_complement(g: Graph, v: int) -> Graph:
    """G * v: complement the subgraph induced on the neighbourhood of ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return Graph(g.n, lc_rows(g.adj, v), check=False)


def edge_local_complement(g: Graph, u: int, v: int) -> Graph:
    """G^(uv): toggle pairs across the neighbourhood classes, then swap ``u`` and ``v``."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.adj[u] >> v & 1:
        raise GraphError(f"{{{u},{v}}} is not an edge")
    return Graph(g.n, swap_rows(pivot_rows(g.adj, u, v), u, v), check=False)
