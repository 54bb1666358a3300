"""Canonical labeling by partition refinement and backtracking.

The canonical form of a graph is the graph6 string of its canonically
relabeled copy.  Two graphs have equal canonical forms iff they are
isomorphic.  The search individualizes vertices of the first non-singleton
cell of an equitable ordered partition, keeps the least leaf certificate,
and skips children equivalent under automorphisms found along the way.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph, graph6_from_rows, _induced_rows

CanonicalForm = str


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; sub-cells ordered by neighbour-count signature."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple([(a & m).bit_count() for m in masks])
                g = groups.get(key)
                if g is None:
                    groups[key] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                split = True
                for key in sorted(groups):
                    new.append(groups[key])
        if not split:
            return new
        cells = new


def _orbit_roots(autos: list[list[int]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in autos:
        for v, w in enumerate(perm):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(n: int, adj: Sequence[int]) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(lab, rows)``: ``lab[i]`` is the vertex placed at position ``i``
    and ``rows`` the adjacency rows of the canonically relabeled graph."""
    if n <= 1:
        return list(range(n)), tuple(adj)

    best_cert = -1
    best_lab: list[int] = []
    best_rows: tuple[int, ...] = ()
    first_cert = -1
    first_lab: list[int] = []
    first_path: list[int] = []
    best_path: list[int] = []
    autos: list[list[int]] = []

    def leaf(cells: list[list[int]], path: list[int]) -> int:
        """Process a discrete partition; return the level to backtrack to."""
        nonlocal best_cert, best_lab, best_rows, best_path, first_cert, first_lab, first_path
        lab = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        cert = 0
        for v in lab:
            a = adj[v]
            r = 0
            while a:
                low = a & -a
                r |= 1 << pos[low.bit_length() - 1]
                a ^= low
            rows.append(r)
            cert = (cert << n) | r
        if first_cert < 0:
            first_cert, first_lab, first_path = cert, lab, path
            best_cert, best_lab, best_rows, best_path = cert, lab, tuple(rows), path
            return len(path)
        if cert == first_cert or cert == best_cert:
            ref, ref_path = (first_lab, first_path) if cert == first_cert else (best_lab, best_path)
            perm = [0] * n
            for i in range(n):
                perm[ref[i]] = lab[i]
            autos.append(perm)
            # the branch below the divergence point mirrors an explored one
            k = 0
            while k < len(path) and k < len(ref_path) and path[k] == ref_path[k]:
                k += 1
            return k
        if cert < best_cert:
            best_cert, best_lab, best_rows, best_path = cert, lab, tuple(rows), path
        return len(path)

    def search(cells: list[list[int]], prefix: list[int]) -> int:
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            return leaf(cells, prefix)
        depth = len(prefix)
        tried: list[int] = []
        seen_autos = -1
        roots: list[int] = []
        for w in cell:
            if tried:
                if len(autos) != seen_autos:
                    seen_autos = len(autos)
                    fixing = [p for p in autos if all(p[x] == x for x in prefix)]
                    roots = _orbit_roots(fixing, n) if fixing else []
                if roots and any(roots[w] == roots[t] for t in tried):
                    continue
            tried.append(w)
            rest = [x for x in cell if x != w]
            child = cells[:idx] + [[w], rest] + cells[idx + 1:]
            back = search(_refine(adj, child), prefix + [w])
            if back < depth:
                return back
        return depth

    search(_refine(adj, [list(range(n))]), [])
    return best_lab, best_rows


def canonize(n: int, adj: Sequence[int]) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical graph6 string and canonical adjacency rows."""
    _, rows = canonical_labeling(n, adj)
    return graph6_from_rows(n, rows), rows


def canonical_form(g: Graph) -> CanonicalForm:
    _, rows = canonical_labeling(g.n, g.adj)
    return graph6_from_rows(g.n, rows)


def canonical_graph(g: Graph) -> Graph:
    _, rows = canonical_labeling(g.n, g.adj)
    return Graph(g.n, rows, check=False)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of ``g`` induces a copy of ``h``."""
    k = h.n
    if k > g.n:
        return False
    target = canonical_form(h)
    hedges = h.num_edges()
    hdeg = sorted(h.degrees())
    for vs in combinations(range(g.n), k):
        rows = _induced_rows(g.adj, vs)
        if sum(r.bit_count() for r in rows) != 2 * hedges:
            continue
        if sorted(r.bit_count() for r in rows) != hdeg:
            continue
        if canonize(k, rows)[0] == target:
            return True
    return False
