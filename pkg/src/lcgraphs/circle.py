"""Circle graphs: obstruction scan over LC orbits and a chord-diagram oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

from .canon import contains_induced
from .graph import Graph, GraphError, parse_graph6
from .orbits import DEFAULT_BUDGET, Orbit, lc_orbit

__all__ = [
    "ChordDiagram",
    "OBSTRUCTIONS",
    "interlacement_graph",
    "realize_as_chords",
    "is_circle_graph",
    "orbit_is_circle",
    "has_obstruction",
    "chord_diagrams",
]

# Bouchet's obstructions, stored as graph6 (left to right as usually drawn):
#   W5  - hub 0 on the 5-cycle 1..5                              (6 vertices)
#   BW3 - hub 0 on rim 1,2,3; each rim edge subdivided by 4,5,6  (7 vertices)
#   W7  - hub 0 on the 7-cycle 1..7                              (8 vertices)
W5_G6 = "E|fG"
BW3_G6 = "FsWq_"
W7_G6 = "G|eKMC"

OBSTRUCTIONS: dict[str, Graph] = {
    "W5": parse_graph6(W5_G6),
    "BW3": parse_graph6(BW3_G6),
    "W7": parse_graph6(W7_G6),
}


@dataclass(frozen=True)
class ChordDiagram:
    """Double-occurrence word: each chord label appears exactly twice."""

    word: tuple[Hashable, ...]

    def __post_init__(self) -> None:
        counts: dict[Hashable, int] = {}
        for c in self.word:
            counts[c] = counts.get(c, 0) + 1
        bad = [c for c, k in counts.items() if k != 2]
        if bad:
            raise GraphError(f"labels {bad!r} do not occur exactly twice")

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def labels(self) -> list[Hashable]:
        """Chord labels in order of first occurrence (vertex order of the graph)."""
        seen: dict[Hashable, None] = {}
        for c in self.word:
            seen.setdefault(c, None)
        return list(seen)

    def normalized(self) -> tuple[int, ...]:
        """Least relabeled word over all rotations and reflections."""
        best = None
        w = list(self.word)
        for seq in (w, w[::-1]):
            for r in range(len(seq)):
                rot = seq[r:] + seq[:r]
                names: dict[Hashable, int] = {}
                code = tuple(names.setdefault(c, len(names)) for c in rot)
                if best is None or code < best:
                    best = code
        return best or ()

    def __str__(self) -> str:
        return "".join(str(c) for c in self.word)


def interlacement_graph(d: ChordDiagram | Sequence[Hashable]) -> Graph:
    """Vertices are chords (first-occurrence order); edges join crossing chords."""
    if not isinstance(d, ChordDiagram):
        d = ChordDiagram(tuple(d))
    index = {c: i for i, c in enumerate(d.labels())}
    n = len(index)
    first = [-1] * n
    second = [-1] * n
    for pos, c in enumerate(d.word):
        i = index[c]
        if first[i] < 0:
            first[i] = pos
        else:
            second[i] = pos
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if first[i] < first[j] < second[i] < second[j] or first[j] < first[i] < second[j] < second[i]:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def realize_as_chords(g: Graph, max_order: int = 8) -> ChordDiagram | None:
    """Search for a chord diagram whose interlacement graph is ``g``.

    Endpoints are placed left to right.  When a chord closes, the set of
    chords crossing it is already fixed, so it is checked against the
    neighbourhood right away.  Rotation lets vertex 0 open at position 0.
    Returns a word over the vertex labels of ``g`` (so the interlacement graph
    equals ``g`` up to the first-occurrence relabeling), or None.
    """
    n = g.n
    if n > max_order:
        raise ValueError(f"chord oracle limited to n <= {max_order}, got {n}")
    if n == 0:
        return ChordDiagram(())
    adj = g.adj
    word: list[int] = []
    opened_at = [-1] * n
    closed_at = [-1] * n

    def crossing(v: int, a: int, b: int) -> int:
        # chords with exactly one endpoint strictly between a and b
        mask = 0
        for w in range(n):
            if w == v or opened_at[w] < 0:
                continue
            o, c = opened_at[w], closed_at[w]
            if c < 0:
                hit = o > a
            else:
                hit = o < a < c
            if hit:
                mask |= 1 << w
        return mask

    def place(pos: int, open_mask: int, unused: int) -> bool:
        if pos == 2 * n:
            return True
        # close an open chord
        m = open_mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if crossing(v, opened_at[v], pos) != adj[v]:
                continue
            closed_at[v] = pos
            word.append(v)
            if place(pos + 1, open_mask ^ low, unused):
                return True
            word.pop()
            closed_at[v] = -1
        # open a new chord; remaining endpoints must fit
        if unused and 2 * unused.bit_count() + open_mask.bit_count() <= 2 * n - pos:
            m = unused
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                opened_at[v] = pos
                word.append(v)
                if place(pos + 1, open_mask | low, unused ^ low):
                    return True
                word.pop()
                opened_at[v] = -1
        return False

    opened_at[0] = 0
    word.append(0)
    if place(1, 1, ((1 << n) - 1) ^ 1):
        return ChordDiagram(tuple(word))
    return None


def chord_diagrams(n: int) -> Iterator[tuple[int, ...]]:
    """All perfect matchings of 2n points on a line, as words over 0..n-1
    labeled by order of first occurrence ((2n-1)!! words)."""
    word = [-1] * (2 * n)

    def rec(pos: int, label: int) -> Iterator[tuple[int, ...]]:
        while pos < 2 * n and word[pos] >= 0:
            pos += 1
        if pos == 2 * n:
            yield tuple(word)
            return
        word[pos] = label
        for j in range(pos + 1, 2 * n):
            if word[j] < 0:
                word[j] = label
                yield from rec(pos + 1, label + 1)
                word[j] = -1
        word[pos] = -1

    yield from rec(0, 0)


def has_obstruction(g: Graph) -> bool:
    """True iff ``g`` contains one of the obstructions as an induced subgraph."""
    return any(h.n <= g.n and contains_induced(g, h) for h in OBSTRUCTIONS.values())


def orbit_is_circle(o: Orbit) -> bool:
    return not any(has_obstruction(m) for m in o.graphs())


def is_circle_graph(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """No member of the LC orbit of ``g`` contains an obstruction as an induced subgraph."""
    if g.n < 6:
        return True
    return orbit_is_circle(lc_orbit(g, budget))

