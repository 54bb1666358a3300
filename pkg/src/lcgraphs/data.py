"""Adjacency matrices and best-known values for self-dual quantum codes, 13 <= n <= 25.

Each row of ``TABLE6`` is ``(n, delta, degQ, Q(G,4)/2^n, adjacency)`` where
adjacency is a circulant first row or the name of a matrix in ``MATRICES``.
"""

from __future__ import annotations

from .codes import parse_adjacency_matrix, parse_circulant
from .graph import Graph

GAMMA_13_1 = """
0 1 0 0 0 0 0 0 0 1 1 1 1
1 0 1 0 0 0 0 1 0 0 0 1 1
0 1 0 1 0 1 0 0 0 0 0 1 1
0 0 1 0 0 0 1 0 0 0 1 1 1
0 0 0 0 0 1 0 1 0 0 1 1 1
0 0 1 0 1 0 0 0 0 1 1 0 1
0 0 0 1 0 0 0 0 1 1 1 0 1
0 1 0 0 1 0 0 0 1 0 1 1 0
0 0 0 0 0 0 1 1 0 1 1 1 0
1 0 0 0 0 1 1 0 1 0 0 1 0
1 0 0 1 1 1 1 1 1 0 0 0 0
1 1 1 1 1 0 0 1 1 1 0 0 0
1 1 1 1 1 1 1 0 0 0 0 0 0
"""

GAMMA_13_2 = """
0 1 1 0 0 0 0 0 1 0 0 0 1
1 0 0 0 1 0 1 0 0 0 0 1 1
1 0 0 1 0 0 0 1 0 0 1 0 0
0 0 1 0 0 0 0 0 0 1 1 1 0
0 1 0 0 0 1 0 0 0 0 1 1 1
0 0 0 0 1 0 1 1 0 1 0 1 0
0 1 0 0 0 1 0 0 1 1 0 1 0
0 0 1 0 0 1 0 0 1 1 1 0 1
1 0 0 0 0 0 1 1 0 1 1 1 1
0 0 0 1 0 1 1 1 1 0 1 0 0
0 0 1 1 1 0 0 1 1 1 0 1 1
0 1 0 1 1 1 1 0 1 0 1 0 1
1 1 0 0 1 0 0 1 1 0 1 1 0
"""

GAMMA_18 = """
0 0 1 0 0 0 0 0 1 1 0 0 0 1 0 1 1 1
0 0 0 1 1 0 0 0 0 1 0 1 0 0 0 1 1 1
1 0 0 0 0 1 0 0 1 1 1 1 0 1 0 0 0 0
0 1 0 0 0 0 0 0 1 0 1 0 0 0 1 1 1 1
0 1 0 0 0 1 1 1 0 0 0 1 1 0 1 0 0 0
0 0 1 0 1 0 0 1 0 0 0 1 0 1 0 1 0 1
0 0 0 0 1 0 0 1 1 0 1 0 1 0 1 0 1 0
0 0 0 0 1 1 1 0 0 1 1 0 0 1 1 0 0 0
1 0 1 1 0 0 1 0 0 0 1 0 1 0 0 0 0 1
1 1 1 0 0 0 0 1 0 0 0 1 1 0 0 0 0 1
0 0 1 1 0 0 1 1 1 0 0 0 0 1 0 1 0 0
0 1 1 0 1 1 0 0 0 1 0 0 1 0 1 1 1 0
0 0 0 0 1 0 1 0 1 1 0 1 0 1 0 1 0 0
1 0 1 0 0 1 0 1 0 0 1 0 1 0 1 0 0 0
0 0 0 1 1 0 1 1 0 0 0 1 0 1 0 0 1 0
1 1 0 1 0 1 0 0 0 0 1 1 1 0 0 0 0 0
1 1 0 1 0 0 1 0 0 0 0 1 0 0 1 0 0 1
1 1 0 1 0 1 0 0 1 1 0 0 0 0 0 0 1 0
"""

GAMMA_21 = """
0 0 0 0 0 1 0 0 0 1 1 0 1 0 1 0 1 1 1 0 1
0 0 1 1 0 0 1 1 0 1 1 0 0 0 1 1 0 0 0 0 0
0 1 0 0 1 1 0 0 0 1 0 1 0 0 0 0 0 1 1 1 0
0 1 0 0 1 0 1 1 0 0 0 1 1 0 0 0 1 0 1 0 0
0 0 1 1 0 1 0 0 0 1 0 0 0 1 1 0 0 0 1 1 0
1 0 1 0 1 0 1 1 1 0 0 0 0 1 0 0 0 1 0 1 0
0 1 0 1 0 1 0 1 0 1 1 0 1 0 0 0 0 0 1 0 1
0 1 0 1 0 1 1 0 0 0 0 0 0 1 0 0 0 1 0 1 1
0 0 0 0 0 1 0 0 0 1 1 1 1 1 0 1 0 0 1 0 1
1 1 1 0 1 0 1 0 1 0 0 0 0 0 1 1 0 0 0 1 0
1 1 0 0 0 0 1 0 1 0 0 0 1 1 0 0 1 0 0 0 1
0 0 1 1 0 0 0 0 1 0 0 0 0 1 0 1 1 0 1 0 1
1 0 0 1 0 0 1 0 1 0 1 0 0 0 0 1 0 1 0 0 1
0 0 0 0 1 1 0 1 1 0 1 1 0 0 0 1 0 1 0 0 0
1 1 0 0 1 0 0 0 0 1 0 0 0 0 0 1 1 1 0 0 1
0 1 0 0 0 0 0 0 1 1 0 1 1 1 1 0 0 0 0 1 0
1 0 0 1 0 0 0 0 0 0 1 1 0 0 1 0 0 1 1 1 0
1 0 1 0 0 1 0 1 0 0 0 0 1 1 1 0 1 0 0 0 0
1 0 1 1 1 0 1 0 1 0 0 1 0 0 0 0 1 0 0 1 0
0 0 1 0 1 1 0 1 0 1 0 0 0 0 0 1 1 0 1 0 0
1 0 0 0 0 0 1 1 1 0 1 1 1 0 1 0 0 0 0 0 0
"""

MATRICES = {
    "Gamma_13_1": GAMMA_13_1,
    "Gamma_13_2": GAMMA_13_2,
    "Gamma_18": GAMMA_18,
    "Gamma_21": GAMMA_21,
}

TABLE6 = [
    (13, 4, 4, 361, "Gamma_13_1"),
    (13, 4, 5, 360, "Gamma_13_2"),
    (14, 5, 4, 549, "(00001011101000)"),
    (15, 5, 6, 830, "(001110011001110)"),
    (15, 4, 5, 833, "(001111011011110)"),
    (16, 5, 5, 1264, "(0010101101101010)"),
    (17, 6, 6, 1872, "(00100011111100010)"),
    (17, 5, 5, 1906, "(00000111001110000)"),
    (18, 7, 6, 2808, "Gamma_18"),
    (18, 5, 5, 2835, "(001001111111110010)"),
    (19, 6, 6, 4296, "(0000101001100101000)"),
    (20, 7, 6, 6444, "(00000100111110010000)"),
    (21, 7, 9, 9672, "Gamma_21"),
    (21, 6, 6, 9756, "(000001100100100110000)"),
    (22, 7, 6, 14688, "(0000001001111100100000)"),
    (23, 7, 7, 22013, "(00000011101111011100000)"),
    (23, 6, 5, 22036, "(00000111110110111110000)"),
    (24, 7, 6, 33156, "(001001110100100101110010)"),
    (25, 7, 7, 49812, "(0001100001111111100001100)"),
    (25, 7, 6, 49862, "(0000011111001100111110000)"),
]


def table6_graph(adjacency: str) -> Graph:
    if adjacency in MATRICES:
        return parse_adjacency_matrix(MATRICES[adjacency])
    return parse_circulant(adjacency)


def nested_clique_graph(clique_size: int, count: int, cycle: tuple[int, ...]) -> Graph:
    """``count`` disjoint cliques on consecutive labels plus the Hamiltonian cycle ``cycle``."""
    n = clique_size * count
    if sorted(cycle) != list(range(n)):
        raise ValueError("cycle must visit every vertex once")
    edges = [
        (a, b)
        for k in range(count)
        for a in range(k * clique_size, (k + 1) * clique_size)
        for b in range(a + 1, (k + 1) * clique_size)
    ]
    edges += [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
    return Graph.from_edges(n, edges)


# three 4-cliques {0..3}, {4..7}, {8..11}; the cycle visits them round-robin.
# delta = 5, deg Q = 4, Q(G,4)/2^12 = 234
NESTED_CLIQUE_12_CYCLE = (0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 11)
NESTED_CLIQUE_12 = (12, 5, 4, 234)


def nested_clique_12() -> Graph:
    return nested_clique_graph(4, 3, NESTED_CLIQUE_12_CYCLE)
