"""Local complementation orbits, interlace polynomials and self-dual additive codes."""

from .graph import Graph, GraphError, parse_graph6, encode_graph6
from .canon import canonical_form, canonical_graph, is_isomorphic
from .ops import local_complement, edge_local_complement
from .interlace import (
    Polynomial,
    Rational,
    InterlaceCache,
    IdentityViolation,
    MemoBudgetExceeded,
    evaluate,
    interlace_q,
    interlace_Q,
    is_unimodal,
)
from .orbits import Orbit, OrbitBudgetExceeded, orbit, lc_orbit, elc_orbit
from .circle import is_circle_graph, realize_as_chords, interlacement_graph, ChordDiagram
from .codes import CodeMetrics, metrics, gamma, q4_upper_bound, delta_upper_bound, paley_graph, bordered_paley
from .census import Census, CountsTable, generate_graphs, classify_orbits, euler_transform

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "parse_graph6",
    "encode_graph6",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "local_complement",
    "edge_local_complement",
    "Polynomial",
    "Rational",
    "InterlaceCache",
    "IdentityViolation",
    "MemoBudgetExceeded",
    "evaluate",
    "interlace_q",
    "interlace_Q",
    "is_unimodal",
    "Orbit",
    "OrbitBudgetExceeded",
    "orbit",
    "lc_orbit",
    "elc_orbit",
    "is_circle_graph",
    "realize_as_chords",
    "interlacement_graph",
    "ChordDiagram",
    "CodeMetrics",
    "metrics",
    "gamma",
    "q4_upper_bound",
    "delta_upper_bound",
    "paley_graph",
    "bordered_paley",
    "Census",
    "CountsTable",
    "generate_graphs",
    "classify_orbits",
    "euler_transform",
]
