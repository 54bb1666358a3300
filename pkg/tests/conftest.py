import os
import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from lcgraphs.census import Census
from lcgraphs.graph import Graph, is_connected
from lcgraphs.interlace import InterlaceCache


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n, rng.uniform(0.25, 0.75))
        if is_connected(g):
            return g


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
    if connected and not is_connected(g):
        # join consecutive vertices along a path to force connectivity
        g = Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep] + [(i, i + 1) for i in range(n - 1)])
    return g


@pytest.fixture(scope="session")
def census_dir(tmp_path_factory) -> Path:
    """Persisted census levels; set LCGRAPHS_CENSUS_DIR to reuse them across runs."""
    env = os.environ.get("LCGRAPHS_CENSUS_DIR")
    if env:
        path = Path(env)
        path.mkdir(parents=True, exist_ok=True)
        return path
    return tmp_path_factory.mktemp("census")


@pytest.fixture(scope="session")
def shared_cache() -> InterlaceCache:
    return InterlaceCache()


@pytest.fixture(scope="session")
def lc_census(census_dir, shared_cache) -> Census:
    return Census("LC", census_dir, circle_max=8, cache=shared_cache)


@pytest.fixture(scope="session")
def elc_census(census_dir, shared_cache) -> Census:
    return Census("ELC", census_dir, cache=shared_cache)


# acceptance report: one line per criterion, printed after the run

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
