import random

import pytest
from hypothesis import given, settings

from lcgraphs.canon import canonical_form
from lcgraphs.graph import Graph, independence_number, is_anti_eulerian, is_bipartite, is_connected
from lcgraphs.interlace import interlace_Q, interlace_q
from lcgraphs.ops import edge_local_complement, local_complement
from lcgraphs.orbits import (
    OrbitBudgetExceeded,
    elc_orbit,
    format_orbit_dump,
    lc_orbit,
    orbit,
    orbit_max_independence,
    orbit_min_degree,
    parse_orbit_dump,
)

from conftest import graphs, random_graph

W5 = Graph.wheel(5)


def _naive_orbit(g, kind):
    """Closure over labeled graphs, deduplicated by canonical form at the end."""
    todo = [g]
    labeled = {g}
    while todo:
        h = todo.pop()
        if kind == "LC":
            nxt = [local_complement(h, v) for v in range(h.n)]
        else:
            nxt = [edge_local_complement(h, u, v) for u, v in h.edges()]
        for k in nxt:
            if k not in labeled:
                labeled.add(k)
                todo.append(k)
    return {canonical_form(h) for h in labeled}


def test_edgeless_orbit():
    for kind in ("LC", "ELC"):
        o = orbit(Graph.empty(4), kind)
        assert len(o) == 1 and o.representative == Graph.empty(4).to_graph6()


def test_wheel_orbit():
    o = lc_orbit(W5)
    assert len(o) == 2
    assert orbit_min_degree(o) == 3
    assert orbit_max_independence(o) == 2


def test_triangle_orbit():
    o = lc_orbit(Graph.complete(3))
    assert o.members == {canonical_form(Graph.complete(3)), canonical_form(Graph.path(3))}
    assert orbit_min_degree(o) == 1
    assert orbit_min_degree(lc_orbit(Graph.complete(2))) == 1


def test_orbits_match_naive_closure():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 6))
        assert lc_orbit(g).members == _naive_orbit(g, "LC")
        assert elc_orbit(g).members == _naive_orbit(g, "ELC")


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7))
def test_orbit_invariants(g):
    lc = lc_orbit(g)
    elc = elc_orbit(g)
    assert elc.members <= lc.members
    assert lc.representative == min(lc.members)
    assert canonical_form(g) in lc
    members = list(lc.graphs())
    # closed under the operation
    for h in members[:5]:
        for v in range(h.n):
            assert canonical_form(local_complement(h, v)) in lc
    assert len({is_anti_eulerian(h) for h in members}) == 1
    assert len({is_bipartite(h) for h in elc.graphs()}) == 1
    if g.n >= 2:
        assert len({is_connected(h) for h in members}) == 1
    assert orbit_max_independence(elc) == interlace_q(g).degree
    assert orbit_max_independence(lc) == interlace_Q(g).degree


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=7), __import__("hypothesis").strategies.randoms(use_true_random=False))
def test_orbit_label_independent(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert lc_orbit(g).members == lc_orbit(g.relabel(perm)).members
    assert elc_orbit(g).members == elc_orbit(g.relabel(perm)).members


def test_budget_is_enforced():
    with pytest.raises(OrbitBudgetExceeded):
        lc_orbit(W5, budget=1)
    assert len(lc_orbit(W5, budget=2)) == 2


def test_orbit_dump_round_trip():
    o = lc_orbit(Graph.cycle(6))
    text = format_orbit_dump(o)
    assert text.splitlines()[0] == f"# kind=LC n=6 size={len(o)}"
    assert text.splitlines()[1:] == sorted(o.members)
    back = parse_orbit_dump(text)
    assert back.members == o.members and back.kind == "LC" and back.n == 6


def test_orbit_dump_rejects_bad_header():
    with pytest.raises(ValueError):
        parse_orbit_dump("E|fG\n")
    with pytest.raises(ValueError):
        parse_orbit_dump("# kind=LC n=6 size=3\nE|fG\n")


def test_independence_is_orbit_max():
    o = lc_orbit(Graph.path(4))
    assert orbit_max_independence(o) == max(independence_number(h) for h in o.graphs())
