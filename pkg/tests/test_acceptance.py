"""Acceptance suite: one PASS/FAIL line per criterion, all values exact.

Census levels are cached per session; set LCGRAPHS_CENSUS_DIR to reuse them
across runs.  Checks beyond desk scale run only with LCGRAPHS_EXTENDED=1.
"""

import os
import random
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES, random_connected_graph
from lcgraphs.canon import canonical_form
from lcgraphs.census import (
    circle_counts,
    count_distinct_polynomials,
    delta_table,
    degQ_q4_ranges,
    distinct_polynomials,
    euler_transform,
    generate_graphs,
    seed_polynomials,
    unimodality_scan,
)
from lcgraphs.circle import is_circle_graph, realize_as_chords
from lcgraphs.codes import bordered_paley, metrics, q4_upper_bound
from lcgraphs.data import GAMMA_13_1, GAMMA_13_2
from lcgraphs.codes import parse_adjacency_matrix
from lcgraphs.graph import (
    Graph,
    adjacency_plus_identity,
    disjoint_union,
    duplicate_vertex,
    gf2_rank,
    parse_graph6,
)
from lcgraphs.interlace import (
    Polynomial,
    count_induced_eulerian,
    count_odd_pm_subgraphs,
    duplication_identity,
    evaluate,
    interlace_Q,
    interlace_q,
    interlace_unmemoized,
    is_unimodal,
)
from lcgraphs.ops import edge_local_complement, local_complement
from lcgraphs.orbits import elc_orbit, lc_orbit

EXTENDED = os.environ.get("LCGRAPHS_EXTENDED") == "1"
PROPERTY_BUDGET_SECONDS = 15 * 60
_timings: dict[str, float] = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line



# 1. orbit counts


C_L = [1, 1, 1, 2, 4, 11, 26, 101, 440]
T_L = [1, 2, 3, 6, 11, 26, 59, 182, 675]
C_E = [1, 1, 2, 4, 10, 35, 134, 777, 6702]
T_E = [1, 2, 4, 9, 21, 64, 218, 1068, 8038]
CONNECTED_GRAPHS = [1, 1, 2, 6, 21, 112, 853, 11117, 261080]


def test_1_orbit_counts(lc_census, elc_census):
    cL, cE = lc_census.counts(9), elc_census.counts(9)
    sizes_L = [sum(r.size for r in lc_census.level(n)) for n in range(1, 10)]
    sizes_E = [sum(r.size for r in elc_census.level(n)) for n in range(1, 10)]
    ok = (cL == C_L and cE == C_E and euler_transform(cL) == T_L and euler_transform(cE) == T_E
          and sizes_L == sizes_E == CONNECTED_GRAPHS)
    record("1 orbit counts n<=9", ok,
           f"c_L={cL} t_L={euler_transform(cL)} c_E={cE} t_E={euler_transform(cE)}; orbits cover {sizes_L[-1]} graphs at n=9")


@pytest.mark.extended
@pytest.mark.skipif(not EXTENDED, reason="full LC census at n=10 takes hours; set LCGRAPHS_EXTENDED=1")
def test_1_extended_lc_orbits_n10(lc_census):
    c = lc_census.count(10)
    record("1-extended LC orbits n=10", c == 3132, f"c_L(10)={c}")


# 2. distinct polynomials


C_Q_SMALL = [1, 1, 2, 4, 9, 24, 71, 257, 1186]  # q
C_Q_BIG = [1, 1, 1, 2, 4, 10, 23, 84, 337]  # Q
T_Q_SMALL = [1, 2, 4, 8, 17, 41, 112, 369, 1555]
T_Q_BIG = [1, 2, 3, 6, 11, 24, 52, 152, 521]


def test_2_distinct_polynomials(lc_census, elc_census):
    cq = [count_distinct_polynomials(elc_census, n) for n in range(1, 10)]
    cQ = [count_distinct_polynomials(lc_census, n) for n in range(1, 10)]
    tq = [count_distinct_polynomials(elc_census, n, False) for n in range(1, 10)]
    tQ = [count_distinct_polynomials(lc_census, n, False) for n in range(1, 10)]
    ok = cq == C_Q_SMALL and cQ == C_Q_BIG and tq == T_Q_SMALL and tQ == T_Q_BIG
    record("2 distinct polynomials n<=9", ok, f"c_q={cq} c_Q={cQ} t_q={tq} t_Q={tQ}")


# 3. circle graphs


C_C = [1, 1, 2, 6, 21, 110, 789, 8336]
T_C = [1, 2, 4, 11, 34, 154, 978, 9497]
C_C_ORBITS = [1, 1, 1, 2, 4, 10, 23, 81]
T_C_ORBITS = [1, 2, 3, 6, 11, 25, 55, 157]


def test_3_circle_graphs(lc_census):
    graphs, orbits = circle_counts(lc_census, 8)
    disagree = []
    for n in range(1, 8):
        for g in generate_graphs(n, connected_only=True):
            if (realize_as_chords(g) is not None) != is_circle_graph(g):
                disagree.append(g.to_graph6())
    ok = (graphs == C_C and euler_transform(graphs) == T_C and orbits == C_C_ORBITS
          and euler_transform(orbits) == T_C_ORBITS and not disagree)
    record("3 circle graphs n<=8", ok,
           f"c_c={graphs} t_c={euler_transform(graphs)} c'={orbits} t'={euler_transform(orbits)}; "
           f"chord oracle disagreements n<=7: {len(disagree)}")


# 4. unimodality


NON_UNIMODAL_10 = (2, 7, 6, 7, 4, 3, 2, 1, 0, 0)
NON_UNIMODAL_11 = (2, 7, 6, 7, 6, 4, 3, 2, 1, 0, 0)
# six leaves on a four-vertex core; located by a scan over such graphs
NON_UNIMODAL_10_G6 = "I?????^wo"


def test_4_unimodality(lc_census, elc_census):
    bad = []
    checked = 0
    for n in range(1, 10):
        rep = unimodality_scan(n, elc_census, lc_census, connected_only=False)
        checked += rep.polynomials_checked
        bad += rep.non_unimodal_q
    record("4 unimodality n<=9", not bad, f"{len(bad)} non-unimodal q among {checked} distinct q and Q checked")


def test_4_non_unimodal_witness():
    g = parse_graph6(NON_UNIMODAL_10_G6)
    q = interlace_q(g)
    orbit = elc_orbit(g)
    same_q = [h for h in orbit.graphs() if interlace_q(h) == q]
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    dup = interlace_q(duplicate_vertex(g, leaves[0]))
    ok = (q.sequence(10) == NON_UNIMODAL_10 and not is_unimodal(q.sequence()) and len(orbit) == 2
          and len(same_q) == 2 and len(leaves) == 6 and dup.sequence(11) == NON_UNIMODAL_11)
    record("4 non-unimodal witness n=10", ok,
           f"{NON_UNIMODAL_10_G6}: q={q.sequence(10)}, ELC orbit size {len(orbit)}, "
           f"leaf duplicate q={dup.sequence(11)}")


@pytest.mark.extended
@pytest.mark.skipif(not EXTENDED, reason="scan of every connected order-10 q takes about 17 minutes")
def test_4_extended_exactly_one_at_n10(elc_census):
    conn = seed_polynomials(elc_census, 10)
    bad = {p: forms for p, forms in conn.items() if not is_unimodal(p.sequence())}
    # a disconnected graph has a component of some order k < 10
    bad_products = []
    for k in range(1, 10):
        rest = distinct_polynomials(elc_census, 10 - k, connected_only=False)
        for p in distinct_polynomials(elc_census, k):
            bad_products += [p * r for r in rest if not is_unimodal((p * r).sequence())]
    ok = len(bad) == 1 and not bad_products
    detail = f"{len(conn)} connected q scanned; non-unimodal: {[p.sequence(10) for p in bad]}"
    if ok:
        (p, forms), = bad.items()
        orbit_forms = set()
        for f in forms:
            orbit_forms |= elc_orbit(parse_graph6(f)).members
        orbits = {elc_orbit(parse_graph6(f)).representative for f in forms}
        ok = p.sequence(10) == NON_UNIMODAL_10 and len(orbit_forms) == 2 and len(orbits) == 1
        detail += f", realized by {len(orbit_forms)} graphs in {len(orbits)} ELC orbit"
    record("4-extended exactly one non-unimodal q at n=10", ok, detail)


# 5. identity suite


def _identity_failures(g: Graph, other: Graph, rng: random.Random) -> list[str]:
    n = g.n
    q, Q = interlace_q(g), interlace_Q(g)
    fails = []
    if evaluate(q, 2) != 2**n:
        fails.append("q(2)")
    if evaluate(Q, 3) != 3**n:
        fails.append("Q(3)")
    r = gf2_rank(adjacency_plus_identity(g))
    if abs(evaluate(q, -1)) != 2 ** (n - r):
        fails.append("|q(-1)|")
    if evaluate(Q, 4) != 2**n * count_induced_eulerian(g):
        fails.append("Q(4)")
    if evaluate(q, 1) != count_odd_pm_subgraphs(g):
        fails.append("q(1)")
    quot, rem = divmod(evaluate(q, 3), evaluate(q, 1))
    if rem or quot % 2 == 0:
        fails.append("q(3)/q(1)")
    for u, v in g.edges():
        h = edge_local_complement(g, u, v)
        if interlace_q(h) != q:
            fails.append("ELC invariance")
        if edge_local_complement(h, u, v) != g:
            fails.append("ELC involution")
        if h != local_complement(local_complement(local_complement(g, u), v), u):
            fails.append("g^(uv) = g*u*v*u")
    for v in range(n):
        h = local_complement(g, v)
        if interlace_Q(h) != Q:
            fails.append("LC invariance")
        if local_complement(h, v) != g:
            fails.append("LC involution")
    union = disjoint_union(g, other)
    if interlace_q(union) != q * interlace_q(other) or interlace_Q(union) != Q * interlace_Q(other):
        fails.append("multiplicativity")
    v = rng.randrange(n)
    lhs, rhs = duplication_identity(g, v)
    if lhs != rhs:
        fails.append("duplication")
    if interlace_unmemoized(g, False, rng) != q:
        fails.append("edge choice (q)")
    if n <= 8 and interlace_unmemoized(g, True, rng) != Q:
        fails.append("edge choice (Q)")
    return sorted(set(fails))


def test_5_identity_suite():
    start = time.perf_counter()
    rng = random.Random(20090101)
    failures = {}
    for _ in range(500):
        g = random_connected_graph(rng, rng.randint(1, 9))
        other = random_connected_graph(rng, rng.randint(1, 4))
        bad = _identity_failures(g, other, rng)
        if bad:
            failures[g.to_graph6()] = bad
    _timings["identities"] = time.perf_counter() - start
    by_identity: dict[str, int] = {}
    for names in failures.values():
        for name in names:
            by_identity[name] = by_identity.get(name, 0) + 1
    first = {name: next(g for g, names in failures.items() if name in names) for name in by_identity}
    record("5 identity suite (500 random connected graphs, n<=9)", not failures,
           f"{len(failures)} graphs with violations; per identity {by_identity}; first graph6 per identity {first}")


# 6. the order-6 wheel orbit


def test_6_wheel_orbit(lc_census):
    start = time.perf_counter()
    candidates = [r for r in lc_census.level(6) if r.delta == 3]
    ok = len(candidates) == 1
    detail = f"{len(candidates)} connected LC orbits with delta=3 at n=6"
    if ok:
        rec = candidates[0]
        g = rec.graph()
        q, Q = interlace_q(g), interlace_Q(g)
        in_orbit = canonical_form(bordered_paley(5)) in lc_orbit(g)
        ok = (rec.size == 2 and q == Polynomial([0, 12, 10]) and Q == Polynomial([0, 108, 45])
              and evaluate(Q, 4) == 18 * 2**6 and in_orbit)
        detail += f"; size {rec.size}, q={q}, Q={Q}, Q(4)/2^6={evaluate(Q, 4) // 64}, bordered Paley(5) in orbit: {in_orbit}"
    _timings["wheel"] = time.perf_counter() - start
    record("6 order-6 delta=3 orbit", ok, detail)


# 7. Q(G,4) bound


def test_7_q4_bound(lc_census):
    start = time.perf_counter()
    violations = []
    for n in range(2, 10):
        for rec in lc_census.level(n):
            if evaluate(rec.poly, 4) > q4_upper_bound(n, rec.delta) * 2**n:
                violations.append(rec.rep)
    k2 = interlace_Q(Graph.complete(2))
    tight = q4_upper_bound(2, 1) == 12 == evaluate(k2, 4)
    _timings["bound"] = time.perf_counter() - start
    record("7 Q(G,4) bound, all connected n<=9", not violations and tight,
           f"{len(violations)} violations; K2 bound {q4_upper_bound(2, 1)} = Q(K2,4) {evaluate(k2, 4)}")


# 8. delta, deg Q and Q(G,4) tables


N = list(range(2, 10))
DELTA_ALL = {
    1: [1, 1, 2, 3, 9, 22, 85, 363],
    2: [None, None, None, 1, 1, 4, 11, 69],
    3: [None, None, None, None, 1, None, 5, 8],
    "All": [1, 1, 2, 4, 11, 26, 101, 440],
}
DELTA_BIPARTITE = {
    1: [1, 1, 2, 3, 7, 14, 40, 106],
    2: [None, None, None, None, 1, 1, 2, 4],
    3: [None, None, None, None, None, None, 1, None],
    "All": [1, 1, 2, 3, 8, 15, 43, 110],
}
DELTA_CIRCLE = {
    1: [1, 1, 2, 3, 9, 21, 75, 277],
    2: [None, None, None, 1, 1, 2, 5, 16],
    3: [None, None, None, None, None, None, 1, None],
    "All": [1, 1, 2, 4, 10, 23, 81, 293],
}
DEG_Q = {
    1: [(1, 1), (2, 2), (2, 3), (3, 4), (3, 5), (3, 6), (3, 7), (4, 8)],
    2: [None, None, None, (2, 2), (3, 3), (3, 4), (3, 4), (3, 5)],
    3: [None, None, None, None, (2, 2), None, (3, 4), (3, 4)],
}
Q4_NORM = {  # rows n, columns delta 1..3
    2: [(3, 3), None, None],
    3: [(5, 5), None, None],
    4: [(8, 9), None, None],
    5: [(13, 17), (12, 12), None],
    6: [(20, 33), (19, 19), (18, 18)],
    7: [(30, 65), (29, 30), None],
    8: [(47, 129), (45, 48), (44, 45)],
    9: [(73, 257), (69, 80), (68, 69)],
}


def _delta_mismatches(table, expected):
    bad = []
    for label, row in expected.items():
        got = table.row(str(label))
        if got != row:
            bad.append((label, got))
    if len(table.row_labels) != len(expected):
        bad.append(("rows", table.row_labels))
    return bad


def test_8_tables(lc_census):
    all_t = delta_table(lc_census, N, "all")
    bip_t = delta_table(lc_census, N, "bipartite")
    deg_t, q4_t = degQ_q4_ranges(lc_census, N)
    problems = {}
    if bad := _delta_mismatches(all_t, DELTA_ALL):
        problems["delta/all"] = bad
    if bad := _delta_mismatches(bip_t, DELTA_BIPARTITE):
        problems["delta/bipartite"] = bad
    if bad := _delta_mismatches(deg_t, DEG_Q):
        problems["degQ"] = bad
    q4_bad = [(n, q4_t.row(str(n))) for n, row in Q4_NORM.items() if q4_t.row(str(n)) != row]
    if q4_bad or len(q4_t.col_labels) != 3:
        problems["Q(4)/2^n"] = q4_bad
    record("8 delta, deg Q and Q(G,4)/2^n tables n<=9", not problems,
           "all cells exact" if not problems else f"mismatches {problems}")


def test_8_circle_delta_table(circle9_census):
    t = delta_table(circle9_census, N, "circle")
    bad = _delta_mismatches(t, DELTA_CIRCLE)
    record("8 circle delta table n<=9", not bad, "all cells exact" if not bad else f"mismatches {bad}")


@pytest.fixture(scope="module")
def circle9_census(census_dir, shared_cache):
    from lcgraphs.census import Census

    return Census("LC", census_dir, circle_max=9, cache=shared_cache)


# 9. order-13 graphs


def test_9_order13_rows():
    g1, g2 = parse_adjacency_matrix(GAMMA_13_1), parse_adjacency_matrix(GAMMA_13_2)
    Q1, Q2 = interlace_Q(g1), interlace_Q(g2)
    got = [(Q1.degree, evaluate(Q1, 4) // 2**13), (Q2.degree, evaluate(Q2, 4) // 2**13)]
    exact = all(evaluate(Q, 4) % 2**13 == 0 for Q in (Q1, Q2))
    record("9 order-13 rows", got == [(4, 361), (5, 360)] and exact, f"(deg Q, Q(4)/2^13) = {got}")


# 10. property suite runtime


def test_10_property_suite_runtime():
    start = time.perf_counter()
    problems = []
    # circle verdicts are preserved by LC, checked with the chord oracle
    for n in range(1, 8):
        verdict = {canonical_form(g): realize_as_chords(g) is not None for g in generate_graphs(n, True)}
        for form, ok in verdict.items():
            g = parse_graph6(form)
            for v in range(n):
                if verdict[canonical_form(local_complement(g, v))] != ok:
                    problems.append(("circle", form, v))
    rng = random.Random(10)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 8))
        m = metrics(g)
        for v in range(g.n):
            if metrics(local_complement(g, v)) != m:
                problems.append(("metrics", g.to_graph6(), v))
    own = time.perf_counter() - start
    if not {"identities", "wheel", "bound"} <= set(_timings):
        pytest.skip("needs the identity, wheel and bound criteria in the same run")
    total = own + sum(_timings.values())
    ok = not problems and total < PROPERTY_BUDGET_SECONDS
    record("10 property suite", ok,
           f"{len(problems)} violations; identities {_timings['identities']:.0f}s, wheel {_timings['wheel']:.0f}s, "
           f"bound {_timings['bound']:.0f}s, circle closure and metrics invariance {own:.0f}s; "
           f"total {total:.0f}s of {PROPERTY_BUDGET_SECONDS}s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
