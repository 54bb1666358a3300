# %% [markdown]
# # Unimodality of the interlace polynomial q
#
# Up to order 9 every q is unimodal.  At order 10 a graph built from a small core
# with six leaves breaks unimodality; duplicating one of its leaves keeps the defect.

# %%
from lcgraphs.census import Census, unimodality_scan
from lcgraphs.graph import Graph, duplicate_vertex, parse_graph6
from lcgraphs.interlace import interlace_q, is_unimodal
from lcgraphs.orbits import elc_orbit

elc = Census("ELC")
for n in range(1, 9):
    report = unimodality_scan(n, elc)
    print(n, report.polynomials_checked, "clean" if report.clean else report)

# %% [markdown]
# ## Searching cores with pendant leaves
#
# Attach leaves to every connected core on four vertices and keep graphs whose q
# is not unimodal.

# %%
from itertools import combinations_with_replacement

from lcgraphs.census import generate_graphs
from lcgraphs.canon import canonical_form

found = {}
for core in generate_graphs(4, connected_only=True):
    for hosts in combinations_with_replacement(range(4), 6):
        edges = list(core.edges()) + [(h, 4 + i) for i, h in enumerate(hosts)]
        g = Graph.from_edges(10, edges)
        q = interlace_q(g)
        if not is_unimodal(q.sequence()):
            found.setdefault(canonical_form(g), q.sequence(10))
print(found)

# %%
g = parse_graph6("I?????^wo")
print("q:", interlace_q(g).sequence(10))
print("ELC orbit:", sorted(elc_orbit(g).members))
leaf = next(v for v in range(g.n) if g.degree(v) == 1)
print("leaf duplicated:", interlace_q(duplicate_vertex(g, leaf)).sequence(11))
