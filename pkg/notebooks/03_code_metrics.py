# %% [markdown]
# # Code metrics of larger graphs
#
# Degree of Q and Q(G,4)/2^n for the listed order-13 to order-16 graphs, the
# order-6 wheel orbit, and the order-12 nested-clique graph.

# %%
from lcgraphs.codes import bordered_paley, gamma, metrics, q4_upper_bound
from lcgraphs.data import TABLE6, nested_clique_12, table6_graph
from lcgraphs.interlace import evaluate, interlace_Q

for n, delta, deg, q4, adjacency in TABLE6:
    if n > 16:
        continue
    g = table6_graph(adjacency)
    Q = interlace_Q(g)
    print(n, adjacency, "deg Q", Q.degree, "(listed", deg, ")", "Q(4)/2^n", evaluate(Q, 4) // 2**n, "(listed", q4, ")")

# %%
print(metrics(bordered_paley(5)))
print("gamma(2,1) =", gamma(2, 1), "bound at K2 =", q4_upper_bound(2, 1))

# %%
m = metrics(nested_clique_12())
print(m)
