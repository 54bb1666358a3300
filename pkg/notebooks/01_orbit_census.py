# %% [markdown]
# # Orbit census for small graphs
#
# Classifies connected graphs up to local complementation (LC) and edge local
# complementation (ELC), then prints the count tables.  Levels are persisted in
# `CENSUS_DIR` so repeated runs are fast.  Order 9 takes several minutes per kind.

# %%
import os
from pathlib import Path

from lcgraphs.census import Census, build_table, euler_transform

N_MAX = int(os.environ.get("N_MAX", "8"))
CENSUS_DIR = Path(os.environ.get("LCGRAPHS_CENSUS_DIR", "census-cache"))
lc = Census("LC", CENSUS_DIR, circle_max=min(N_MAX, 8))
elc = Census("ELC", CENSUS_DIR)

# %% [markdown]
# Connected orbit counts and their Euler transforms (all graphs, connected or not).

# %%
c_lc, c_elc = lc.counts(N_MAX), elc.counts(N_MAX)
print("LC ", c_lc, euler_transform(c_lc))
print("ELC", c_elc, euler_transform(c_elc))

# %% [markdown]
# Every table the census module knows how to build.

# %%
for which in ("1", "2", "3", "4", "5", "7", "8", "7c"):
    print(build_table(which, N_MAX, lc, elc).to_text())
    print()
