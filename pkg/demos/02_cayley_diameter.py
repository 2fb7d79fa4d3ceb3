# %% [markdown]
# # Exact diameters by breadth-first search
#
# Distances from the identity are stored in a uint8 array indexed by
# permutation rank, so S_9 (362 880 vertices) is a few hundred kilobytes.

# %%
import time

from cayleytrees import path_tree, star_tree
from cayleytrees.cayley import distance_field
from cayleytrees.experiments import NONUNIQUE_TREE

# %%
for name, t in [("path 6", path_tree(6)), ("star 6", star_tree(6))]:
    field = distance_field(t)
    print(name, "diameter", field.diameter, field.eccentricity_histogram)

# %% [markdown]
# The path gives the bubble-sort graph, whose diameter is n(n-1)/2;
# the star gives the star graph, with floor(3(n-1)/2).

# %%
start = time.perf_counter()
field = distance_field(NONUNIQUE_TREE)
print(f"n=9 tree: diameter {field.diameter} in {time.perf_counter() - start:.2f}s")
