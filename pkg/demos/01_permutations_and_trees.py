# %% [markdown]
# # Permutations and transposition trees
#
# A tree on vertices 1..n names a set of transpositions, one per edge.
# Vertex k holds marker p(k); applying edge (i, j) swaps the markers on i and j.

# %%
import numpy as np

from cayleytrees import Permutation, path_tree, star_tree
from cayleytrees.perm import cycle_counts, cycles, permutation_table, rank, unrank
from cayleytrees.tree import parse_tree

# %%
p = Permutation.parse("3,1,2,5,4")
print(p, "cycles:", cycles(p))
print("rank", rank(p), "-> back", unrank(rank(p), 5))

# %% [markdown]
# The whole of S_n fits in one small int8 table, and cycle counts come out
# of a vectorised pass over it.

# %%
table = permutation_table(5)
print(table.shape, table.dtype)
print("cycle-count histogram:", np.bincount(cycle_counts(table)))

# %%
t = parse_tree("1 2\n2 3\n3 4\n4 5\n4 6\n")
print("n =", t.n, "tree diameter (edges):", t.diameter, "leaves:", t.leaves())
print("path 1 -> 6:", t.path(1, 6))
print(path_tree(4).edges, star_tree(4).edges)
