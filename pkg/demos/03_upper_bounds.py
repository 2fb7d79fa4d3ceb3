# %% [markdown]
# # Two upper bounds: the exhaustive f(T) and the greedy beta
#
# f(T) scans all n! permutations. The greedy procedure repeatedly strips a
# diametral pair of leaves and costs microseconds.

# %%
import time

from cayleytrees.alg_a import enumerate_beta_set, run, witness_permutation
from cayleytrees.bound import f_of_tree, f_T
from cayleytrees.cayley import diameter
from cayleytrees.experiments import UNIQUE8_TREE, GAP6_TREE, NONUNIQUE_TREE

# %%
for name, t in [("unique8", UNIQUE8_TREE), ("nonunique9", NONUNIQUE_TREE), ("gap6", GAP6_TREE)]:
    start = time.perf_counter()
    report = f_of_tree(t)
    ft_secs = time.perf_counter() - start
    r = run(t)
    print(f"{name}: diam={diameter(t)} f={report.value} ({ft_secs:.2f}s) beta={r.beta} pairs={r.pairs}")

# %% [markdown]
# The choice of diametral pair matters on the nine-vertex tree below:
# different tie-breaks land on different values.

# %%
b = enumerate_beta_set(NONUNIQUE_TREE)
print("B =", sorted(b.values))
for value, r in sorted(b.runs.items()):
    w = witness_permutation(r)
    print(value, r.pairs, "witness", w, "f_T(witness) =", f_T(NONUNIQUE_TREE, w))
