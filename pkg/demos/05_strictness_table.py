# %% [markdown]
# # How far can f(T) sit above the true diameter?
#
# For each n, every tree up to isomorphism is scored by f(T) - diam.
# Results are appended to a TSV cache so a long run can be resumed.

# %%
import tempfile
from pathlib import Path

from cayleytrees.enumeration import enumerate_trees
from cayleytrees.experiments import strictness_table

# %%
print([enumerate_trees(n).count for n in range(2, 11)])

# %%
cache = Path(tempfile.mkdtemp()) / "results.tsv"
for row in strictness_table(5, 8, cache_path=cache):
    print(row.n, row.s_n, row.delta_n, row.argmax_tree, f"{row.seconds:.2f}s")
print(len(cache.read_text().splitlines()), "cached lines")
