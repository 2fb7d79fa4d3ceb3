# %% [markdown]
# # Sorting markers along tree edges
#
# Every sorter returns an explicit edge sequence that `verify` replays.

# %%
import numpy as np

from cayleytrees import Permutation
from cayleytrees.bound import f_T
from cayleytrees.experiments import UNIQUE8_TREE
from cayleytrees.sorting import (
    f_T_trajectory,
    sort_admissible,
    sort_by_pair_homing,
    sort_sequential_leaf,
    verify,
)

# %%
rng = np.random.default_rng(0)
p = Permutation(tuple(int(x) + 1 for x in rng.permutation(8)))
print("start", p, "f_T =", f_T(UNIQUE8_TREE, p))

# %% [markdown]
# Admissible edges lower f_T by exactly one each time.

# %%
seq = sort_admissible(UNIQUE8_TREE, p)
print(seq.length, verify(seq), f_T_trajectory(seq))

# %%
seq, r = sort_by_pair_homing(UNIQUE8_TREE, p)
print("pair homing:", seq.length, "edges, budget", r.beta, verify(seq))
seq = sort_sequential_leaf(UNIQUE8_TREE, p)
print("leaf by leaf:", seq.length, "edges", verify(seq))
