"""Diameters of Cayley graphs of S_n generated by transposition trees.

Exact diameters by BFS over S_n, the Akers-Krishnamurthy bound f(T) by
exhaustive scan, and the O(n^2) diametral-pair-removal estimate, together
with constructive sorters that certify the bounds.
"""

from .alg_a import AlgARun, BetaSet, closed_form_beta, enumerate_beta_set, replay, run, witness_permutation
from .bound import BoundReport, f_of_tree, f_T
from .cayley import DistanceField, bfs_from_identity, diameter, distance
from .enumeration import TreeCatalog, canonical_form, enumerate_trees, from_pruefer
from .errors import InvalidTreeError, LimitExceededError
from .perm import Permutation, apply_transposition, compose, cycle_count, cycles, fixed_points, inverse, rank, unrank
from .sorting import SortingSequence, sort_admissible, sort_by_pair_homing, sort_sequential_leaf, verify
from .tree import (
    TranspositionTree,
    all_diametral_pairs,
    all_pairs_distances,
    broom_tree,
    diametral_pair,
    parse_tree,
    path_tree,
    read_tree,
    remove_vertices,
    star_tree,
    validate,
)

__version__ = "0.1.0"
