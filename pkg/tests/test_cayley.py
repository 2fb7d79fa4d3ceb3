from math import comb

import numpy as np
import pytest

from cayleytrees.bound import f_of_tree, f_T_table
from cayleytrees.cayley import bfs_from_identity, diameter, distance, distance_field, swap_map
from cayleytrees.errors import LimitExceededError
from cayleytrees.perm import Permutation, cycle_count_table, identity, permutation_table, rank
from cayleytrees.tree import broom_tree, path_tree, star_tree
from conftest import catalog, small_trees
import oracles


class TestDiameter:
    def test_star5(self):
        assert diameter(star_tree(5)) == 6

    def test_path5(self):
        assert diameter(path_tree(5)) == 10

    def test_k13(self):
        assert diameter(star_tree(4)) == 4

    def test_nonunique_tree(self, nonunique9):
        assert diameter(nonunique9) == 18

    def test_gap6_tree(self, gap6):
        assert diameter(gap6) == 24

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            bfs_from_identity(path_tree(6), max_n=5)


class TestField:
    @pytest.mark.parametrize("t", small_trees(6), ids=repr)
    def test_matches_tuple_bfs(self, t):
        ref = oracles.cayley_distances(t)
        field = bfs_from_identity(t)
        for img, d in ref.items():
            assert field.distance(Permutation(img)) == d

    def test_histogram_sums_to_order(self, unique8):
        field = distance_field(unique8)
        hist = field.eccentricity_histogram
        assert sum(hist.values()) == 40320
        assert hist[0] == 1 and hist[1] == 7
        assert max(hist) == field.diameter

    def test_distance_examples(self, unique8):
        assert distance(unique8, identity(8)) == 0
        for i, j in unique8.edges:
            assert distance(unique8, Permutation.transposition(8, i, j)) == 1

    def test_broom_witness_within_sorting_bound(self):
        t = broom_tree(5)
        assert distance(t, f_of_tree(t).witness) <= comb(4, 2) + 1

    def test_lipschitz_along_generators(self, unique8):
        dist = distance_field(unique8).dist.astype(int)
        for i, j in unique8.edges:
            assert np.abs(dist[swap_map(8, i, j)] - dist).max() == 1

    def test_swap_map_is_involution(self):
        m = swap_map(6, 2, 5)
        assert np.array_equal(m[m], np.arange(720))
        p = Permutation((3, 1, 4, 6, 5, 2))
        assert m[rank(p)] == rank(Permutation((3, 5, 4, 6, 1, 2)))


class TestBoundAndParity:
    """Exhaustive consistency between the BFS, the bound and parity."""

    @pytest.mark.parametrize("n", range(2, 8))
    def test_bound_dominates_distance(self, n):
        for t in catalog(n):
            dist = distance_field(t).dist.astype(int)
            assert (dist <= f_T_table(t)).all()

    @pytest.mark.parametrize("n", range(2, 8))
    def test_parity(self, n):
        c = cycle_count_table(n).astype(int)
        for t in catalog(n):
            dist = distance_field(t).dist.astype(int)
            assert ((dist - (n - c)) % 2 == 0).all()

    @pytest.mark.parametrize("n", range(5, 10))
    def test_broom_sorting_bound_and_gap(self, n):
        t = broom_tree(n)
        d = diameter(t)
        assert d <= comb(n - 1, 2) + 1
        assert f_of_tree(t).value - d >= n - 4

    def test_table_is_identity_at_rank_zero(self):
        assert list(permutation_table(5)[0]) == [0, 1, 2, 3, 4]
