from math import comb

import pytest

from cayleytrees.alg_a import closed_form_beta, enumerate_beta_set, replay, run, witness_permutation
from cayleytrees.bound import f_of_tree, f_T
from cayleytrees.cayley import diameter
from cayleytrees.errors import LimitExceededError
from cayleytrees.perm import Permutation
from cayleytrees.tree import broom_tree, path_tree, validate
from conftest import catalog, small_trees
import oracles


class TestRun:
    def test_unique8_first_order(self, unique8):
        r = replay(unique8, [(1, 8), (5, 7), (2, 6)])
        assert r.per_step_diameters == (4, 3, 3)
        assert r.beta == 7 + 5 + 5 + 1 == 18
        assert r.leftover == {3, 4}

    def test_unique8_second_order(self, unique8):
        r = replay(unique8, [(1, 5), (6, 8), (2, 7)])
        assert r.per_step_diameters == (4, 4, 2)
        assert r.beta == 7 + 7 + 3 + 1 == 18

    def test_nonunique_runs(self, nonunique9):
        assert replay(nonunique9, [(1, 5), (2, 7), (4, 8), (3, 9)]).beta == 20
        assert replay(nonunique9, [(1, 7), (5, 8), (2, 9), (4, 6)]).beta == 22

    @pytest.mark.parametrize("n", range(5, 12))
    def test_broom(self, n):
        expected = (2 * (n - 2) - 1) + comb(n - 2, 2)
        assert expected == comb(n - 1, 2) + n - 3
        for strategy in ("double_sweep", "lexicographic_min"):
            assert run(broom_tree(n), strategy).beta == expected

    def test_tiny(self):
        assert run(path_tree(2)).beta == 1
        assert run(path_tree(2)).pairs == ()
        assert run(validate(1, [])).beta == 0

    @pytest.mark.parametrize("n", range(1, 12))
    def test_path_gives_bubble_sort_diameter(self, n):
        assert run(path_tree(n)).beta == comb(n, 2)

    def test_replay_rejects_non_diametral(self, unique8):
        with pytest.raises(ValueError, match="diameter"):
            replay(unique8, [(1, 2), (5, 7), (2, 6)])

    def test_replay_rejects_short_sequence(self, unique8):
        with pytest.raises(ValueError, match="still active"):
            replay(unique8, [(1, 8)])

    def test_replay_rejects_reused_vertex(self, unique8):
        with pytest.raises(ValueError, match="deleted"):
            replay(unique8, [(1, 8), (1, 5), (2, 6)])

    def test_invariants_all_trees(self):
        for t in small_trees(10):
            for strategy in ("double_sweep", "lexicographic_min"):
                r = run(t, strategy)
                assert len(r.pairs) == (t.n - 1) // 2
                assert r.beta == sum(2 * d - 1 for d in r.per_step_diameters) + len(r.leftover) - 1
                assert replay(t, r.pairs) == r


class TestClosedForm:
    @pytest.mark.parametrize(
        "n,dists,expected",
        [(8, [4, 3, 3], 18), (9, [4, 3, 3, 2], 20), (9, [4, 4, 3, 2], 22), (2, [], 1), (1, [], 0)],
    )
    def test_values(self, n, dists, expected):
        assert closed_form_beta(n, dists) == expected

    def test_wrong_length(self):
        with pytest.raises(ValueError, match="expected 3"):
            closed_form_beta(8, [4, 3])

    def test_matches_iterative_runs(self):
        for t in small_trees(10):
            for beta, r in enumerate_beta_set(t).runs.items():
                dists = [t.dist(i, j) for i, j in r.pairs]
                assert closed_form_beta(t.n, dists) == beta


class TestWitness:
    def test_unique8(self, unique8):
        r = replay(unique8, [(1, 8), (5, 7), (2, 6)])
        w = witness_permutation(r)
        assert w == Permutation.from_cycles(8, [(1, 8), (5, 7), (2, 6), (3, 4)])
        assert f_T(unique8, w) == 18

    def test_n2(self):
        r = run(path_tree(2))
        assert witness_permutation(r) == Permutation((2, 1))
        assert f_T(path_tree(2), witness_permutation(r)) == 1

    def test_nonunique_first_run(self, nonunique9):
        r = replay(nonunique9, [(1, 5), (2, 7), (4, 8), (3, 9)])
        w = witness_permutation(r)
        assert w == Permutation.from_cycles(9, [(1, 5), (2, 7), (4, 8), (3, 9)])
        assert oracles.f_T(nonunique9, w.image) == 20

    def test_f_T_equals_beta_every_run(self):
        for t in small_trees(10):
            for beta, r in enumerate_beta_set(t).runs.items():
                assert f_T(t, witness_permutation(r)) == beta


class TestBetaSet:
    def test_unique8(self, unique8):
        assert enumerate_beta_set(unique8).values == {18}

    def test_nonunique(self, nonunique9):
        b = enumerate_beta_set(nonunique9)
        assert {20, 22} <= b.values
        assert b.beta_max == 22 and b.beta_min == 20
        for v, r in b.runs.items():
            assert replay(nonunique9, r.pairs).beta == v

    @pytest.mark.parametrize("n", range(5, 10))
    def test_broom_unique(self, n):
        assert enumerate_beta_set(broom_tree(n)).values == {comb(n - 1, 2) + n - 3}

    @pytest.mark.parametrize("n", range(1, 10))
    def test_matches_naive_branching(self, n):
        for t in catalog(n):
            assert enumerate_beta_set(t).values == oracles.beta_values_naive(t)

    def test_strategies_land_in_set(self):
        for t in small_trees(10):
            values = enumerate_beta_set(t).values
            assert run(t, "double_sweep").beta in values
            assert run(t, "lexicographic_min").beta in values

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            enumerate_beta_set(path_tree(17))
        assert enumerate_beta_set(path_tree(17), max_n=17).values == {comb(17, 2)}

    @pytest.mark.parametrize("n", range(5, 9))
    def test_bounds_chain_all_trees(self, n):
        for t in catalog(n):
            b = enumerate_beta_set(t)
            f = f_of_tree(t).value
            assert max(b.values) <= f
            assert diameter(t) <= b.beta_max

    def test_bounds_chain_named_n9(self, nonunique9, gap6):
        for t in (nonunique9, gap6, broom_tree(9)):
            b = enumerate_beta_set(t)
            assert diameter(t) <= b.beta_max <= f_of_tree(t).value
