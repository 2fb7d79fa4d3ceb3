from itertools import permutations
from math import factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleytrees.perm import (
    Permutation,
    all_permutations,
    apply_transposition,
    compose,
    cycle_count,
    cycle_count_table,
    cycle_counts,
    cycles,
    fixed_points,
    identity,
    inverse,
    permutation_table,
    rank,
    rank_rows,
    unrank,
    unrank_rows,
)
from oracles import count_cycles


@st.composite
def perms(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


P = Permutation((3, 5, 1, 4, 2))


class TestConstruction:
    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="2"):
            Permutation((1, 2, 2))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="4"):
            Permutation((1, 4, 2))

    def test_parse(self):
        assert Permutation.parse("3,5,1,4,2") == P
        assert Permutation.parse(" 2, 1 ") == Permutation((2, 1))

    @pytest.mark.parametrize("text,bad", [("1,2,2", "2"), ("1,4,2", "4"), ("3,1", "3")])
    def test_parse_names_offending_value(self, text, bad):
        with pytest.raises(ValueError, match=f"value {bad}"):
            Permutation.parse(text)

    def test_parse_garbage(self):
        with pytest.raises(ValueError):
            Permutation.parse("1,x,3")

    def test_from_cycles(self):
        assert Permutation.from_cycles(5, [(1, 3), (2, 5)]) == P


class TestCompose:
    def test_identity(self):
        assert compose(P, identity(5)) == P

    def test_right_to_left(self):
        p = Permutation((2, 1, 3))  # (1,2)
        q = Permutation((1, 3, 2))  # (2,3)
        assert compose(p, q) == Permutation((2, 3, 1))
        assert p * q == compose(p, q)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError, match="degree"):
            compose(P, identity(4))

    @given(perms(min_n=6, max_n=6))
    def test_inverse_axiom(self, p):
        assert compose(p, inverse(p)) == identity(6)
        assert compose(inverse(p), p) == identity(6)


class TestInverse:
    def test_examples(self):
        assert inverse(Permutation((2, 3, 1))) == Permutation((3, 1, 2))
        assert inverse(identity(5)) == identity(5)
        assert compose(P, inverse(P)) == identity(5)


class TestCycles:
    def test_example(self):
        assert cycle_count(P) == 3
        assert cycles(P) == [(1, 3), (2, 5), (4,)]

    def test_identity(self):
        assert cycle_count(identity(7)) == 7

    def test_single_transposition(self):
        assert cycle_count(Permutation.transposition(5, 1, 2)) == 4

    def test_fixed_points(self):
        assert fixed_points(P) == {4}
        assert fixed_points(identity(5)) == set(range(1, 6))
        assert fixed_points(Permutation((2, 1, 4, 3))) == frozenset()

    @given(perms())
    def test_decomposition_partitions(self, p):
        cs = cycles(p)
        labels = [x for c in cs for x in c]
        assert sorted(labels) == list(range(1, p.n + 1))
        assert len(cs) == count_cycles(p.image)
        assert len(fixed_points(p)) == sum(1 for c in cs if len(c) == 1)


class TestApplyTransposition:
    def test_same_cycle_splits(self):
        q = apply_transposition(P, (1, 3))
        assert cycle_count(P) == 3 and cycle_count(q) == 4

    def test_fixed_points_merge(self):
        assert cycle_count(apply_transposition(identity(5), (2, 4))) == 4

    def test_is_right_multiplication(self):
        assert apply_transposition(P, (2, 4)) == compose(P, Permutation.transposition(5, 2, 4))

    @pytest.mark.parametrize("edge", [(2, 2), (0, 1), (1, 6)])
    def test_bad_edges(self, edge):
        with pytest.raises(ValueError):
            apply_transposition(P, edge)

    @given(perms(min_n=2), st.data())
    def test_involution(self, p, data):
        i, j = data.draw(st.lists(st.integers(1, p.n), min_size=2, max_size=2, unique=True))
        assert apply_transposition(apply_transposition(p, (i, j)), (i, j)) == p

    def test_step_law_exhaustive_s5(self):
        for p in all_permutations(5):
            cyc_of = {x: k for k, c in enumerate(cycles(p)) for x in c}
            for i in range(1, 6):
                for j in range(i + 1, 6):
                    delta = cycle_count(apply_transposition(p, (i, j))) - cycle_count(p)
                    assert delta == (1 if cyc_of[i] == cyc_of[j] else -1)


class TestRank:
    def test_identity_is_zero(self):
        for n in range(1, 8):
            assert unrank(0, n) == identity(n)
            assert rank(identity(n)) == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_bijection_exhaustive(self, n):
        assert [rank(unrank(k, n)) for k in range(factorial(n))] == list(range(factorial(n)))

    def test_matches_lexicographic_enumeration(self):
        # Oracle: itertools lists S_n in lexicographic order.
        ranks = {rank(Permutation(img)) for img in permutations(range(1, 5))}
        assert ranks == set(range(24))
        for k, img in enumerate(permutations(range(1, 7))):
            assert rank(Permutation(img)) == k

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            unrank(120, 5)
        with pytest.raises(ValueError):
            unrank(-1, 5)


class TestVectorized:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_table_matches_itertools(self, n):
        expected = np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)
        assert np.array_equal(permutation_table(n), expected)

    @pytest.mark.parametrize("n", [1, 4, 7])
    def test_rank_rows(self, n):
        table = permutation_table(n)
        assert np.array_equal(rank_rows(table), np.arange(len(table)))

    def test_unrank_rows(self):
        ks = np.array([0, 1, 77, 5039, 2345])
        assert np.array_equal(unrank_rows(ks, 7), permutation_table(7)[ks])

    @pytest.mark.parametrize("n", range(1, 8))
    def test_cycle_counts(self, n):
        expected = [count_cycles(tuple(x + 1 for x in row)) for row in permutation_table(n)]
        assert list(cycle_count_table(n)) == expected

    def test_cycle_counts_unordered_block(self):
        rows = np.array([[2, 4, 0, 3, 1], [1, 0, 3, 2, 4]])
        assert list(cycle_counts(rows)) == [3, 3]
