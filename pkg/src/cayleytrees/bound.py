"""The Akers-Krishnamurthy bound.

For a tree T and a permutation p,

    f_T(p) = c(p) - n + sum_i dist_T(i, p(i))

upper-bounds the Cayley-graph distance from the identity to p, and
f(T) = max over S_n of f_T is a diameter bound. No polynomial method for f(T)
is known, so :func:`f_of_tree` scans all n! permutations (vectorized over
rank blocks).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import LimitExceededError
from .perm import (
    Permutation,
    cycle_count,
    cycle_count_table,
    cycle_counts,
    permutation_table,
    rank,
    unrank,
    unrank_rows,
)
from .tree import TranspositionTree

DEFAULT_MAX_N = 10
# Above this n the full permutation table is not materialized; blocks are unranked.
_TABLE_MAX_N = 10


@dataclass(frozen=True)
class BoundReport:
    value: int
    witness: Permutation
    permutations_scanned: int

    @property
    def witness_rank(self) -> int:
        return rank(self.witness)


def _check_full(t: TranspositionTree, p: Permutation | None = None) -> None:
    if not t.is_full:
        raise ValueError("the bound is defined on a full tree (no deleted vertices)")
    if p is not None and p.n != t.n:
        raise ValueError(f"degree mismatch: permutation has n={p.n}, tree has n={t.n}")


def distance_sum(t: TranspositionTree, p: Permutation) -> int:
    """S_T(p) = sum of dist_T(i, p(i))."""
    _check_full(t, p)
    m = t.distance_table.matrix
    return int(sum(m[i, x] for i, x in enumerate(p.image, start=1)))


def f_T(t: TranspositionTree, p: Permutation) -> int:
    _check_full(t, p)
    return cycle_count(p) - t.n + distance_sum(t, p)


def _label_distance_matrix(t: TranspositionTree) -> np.ndarray:
    """0-based (n, n) distance matrix for gathers against permutation rows."""
    return np.ascontiguousarray(t.distance_table.matrix[1:, 1:])


def f_T_rows(t: TranspositionTree, rows: np.ndarray, cycles: np.ndarray | None = None) -> np.ndarray:
    """Vectorized f_T over a block of 0-based permutation rows."""
    D = _label_distance_matrix(t)
    rows = np.asarray(rows)
    total = np.zeros(rows.shape[0], dtype=np.int64)
    for i in range(t.n):
        total += D[i, rows[:, i]]
    if cycles is None:
        cycles = cycle_counts(rows)
    return total + cycles - t.n


def f_T_table(t: TranspositionTree, max_n: int = DEFAULT_MAX_N) -> np.ndarray:
    """f_T for every permutation, indexed by rank."""
    _check_full(t)
    if t.n > max_n:
        raise LimitExceededError("f_T table", t.n, max_n)
    return f_T_rows(t, permutation_table(t.n), cycle_count_table(t.n))


def _scan_block(t: TranspositionTree, start: int, stop: int) -> tuple[int, int]:
    """Return (max value, lowest rank attaining it) on ranks [start, stop)."""
    n = t.n
    if n <= _TABLE_MAX_N:
        rows = permutation_table(n)[start:stop]
        cyc = cycle_count_table(n)[start:stop]
    else:
        rows = unrank_rows(np.arange(start, stop, dtype=np.int64), n)
        cyc = None
    vals = f_T_rows(t, rows, cyc)
    k = int(np.argmax(vals))
    return int(vals[k]), start + k


def f_of_tree(
    t: TranspositionTree,
    max_n: int = DEFAULT_MAX_N,
    block_size: int = 1 << 18,
    workers: int = 1,
) -> BoundReport:
    """Exact f(T) by scanning S_n in rank order.

    The witness is the lowest-rank maximizer. With ``workers > 1`` the rank
    blocks are scanned concurrently; the reduction keeps the same witness.
    """
    _check_full(t)
    n = t.n
    if n > max_n:
        raise LimitExceededError("f(T) scan", n, max_n)
    total = factorial(n)
    bounds = [(a, min(a + block_size, total)) for a in range(0, total, block_size)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda ab: _scan_block(t, *ab), bounds))
    else:
        results = [_scan_block(t, a, b) for a, b in bounds]
    # Max with lowest-rank tie-break; associative, so block order is irrelevant.
    value, witness_rank = max(results, key=lambda vr: (vr[0], -vr[1]))
    return BoundReport(value, unrank(witness_rank, n), total)
