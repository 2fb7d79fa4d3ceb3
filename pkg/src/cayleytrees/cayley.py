"""Exact distances in Cay(S_n, T) by breadth-first search from the identity.

States are permutation ranks; a generator (i, j) maps rank k to the rank of
unrank(k) with positions i and j swapped. Those neighbour maps are built once
per (n, i, j) with vectorized ranking and reused across trees, so the BFS
itself is a sequence of numpy gathers over the frontier.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import LimitExceededError
from .perm import Permutation, permutation_table, rank, rank_rows
from .tree import TranspositionTree

DEFAULT_MAX_N = 10
_UNREACHED = 255


@dataclass(frozen=True)
class DistanceField:
    n: int
    dist: np.ndarray  # uint8, indexed by rank

    @property
    def diameter(self) -> int:
        return int(self.dist.max())

    @property
    def eccentricity_histogram(self) -> dict[int, int]:
        values, counts = np.unique(self.dist, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}

    def distance(self, p: Permutation) -> int:
        if p.n != self.n:
            raise ValueError(f"degree mismatch: permutation has n={p.n}, field has n={self.n}")
        return int(self.dist[rank(p)])


def _swap_map_uncached(n: int, i: int, j: int) -> np.ndarray:
    rows = np.array(permutation_table(n))
    rows[:, [i - 1, j - 1]] = rows[:, [j - 1, i - 1]]
    return rank_rows(rows).astype(np.int32)


_swap_map_cached = lru_cache(maxsize=None)(_swap_map_uncached)


def swap_map(n: int, i: int, j: int) -> np.ndarray:
    """rank(p) -> rank(p·(i,j)) for every p in S_n."""
    if i > j:
        i, j = j, i
    # Caching all C(10,2) maps at n=10 would hold ~650 MB.
    if n <= 9:
        return _swap_map_cached(n, i, j)
    return _swap_map_uncached(n, i, j)


def bfs_from_identity(t: TranspositionTree, max_n: int = DEFAULT_MAX_N) -> DistanceField:
    if not t.is_full:
        raise ValueError("BFS needs a full tree")
    n = t.n
    if n > max_n:
        raise LimitExceededError("Cayley-graph BFS", n, max_n)
    maps = [swap_map(n, u, v) for u, v in t.active_edges]
    size = len(permutation_table(n))
    dist = np.full(size, _UNREACHED, dtype=np.uint8)
    dist[0] = 0
    frontier = np.array([0] if maps else [], dtype=np.int32)
    level = 0
    while frontier.size:
        level += 1
        if level >= _UNREACHED:  # pragma: no cover - diameters here are < C(10,2)
            raise OverflowError("distance does not fit in a byte")
        nxt = np.unique(np.concatenate([m[frontier] for m in maps]))
        nxt = nxt[dist[nxt] == _UNREACHED]
        dist[nxt] = level
        frontier = nxt
    dist.setflags(write=False)
    return DistanceField(n, dist)


@lru_cache(maxsize=64)
def _cached_field(t: TranspositionTree, max_n: int) -> DistanceField:
    return bfs_from_identity(t, max_n)


def distance_field(t: TranspositionTree, max_n: int = DEFAULT_MAX_N) -> DistanceField:
    """Memoized :func:`bfs_from_identity`."""
    return _cached_field(t, max_n)


def distance(t: TranspositionTree, p: Permutation, max_n: int = DEFAULT_MAX_N) -> int:
    """dist_Γ(I, p)."""
    if p.n != t.n:
        raise ValueError(f"degree mismatch: permutation has n={p.n}, tree has n={t.n}")
    return distance_field(t, max_n).distance(p)


def diameter(t: TranspositionTree, max_n: int = DEFAULT_MAX_N) -> int:
    return distance_field(t, max_n).diameter
