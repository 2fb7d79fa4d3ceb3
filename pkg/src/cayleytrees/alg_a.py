"""Diameter estimate by repeated removal of diametral vertex pairs.

Starting from beta = 0: while the tree has at least three vertices, pick two
vertices at distance diam(T), add 2*diam(T) - 1, and delete both. When one or
two vertices remain, add |V| - 1. Different pair choices can give different
results; :func:`enumerate_beta_set` explores all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import LimitExceededError
from .perm import Permutation
from .tree import Edge, TranspositionTree, all_diametral_pairs, diametral_pair

DEFAULT_ENUM_MAX_N = 16


@dataclass(frozen=True)
class AlgARun:
    n: int
    pairs: tuple[Edge, ...]
    per_step_diameters: tuple[int, ...]
    leftover: frozenset[int]
    beta: int


@dataclass(frozen=True)
class BetaSet:
    values: frozenset[int]
    runs: dict[int, AlgARun]

    @property
    def beta_max(self) -> int:
        return max(self.values)

    @property
    def beta_min(self) -> int:
        return min(self.values)


def _finish(t: TranspositionTree, pairs, diams) -> AlgARun:
    beta = sum(2 * d - 1 for d in diams) + len(t.active) - 1
    return AlgARun(t.n, tuple(pairs), tuple(diams), t.active, beta)


def run(t: TranspositionTree, strategy: str = "double_sweep") -> AlgARun:
    """One complete run with a deterministic pair-selection ``strategy``.

    With ``double_sweep`` each round is two linear tree searches, so the
    whole run is O(n^2).
    """
    if not t.is_full:
        raise ValueError("expected a full tree")
    pairs, diams = [], []
    while len(t.active) >= 3:
        i, j = diametral_pair(t, strategy)
        pairs.append((i, j))
        diams.append(t.distances_from(i)[j])
        t = t.remove_vertices((i, j))
    return _finish(t, pairs, diams)


def replay(t: TranspositionTree, pairs: Iterable[Sequence[int]]) -> AlgARun:
    """Run with an explicit pair sequence, checking every pair is diametral."""
    if not t.is_full:
        raise ValueError("expected a full tree")
    chosen, diams = [], []
    for k, pair in enumerate(pairs):
        i, j = sorted(pair)
        if len(t.active) < 3:
            raise ValueError(f"pair #{k + 1} {(i, j)} given after the run terminated")
        if i not in t.active or j not in t.active:
            raise ValueError(f"pair #{k + 1} {(i, j)} uses a deleted vertex")
        d = t.dist(i, j)
        if d != t.diameter:
            raise ValueError(
                f"pair #{k + 1} {(i, j)} has distance {d}, but the current diameter is {t.diameter}"
            )
        chosen.append((i, j))
        diams.append(d)
        t = t.remove_vertices((i, j))
    if len(t.active) >= 3:
        raise ValueError(f"pair sequence ends with {len(t.active)} vertices still active")
    return _finish(t, chosen, diams)


def closed_form_beta(n: int, pair_distances: Sequence[int]) -> int:
    """sum(2 d - 1) over the removed pairs, plus 1 when n is even."""
    r = (n - 1) // 2
    if len(pair_distances) != r:
        raise ValueError(f"expected {r} pair distances for n={n}, got {len(pair_distances)}")
    if any(d < 1 for d in pair_distances):
        raise ValueError("pair distances must be positive")
    return sum(2 * d - 1 for d in pair_distances) + (n + 1) % 2


def witness_permutation(run: AlgARun) -> Permutation:
    """Product of the removed pairs as disjoint transpositions.

    When n is even the two leftover vertices are swapped as well. f_T of this
    permutation equals ``run.beta``.
    """
    cyc = [tuple(p) for p in run.pairs]
    if len(run.leftover) == 2:
        cyc.append(tuple(sorted(run.leftover)))
    return Permutation.from_cycles(run.n, cyc)


def enumerate_beta_set(t: TranspositionTree, max_n: int = DEFAULT_ENUM_MAX_N) -> BetaSet:
    """All values reachable over every sequence of diametral-pair choices.

    Memoized on the set of remaining vertices, so different removal orders
    that leave the same residue are explored once.
    """
    if not t.is_full:
        raise ValueError("expected a full tree")
    if t.n > max_n:
        raise LimitExceededError("beta-set enumeration", t.n, max_n)
    base = t

    @lru_cache(maxsize=None)
    def explore(active: frozenset[int]) -> dict[int, tuple[Edge, ...]]:
        # Maps each achievable remaining contribution to one pair sequence.
        if len(active) < 3:
            return {len(active) - 1: ()}
        cur = TranspositionTree(base.n, base.edges, active)
        d = cur.diameter
        out: dict[int, tuple[Edge, ...]] = {}
        for pair in sorted(all_diametral_pairs(cur)):
            for rest, seq in explore(active - frozenset(pair)).items():
                out.setdefault(2 * d - 1 + rest, (pair,) + seq)
        return out

    found = explore(t.active)
    runs = {beta: replay(t, seq) for beta, seq in found.items()}
    return BetaSet(frozenset(found), runs)
