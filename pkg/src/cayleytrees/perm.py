"""Permutations of {1..n} in one-line notation.

A :class:`Permutation` stores ``image`` with ``image[i-1] == p(i)``; labels are
1-based throughout the public API. Products read right to left:
``compose(p, q)(i) == p(q(i))``.

The second half of the module holds vectorized helpers that work on whole
blocks of permutations at once (0-based ``int8`` rows), used by the
exhaustive scans over S_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

import numpy as np


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", image)
        n = len(image)
        if n < 1:
            raise ValueError("permutation degree must be at least 1")
        seen = [False] * (n + 1)
        for x in image:
            if not 1 <= x <= n:
                raise ValueError(f"value {x} is outside 1..{n}")
            if seen[x]:
                raise ValueError(f"value {x} appears more than once")
            seen[x] = True

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(map(str, self.image))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        _check_pair(n, i, j)
        image = list(range(1, n + 1))
        image[i - 1], image[j - 1] = j, i
        return cls(tuple(image))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles; unlisted labels are fixed.

        >>> Permutation.from_cycles(5, [(1, 3), (2, 5)])
        Permutation(image=(3, 5, 1, 4, 2))
        """
        image = list(range(1, n + 1))
        used: set[int] = set()
        for cyc in cycles:
            for k, x in enumerate(cyc):
                if x in used:
                    raise ValueError(f"label {x} appears in two cycles")
                used.add(x)
                image[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(image))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse the comma-separated one-line form, e.g. ``"3,5,1,4,2"``."""
        parts = [s.strip() for s in text.strip().split(",")]
        try:
            values = [int(s) for s in parts]
        except ValueError:
            raise ValueError(f"not a comma-separated list of integers: {text!r}")
        n = len(values)
        seen: set[int] = set()
        for x in values:
            if not 1 <= x <= n:
                raise ValueError(f"value {x} is outside 1..{n}")
            if x in seen:
                raise ValueError(f"value {x} appears more than once")
            seen.add(x)
        return cls(tuple(values))


def _check_pair(n: int, i: int, j: int) -> None:
    if i == j:
        raise ValueError(f"transposition needs two distinct labels, got ({i},{j})")
    for x in (i, j):
        if not 1 <= x <= n:
            raise ValueError(f"label {x} is outside 1..{n}")


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product pq: apply q first, then p."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    pi = p.image
    return Permutation(tuple(pi[x - 1] for x in q.image))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p.image, start=1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycle decomposition including fixed points.

    Each cycle starts at its smallest label; cycles are ordered by that label.
    """
    seen = [False] * (p.n + 1)
    out = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p.image[x - 1]
        out.append(tuple(cyc))
    return out


def cycle_count(p: Permutation) -> int:
    return len(cycles(p))


def fixed_points(p: Permutation) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(p.image, start=1) if x == i)


def apply_transposition(p: Permutation, edge: tuple[int, int]) -> Permutation:
    """Return p·(i,j), i.e. the one-line image with positions i and j swapped.

    In marker terms: vertex k holds marker p(k); applying edge (i,j) swaps the
    markers sitting on i and j.
    """
    i, j = edge
    _check_pair(p.n, i, j)
    image = list(p.image)
    image[i - 1], image[j - 1] = image[j - 1], image[i - 1]
    return Permutation(tuple(image))


def rank(p: Permutation) -> int:
    """Lexicographic rank via the Lehmer code; the identity has rank 0."""
    n = p.n
    img = p.image
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if img[j] < img[i])
        r += smaller * factorial(n - 1 - i)
    return r


def unrank(k: int, n: int) -> Permutation:
    if not 0 <= k < factorial(n):
        raise ValueError(f"rank {k} is outside [0, {n}!)")
    pool = list(range(1, n + 1))
    image = []
    for i in range(n - 1, -1, -1):
        digit, k = divmod(k, factorial(i))
        image.append(pool.pop(digit))
    return Permutation(tuple(image))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in rank order."""
    for k in range(factorial(n)):
        yield unrank(k, n)


# ---------------------------------------------------------------------------
# Vectorized blocks. Rows are 0-based images: row[i] = p(i+1) - 1.


def permutation_table(n: int) -> np.ndarray:
    """All n! permutations as an ``(n!, n)`` int8 array, row k = unrank(k).

    Cached for n <= 10; the array is read-only.
    """
    return _permutation_table(n)


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    table = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, n + 1):
        # Lex order of S_m: first symbol f, then S_{m-1} on the rest in lex order.
        blocks = []
        for f in range(m):
            rest = table + (table >= f)
            head = np.full((rest.shape[0], 1), f, dtype=np.int8)
            blocks.append(np.hstack([head, rest.astype(np.int8)]))
        table = np.vstack(blocks)
    table.setflags(write=False)
    return table


def rank_rows(rows: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row of a 0-based permutation block."""
    rows = np.asarray(rows)
    m, n = rows.shape
    out = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        smaller = (rows[:, i + 1 :] < rows[:, i : i + 1]).sum(axis=1)
        out += smaller * factorial(n - 1 - i)
    return out


def unrank_rows(ranks: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`rank_rows` for a vector of ranks."""
    ranks = np.asarray(ranks, dtype=np.int64)
    digits = np.empty((ranks.size, n), dtype=np.int8)
    rem = ranks.copy()
    for i in range(n):
        f = factorial(n - 1 - i)
        digits[:, i] = rem // f
        rem %= f
    # Decode right to left: each digit shifts the values already placed after it.
    out = digits.copy()
    for i in range(n - 2, -1, -1):
        right = out[:, i + 1 :]
        right += right >= out[:, i : i + 1]
    return out


def cycle_counts(rows: np.ndarray) -> np.ndarray:
    """Number of cycles (fixed points included) of each row."""
    rows = np.asarray(rows)
    m, n = rows.shape
    idx = np.arange(m)
    count = np.zeros(m, dtype=np.int64)
    for i in range(n):
        # i opens a cycle iff no label smaller than i lies on its cycle.
        cur = rows[:, i].astype(np.int64)
        is_min = np.ones(m, dtype=bool)
        for _ in range(n - 1):
            is_min &= cur >= i
            cur = rows[idx, cur]
        count += is_min
    return count


@lru_cache(maxsize=None)
def _cycle_count_table(n: int) -> np.ndarray:
    c = cycle_counts(permutation_table(n)).astype(np.int8)
    c.setflags(write=False)
    return c


def cycle_count_table(n: int) -> np.ndarray:
    """``cycle_count(unrank(k, n))`` for every rank k, cached per n."""
    return _cycle_count_table(n)


def to_row(p: Permutation) -> np.ndarray:
    return np.asarray(p.image, dtype=np.int8) - 1


def from_row(row: Sequence[int]) -> Permutation:
    return Permutation(tuple(int(x) + 1 for x in row))
