"""Non-isomorphic trees on n vertices.

Isomorphism classes are identified by a center-rooted AHU string. Two
generators are available: extending every tree on n-1 vertices by one leaf
in all possible places (the default), or decoding all n^(n-2) Prüfer codes.
Both deduplicate on the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import LimitExceededError
from .tree import TranspositionTree, validate

DEFAULT_MAX_N = 10


@dataclass(frozen=True)
class TreeCatalog:
    n: int
    representatives: tuple[TranspositionTree, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    def __len__(self) -> int:
        return len(self.representatives)


def from_pruefer(code: Sequence[int], n: int | None = None) -> TranspositionTree:
    """Decode a Prüfer sequence of length n-2 into a labelled tree."""
    code = [int(x) for x in code]
    if n is None:
        n = len(code) + 2
    if n < 2 or len(code) != n - 2:
        raise ValueError(f"a Prüfer code for n={n} has length {n - 2}, got {len(code)}")
    for x in code:
        if not 1 <= x <= n:
            raise ValueError(f"label {x} is outside 1..{n}")
    degree = [1] * (n + 1)
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(1, n + 1) if degree[w] == 1)
    edges.append((u, v))
    return validate(n, edges)


def centers(t: TranspositionTree) -> list[int]:
    """The one or two vertices of minimum eccentricity (by leaf peeling)."""
    adj = t.adjacency
    remaining = set(t.active)
    deg = {v: len(adj[v]) for v in remaining}
    layer = [v for v in remaining if deg[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for w in adj[v]:
                if w in remaining:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(remaining)


def _encode(adj, root: int, parent: int) -> str:
    kids = sorted(_encode(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def _rooted(t: TranspositionTree) -> tuple[str, int]:
    """Smallest center-rooted encoding and the root that produces it."""
    adj = t.adjacency
    return min((_encode(adj, c, 0), c) for c in centers(t))


def canonical_form(t: TranspositionTree) -> str:
    """String that is equal for two trees exactly when they are isomorphic."""
    return _rooted(t)[0]


def canonical_labelling(t: TranspositionTree) -> TranspositionTree:
    """Relabel by breadth-first order of the canonical rooted tree.

    Isomorphic inputs give identical outputs, so catalog entries do not depend
    on how they were generated.
    """
    adj = t.adjacency
    _, root = _rooted(t)
    memo: dict[tuple[int, int], str] = {}

    def code(v: int, parent: int) -> str:
        key = (v, parent)
        if key not in memo:
            memo[key] = "(" + "".join(sorted(code(c, v) for c in adj[v] if c != parent)) + ")"
        return memo[key]

    label = {root: 1}
    order = [(root, 0)]
    for v, parent in order:
        kids = sorted((c for c in adj[v] if c != parent), key=lambda c: code(c, v))
        for c in kids:
            label[c] = len(label) + 1
            order.append((c, v))
    return validate(t.n, [(label[u], label[v]) for u, v in t.active_edges])


def _catalog_from(trees, n: int) -> TreeCatalog:
    reps: dict[str, TranspositionTree] = {}
    for t in trees:
        key = canonical_form(t)
        if key not in reps:
            reps[key] = t
    ordered = [canonical_labelling(reps[k]) for k in sorted(reps)]
    return TreeCatalog(n, tuple(ordered))


@lru_cache(maxsize=None)
def _grow(n: int) -> TreeCatalog:
    if n == 1:
        return TreeCatalog(1, (validate(1, []),))
    smaller = _grow(n - 1)

    def extended():
        for t in smaller:
            for v in range(1, n):
                yield validate(n, list(t.edges) + [(v, n)])

    return _catalog_from(extended(), n)


def _pruefer_all(n: int) -> TreeCatalog:
    if n == 1:
        return TreeCatalog(1, (validate(1, []),))
    codes = product(range(1, n + 1), repeat=n - 2)
    return _catalog_from((from_pruefer(c, n) for c in codes), n)


def enumerate_trees(n: int, method: str = "grow", max_n: int = DEFAULT_MAX_N) -> TreeCatalog:
    """Catalog of all trees on n vertices up to isomorphism.

    ``method="pruefer"`` decodes every labelled tree (n^(n-2) of them) and is
    only practical up to about n = 8.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise LimitExceededError("tree enumeration", n, max_n)
    if method == "grow":
        return _grow(n)
    if method == "pruefer":
        return _pruefer_all(n)
    raise ValueError(f"unknown method {method!r}; use 'grow' or 'pruefer'")
