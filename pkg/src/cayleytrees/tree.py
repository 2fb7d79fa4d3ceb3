"""Transposition trees on the labels {1..n}.

A :class:`TranspositionTree` keeps the full edge set together with the set of
vertices still *active*; deleting vertices (as the pair-removal estimate
does) returns a new tree whose active part is the induced subtree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import InvalidTreeError

Edge = tuple[int, int]

STRATEGIES = ("double_sweep", "lexicographic_min")


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TranspositionTree:
    n: int
    edges: frozenset[Edge]
    active: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.active is None:
            object.__setattr__(self, "active", frozenset(range(1, self.n + 1)))

    # -- structure ---------------------------------------------------------

    @cached_property
    def active_edges(self) -> tuple[Edge, ...]:
        """Edges with both endpoints active, in lexicographic order."""
        act = self.active
        return tuple(sorted(e for e in self.edges if e[0] in act and e[1] in act))

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.active}
        for u, v in self.active_edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(nb)) for v, nb in adj.items()}

    @property
    def vertices(self) -> list[int]:
        return sorted(self.active)

    @property
    def is_full(self) -> bool:
        return len(self.active) == self.n

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if len(self.adjacency[v]) <= 1]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.active_edges_set

    @cached_property
    def active_edges_set(self) -> frozenset[Edge]:
        return frozenset(self.active_edges)

    # -- distances ---------------------------------------------------------

    def distances_from(self, source: int) -> dict[int, int]:
        """Hop distances from ``source`` to every active vertex."""
        dist = {source: 0}
        queue = deque([source])
        adj = self.adjacency
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def path(self, source: int, target: int) -> list[int]:
        """Vertex sequence of the unique path from ``source`` to ``target``."""
        parent = {source: source}
        queue = deque([source])
        adj = self.adjacency
        while queue:
            u = queue.popleft()
            if u == target:
                break
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        out = [target]
        while out[-1] != source:
            out.append(parent[out[-1]])
        return out[::-1]

    @cached_property
    def distance_table(self) -> "DistanceTable":
        return all_pairs_distances(self)

    def dist(self, u: int, v: int) -> int:
        return self.distance_table.dist(u, v)

    @cached_property
    def diameter(self) -> int:
        return self.distance_table.diameter

    def remove_vertices(self, vs: Iterable[int]) -> "TranspositionTree":
        return remove_vertices(self, vs)

    def relabel(self, mapping: dict[int, int]) -> "TranspositionTree":
        """Apply a bijection of {1..n} to the labels of a full tree."""
        edges = frozenset(_norm(mapping[u], mapping[v]) for u, v in self.edges)
        return TranspositionTree(self.n, edges, frozenset(mapping[v] for v in self.active))

    def __repr__(self) -> str:
        extra = "" if self.is_full else f", active={sorted(self.active)}"
        return f"TranspositionTree(n={self.n}, edges={sorted(self.edges)}{extra})"


@dataclass(frozen=True)
class DistanceTable:
    """Symmetric hop-distance matrix over the active vertices.

    ``matrix`` is indexed by label (row/column 0 unused); entries for inactive
    labels are -1.
    """

    matrix: np.ndarray
    vertices: tuple[int, ...]

    def dist(self, u: int, v: int) -> int:
        d = int(self.matrix[u, v])
        if d < 0:
            raise KeyError(f"pair ({u},{v}) involves an inactive vertex")
        return d

    @property
    def diameter(self) -> int:
        return int(self.matrix.max()) if len(self.vertices) else 0


def validate(n: int, edges: Iterable[Iterable[int]]) -> TranspositionTree:
    """Check that ``edges`` form a spanning tree on {1..n}."""
    if n < 1:
        raise InvalidTreeError("a tree needs at least one vertex")
    seen: set[Edge] = set()
    for e in edges:
        u, v = (int(x) for x in e)
        for x in (u, v):
            if not 1 <= x <= n:
                raise InvalidTreeError(f"label {x} is outside 1..{n}")
        if u == v:
            raise InvalidTreeError(f"self-loop at vertex {u}")
        key = _norm(u, v)
        if key in seen:
            raise InvalidTreeError(f"duplicate edge {key}")
        seen.add(key)

    # Union-find tells cycle apart from disconnection regardless of edge count.
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sorted(seen):
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InvalidTreeError(f"edge {(u, v)} closes a cycle")
        parent[ru] = rv
    if len({find(x) for x in range(1, n + 1)}) > 1:
        raise InvalidTreeError("edges do not connect all vertices (disconnected)")
    if len(seen) != n - 1:  # pragma: no cover - implied by the two checks above
        raise InvalidTreeError(f"expected {n - 1} edges, got {len(seen)}")
    return TranspositionTree(n, frozenset(seen))


def all_pairs_distances(t: TranspositionTree) -> DistanceTable:
    mat = np.full((t.n + 1, t.n + 1), -1, dtype=np.int64)
    for s in t.active:
        for v, d in t.distances_from(s).items():
            mat[s, v] = d
    return DistanceTable(mat, tuple(t.vertices))


def _farthest(t: TranspositionTree, source: int) -> tuple[int, int]:
    dist = t.distances_from(source)
    best = max(dist.values())
    return min(v for v, d in dist.items() if d == best), best


def diametral_pair(t: TranspositionTree, strategy: str = "double_sweep") -> Edge:
    """Two active vertices at distance diam(T), returned as (smaller, larger).

    ``double_sweep``: search from the lowest active label for a farthest
    vertex i, then from i for a farthest vertex j (ties to the lowest label).
    Two linear searches, no distance table needed.

    ``lexicographic_min``: the smallest diametral pair in lexicographic order.
    """
    if len(t.active) < 2:
        raise ValueError("need at least two active vertices")
    if strategy == "double_sweep":
        i, _ = _farthest(t, min(t.active))
        j, _ = _farthest(t, i)
        return _norm(i, j)
    if strategy == "lexicographic_min":
        return min(all_diametral_pairs(t))
    raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")


def all_diametral_pairs(t: TranspositionTree) -> set[Edge]:
    if len(t.active) < 2:
        raise ValueError("need at least two active vertices")
    table = t.distance_table
    diam = table.diameter
    return {(u, v) for u, v in combinations(t.vertices, 2) if table.matrix[u, v] == diam}


def remove_vertices(t: TranspositionTree, vs: Iterable[int]) -> TranspositionTree:
    vs = frozenset(vs)
    missing = vs - t.active
    if missing:
        raise ValueError(f"vertices {sorted(missing)} are not active")
    rest = TranspositionTree(t.n, t.edges, t.active - vs)
    if rest.active:
        reached = rest.distances_from(min(rest.active))
        if len(reached) != len(rest.active):
            raise InvalidTreeError(
                f"removing {sorted(vs)} disconnects the remaining tree"
            )
    return rest


# -- standard families --------------------------------------------------------


def path_tree(n: int) -> TranspositionTree:
    return validate(n, [(i, i + 1) for i in range(1, n)])


def star_tree(n: int, center: int = 1) -> TranspositionTree:
    return validate(n, [(center, v) for v in range(1, n + 1) if v != center])


def broom_tree(n: int) -> TranspositionTree:
    """Path 1..n-2 with two pendant leaves n-1 and n attached at n-2."""
    if n < 4:
        raise ValueError("broom needs n >= 4")
    return validate(n, [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)])


# -- edge-list text format ---------------------------------------------------


def parse_tree(text: str) -> TranspositionTree:
    """Parse ``u v`` lines ('#' comments and blank lines ignored)."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidTreeError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidTreeError(f"line {lineno}: labels must be integers: {raw!r}")
    if not edges:
        raise InvalidTreeError("no edges found")
    labels = {x for e in edges for x in e}
    n = max(labels)
    if min(labels) < 1 or labels != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - labels)
        raise InvalidTreeError(f"labels must be exactly 1..{n}; missing {missing}")
    return validate(n, edges)


def read_tree(path) -> TranspositionTree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def format_tree(t: TranspositionTree) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(t.edges))
