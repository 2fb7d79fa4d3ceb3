"""Constructive sorting of a permutation with tree transpositions.

Vertex k of the tree holds marker p(k); applying edge (i, j) swaps the two
markers, turning p into p·(i,j). A permutation is sorted once every marker m
sits on vertex m. Each sorter below returns the edges it used, which is an
explicit certificate that dist_Γ(I, p) is at most the sequence length.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .alg_a import AlgARun, replay
from .bound import f_T
from .perm import Permutation
from .tree import Edge, TranspositionTree, diametral_pair


class SortingError(RuntimeError):
    """A sorter got stuck; indicates a bug, never a property of the input."""


@dataclass(frozen=True)
class SortingSequence:
    tree: TranspositionTree
    start: Permutation
    edges: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def positions(self) -> list[Permutation]:
        """Marker positions before each step and after the last one."""
        out = [self.start]
        cur = list(self.start.image)
        for i, j in self.edges:
            cur[i - 1], cur[j - 1] = cur[j - 1], cur[i - 1]
            out.append(Permutation(tuple(cur)))
        return out


def verify(seq: SortingSequence) -> bool:
    """True iff every edge is a tree edge and replaying them sorts ``start``."""
    if seq.start.n != seq.tree.n:
        return False
    cur = list(seq.start.image)
    for i, j in seq.edges:
        if not seq.tree.has_edge(i, j):
            return False
        cur[i - 1], cur[j - 1] = cur[j - 1], cur[i - 1]
    return cur == list(range(1, seq.tree.n + 1))


class _Board:
    """Mutable marker placement used while a sorter runs."""

    def __init__(self, p: Permutation):
        self.marker = [0] + list(p.image)  # marker[v] = marker on vertex v
        self.where = [0] * (p.n + 1)  # where[m] = vertex holding marker m
        for v in range(1, p.n + 1):
            self.where[self.marker[v]] = v
        self.edges: list[Edge] = []

    def swap(self, u: int, v: int) -> None:
        mu, mv = self.marker[u], self.marker[v]
        self.marker[u], self.marker[v] = mv, mu
        self.where[mu], self.where[mv] = v, u
        self.edges.append((u, v) if u < v else (v, u))

    def home(self, t: TranspositionTree, m: int) -> int:
        """Walk marker m along the tree path to vertex m; returns edges used."""
        route = t.path(self.where[m], m)
        for a, b in zip(route, route[1:]):
            self.swap(a, b)
        return len(route) - 1

    def is_sorted(self, vertices) -> bool:
        return all(self.marker[v] == v for v in vertices)


def _check(t: TranspositionTree, p: Permutation) -> None:
    if not t.is_full:
        raise ValueError("expected a full tree")
    if p.n != t.n:
        raise ValueError(f"degree mismatch: permutation has n={p.n}, tree has n={t.n}")


# -- admissible edges ---------------------------------------------------------


def admissible_edge(t: TranspositionTree, p: Permutation) -> tuple[Edge, str] | None:
    """First admissible edge for position p, preferring type A over type B.

    Type A: both markers on the edge move closer to their homes.
    Type B: one endpoint is already homed and the other marker's path home
    crosses it. Edges are scanned in lexicographic order. Returns None only
    for the identity.
    """
    D = t.distance_table.matrix
    img = p.image
    type_b = None
    for i, j in t.active_edges:
        mi, mj = img[i - 1], img[j - 1]
        closer_i = D[j, mi] < D[i, mi]
        closer_j = D[i, mj] < D[j, mj]
        if closer_i and closer_j:
            return (i, j), "A"
        if type_b is None and ((mi == i and closer_j) or (mj == j and closer_i)):
            type_b = (i, j)
    if type_b is not None:
        return type_b, "B"
    return None


def sort_admissible(t: TranspositionTree, p: Permutation) -> SortingSequence:
    """Apply admissible edges until sorted; f_T drops by at least 1 per step."""
    _check(t, p)
    ident = Permutation.identity(t.n)
    cur = p
    edges: list[Edge] = []
    while cur != ident:
        found = admissible_edge(t, cur)
        if found is None:
            raise SortingError(f"no admissible edge at position {cur}")
        (i, j), _ = found
        img = list(cur.image)
        img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
        cur = Permutation(tuple(img))
        edges.append((i, j))
    return SortingSequence(t, p, tuple(edges))


# -- pair homing -------------------------------------------------------------


def sort_by_pair_homing(
    t: TranspositionTree, p: Permutation, strategy: str = "double_sweep"
) -> tuple[SortingSequence, AlgARun]:
    """Home markers two at a time on leaves that realize the current diameter.

    Each round takes a diametral pair (i, j) of the current tree. If marker i
    sits at distance diam(T) from vertex i, its position q is itself a
    diametral partner of i: marker q is homed first (its last step pushes
    marker i one vertex inwards) and then marker i, and the pair becomes
    {i, q}. Otherwise marker i is homed and then marker j. Either way the
    round uses at most 2*diam(T) - 1 edges; both leaves are then deleted.

    Returns the sequence and the removal run it induces, whose beta bounds
    the sequence length.
    """
    _check(t, p)
    board = _Board(p)
    pairs: list[Edge] = []
    cur = t
    while len(cur.active) >= 3:
        i, j = diametral_pair(cur, strategy)
        diam = cur.diameter
        q = board.where[i]
        if q != i and cur.dist(i, q) == diam:
            # Orient so that i keeps the role of the vertex whose marker is far.
            first, second, partner = q, i, q
        else:
            first, second, partner = i, j, j
        used = board.home(cur, first) + board.home(cur, second)
        if used > 2 * diam - 1:
            raise SortingError(f"round on {(i, partner)} used {used} > {2 * diam - 1} edges")
        pair = (min(i, partner), max(i, partner))
        pairs.append(pair)
        cur = cur.remove_vertices(pair)
    if len(cur.active) == 2:
        u, v = cur.vertices
        if board.marker[u] != u:
            board.swap(u, v)
    if not board.is_sorted(range(1, t.n + 1)):
        raise SortingError("pair homing finished with unsorted markers")
    return SortingSequence(t, p, tuple(board.edges)), replay(t, pairs)


# -- sequential leaf homing ---------------------------------------------------


def _core_sort(core: TranspositionTree, board: _Board) -> None:
    """Optimal sort of a small residual tree by BFS over its marker placements."""
    verts = core.vertices
    start = tuple(board.marker[v] for v in verts)
    goal = tuple(verts)
    pos = {v: k for k, v in enumerate(verts)}
    gens = [(pos[u], pos[v]) for u, v in core.active_edges]
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, int]] | None] = {start: None}
    queue = deque([start])
    while queue and goal not in parent:
        s = queue.popleft()
        for a, b in gens:
            nxt = list(s)
            nxt[a], nxt[b] = nxt[b], nxt[a]
            nt = tuple(nxt)
            if nt not in parent:
                parent[nt] = (s, (a, b))
                queue.append(nt)
    steps = []
    s = goal
    while parent[s] is not None:
        s, move = parent[s]
        steps.append(move)
    for a, b in reversed(steps):
        board.swap(verts[a], verts[b])


def sort_sequential_leaf(
    t: TranspositionTree,
    p: Permutation,
    order: Sequence[int] | None = None,
    core_size: int = 4,
) -> SortingSequence:
    """Home markers one leaf at a time, deleting each homed leaf.

    ``order`` lists the leaves to home; by default the lowest-labelled leaf of
    the current tree is taken each time. Once ``core_size`` vertices remain,
    the core is sorted optimally by brute force. On the broom this gives at
    most (n-2) + (n-3) + ... + 3 + 4 edges.
    """
    _check(t, p)
    board = _Board(p)
    cur = t
    queue = list(order) if order is not None else None
    while len(cur.active) > core_size:
        if queue is not None:
            if not queue:
                raise ValueError("elimination order ended before reaching the core")
            v = queue.pop(0)
            if v not in cur.active or cur.degree(v) > 1:
                raise ValueError(f"vertex {v} is not a leaf of the current tree")
        else:
            v = cur.leaves()[0]
        board.home(cur, v)
        cur = cur.remove_vertices((v,))
    _core_sort(cur, board)
    if not board.is_sorted(range(1, t.n + 1)):
        raise SortingError("sequential homing finished with unsorted markers")
    return SortingSequence(t, p, tuple(board.edges))


def f_T_trajectory(seq: SortingSequence) -> list[int]:
    """f_T at every position visited by ``seq``."""
    return [f_T(seq.tree, q) for q in seq.positions()]
