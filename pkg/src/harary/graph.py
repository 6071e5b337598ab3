"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex, so ``rows[u] >> v & 1``
tells whether ``uv`` is an edge. Graphs are immutable; every operation returns
a new value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import DisconnectedGraphError, GraphError, NotABridgeError

MAX_VERTICES = 64

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must lie in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        degree_sum = 0
        for u, row in enumerate(self.rows):
            if row & ~full or row >> u & 1:
                raise GraphError(f"row {u} has bits outside the vertex range or a loop")
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"adjacency is not symmetric at ({u}, {v})")
            degree_sum += row.bit_count()
        object.__setattr__(self, "m", degree_sum // 2)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)]

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the graph whose vertex ``i`` is old vertex ``perm[i]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        pos = [0] * self.n
        for new, old in enumerate(perm):
            pos[old] = new
        rows = []
        for old in perm:
            row = 0
            for w in _bits(self.rows[old]):
                row |= 1 << pos[w]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def induced(self, keep: int) -> Graph:
        """Subgraph induced on the vertex bitmask ``keep``, relabeled in order."""
        vs = list(_bits(keep))
        return self.relabel_subset(vs)

    def relabel_subset(self, vs: list[int]) -> Graph:
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for w in _bits(self.rows[v]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        return Graph(len(vs), tuple(rows))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range for n={n}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must lie in 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertex-disjoint union; the vertices of ``g2`` are shifted by ``g1.n``."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"union would have {n} > {MAX_VERTICES} vertices")
    return Graph(n, g1.rows + tuple(row << g1.n for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two blocks."""
    u = disjoint_union(g1, g2)
    low = (1 << g1.n) - 1
    high = ((1 << u.n) - 1) ^ low
    rows = tuple(row | high for row in u.rows[: g1.n]) + tuple(row | low for row in u.rows[g1.n :])
    return Graph(u.n, rows)


def reachable(g: Graph, source: int, removed: int = 0) -> int:
    """Bitmask of vertices reachable from ``source`` avoiding the ``removed`` mask."""
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen & ~removed
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable(g, 0) == (1 << g.n) - 1


def components(g: Graph, removed: int = 0) -> list[int]:
    """Connected components of ``g`` minus the ``removed`` vertex mask, as bitmasks."""
    left = ((1 << g.n) - 1) & ~removed
    comps = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reachable(g, v, removed)
        comps.append(comp)
        left &= ~comp
    return comps


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: np.ndarray = field(repr=False)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self.d[ij])


def apsp(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances by breadth-first search from every vertex."""
    if not is_connected(g):
        raise DisconnectedGraphError()
    n = g.n
    d = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        seen = frontier = 1 << s
        level = 0
        while frontier:
            level += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                d[s, v] = level
    d.setflags(write=False)
    return DistanceMatrix(n, d)


def is_bridge(g: Graph, u: int, v: int) -> bool:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return not reachable(g.remove_edge(u, v), u) >> v & 1


def contract_cut_edge_with_pendant(g: Graph, e: Edge) -> Graph:
    """Contract the bridge ``e = (w1, w2)`` into ``w1`` and hang ``w2`` off it as a pendant.

    The vertex count is unchanged: ``w1`` takes over every neighbor of ``w2``
    and ``w2`` keeps only the edge to ``w1``.
    """
    w1, w2 = e
    _check_pair(g.n, w1, w2)
    if not g.has_edge(w1, w2) or not is_bridge(g, w1, w2):
        raise NotABridgeError(f"({w1}, {w2}) is not a cut edge")
    if g.degree(w1) < 2 or g.degree(w2) < 2:
        raise GraphError("both endpoints of the cut edge need degree at least 2")
    rows = list(g.rows)
    moved = g.rows[w2] & ~(1 << w1)
    for x in _bits(moved):
        rows[x] = (rows[x] & ~(1 << w2)) | (1 << w1)
    rows[w1] |= moved
    rows[w2] = 1 << w1
    return Graph(g.n, tuple(rows))
