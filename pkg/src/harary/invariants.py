"""Exact combinatorial invariants: matchings, covers, odd components, bridges."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import DisconnectedGraphError, GraphError
from .graph import Edge, Graph, components, is_connected

EXHAUSTIVE_CAP = 20


@dataclass(frozen=True)
class MatchingCertificate:
    size: int
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class DeficiencyWitness:
    value: int
    witness_set: tuple[int, ...]


def matching_number(g: Graph) -> MatchingCertificate:
    """Maximum matching by Edmonds' blossom algorithm.

    Augmenting paths are grown by BFS from each exposed vertex; odd cycles
    found on the way are shrunk by relabeling their vertices to a common base.
    """
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    mate = [-1] * n

    # greedy start, only shortens the search
    for u in range(n):
        if mate[u] == -1:
            for w in adj[u]:
                if mate[w] == -1:
                    mate[u], mate[w] = w, u
                    break

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            while True:
                a = base[a]
                on_path[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if on_path[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark(v, b, to, blossom)
                    mark(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to, parent
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1, parent

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt

    edges = tuple((u, mate[u]) for u in range(n) if mate[u] > u)
    return MatchingCertificate(len(edges), edges)


def _mask(g: Graph, subset: Iterable[int]) -> int:
    mask = 0
    for v in subset:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
        mask |= 1 << v
    return mask


def odd_components(g: Graph, removed: Iterable[int]) -> int:
    """Number of odd-order components of ``g`` minus the given vertex set."""
    return sum(1 for comp in components(g, _mask(g, removed)) if comp.bit_count() % 2)


def tutte_berge_deficiency(g: Graph) -> DeficiencyWitness:
    """max over X of o(G - X) - |X|, with the first maximizing X in popcount order."""
    n = g.n
    if n > EXHAUSTIVE_CAP:
        raise GraphError(f"exhaustive deficiency search is capped at n={EXHAUSTIVE_CAP}")
    best, best_set = None, ()
    for size in range(n + 1):
        # o(G - X) - |X| <= (n - |X|) - |X|
        if best is not None and n - 2 * size <= best:
            break
        for subset in combinations(range(n), size):
            value = odd_components(g, subset) - size
            if best is None or value > best:
                best, best_set = value, subset
    return DeficiencyWitness(best, best_set)


def covering_number(g: Graph) -> int:
    """Size of a minimum vertex cover, by subsets of increasing size."""
    if g.n > EXHAUSTIVE_CAP:
        raise GraphError(f"exhaustive cover search is capped at n={EXHAUSTIVE_CAP}")
    edges = g.edges()
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            cover = _mask(g, subset)
            if all(cover >> u & 1 or cover >> v & 1 for u, v in edges):
                return size
    return g.n


def cut_edges(g: Graph) -> list[Edge]:
    """Bridges by depth-first search with low-link values."""
    if not is_connected(g):
        raise DisconnectedGraphError()
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    bridges = []
    timer = 0
    disc[0] = low[0] = timer
    # frames: (vertex, parent, next neighbor index)
    stack = [(0, -1, 0)]
    while stack:
        v, parent, i = stack.pop()
        if i < len(adj[v]):
            stack.append((v, parent, i + 1))
            w = adj[v][i]
            if w == parent:
                continue
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, v, 0))
            else:
                low[v] = min(low[v], disc[w])
        elif parent != -1:
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.append((min(parent, v), max(parent, v)))
    return sorted(bridges)


def is_bipartite(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-coloring with vertex 0 on the first side, or None for odd cycles."""
    if not is_connected(g):
        raise DisconnectedGraphError()
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if color[w] == -1:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    return (
        tuple(v for v in range(g.n) if color[v] == 0),
        tuple(v for v in range(g.n) if color[v] == 1),
    )
