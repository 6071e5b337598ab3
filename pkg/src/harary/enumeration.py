"""Canonical labeling, isomorphism and exhaustive enumeration of small connected graphs.

The canonical code of a graph is the smallest upper-triangle bitstring (graph6
bit order, first bit most significant) over the labelings reached by an
individualization-refinement search. The search starts from the degree
partition, refines to an equitable ordered partition, and branches on the
first non-singleton cell. Twins inside a cell (same neighborhood apart from
each other) are swapped by an automorphism, so only one of them is tried.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .errors import GraphError
from .graph import Graph, _bits

ENUM_MIN_N = 2
ENUM_MAX_N = 8
ISO_MAX_N = 10


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            refined.extend(groups[sig] for sig in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _code(g: Graph, order: list[int]) -> int:
    code = 0
    rows = g.rows
    for j in range(1, g.n):
        row = rows[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)`` where ``g.relabel(order)`` is the canonical representative."""
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(g, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        reps: list[int] = []
        for v in cell:
            if any(g.rows[v] & ~(1 << r) == g.rows[r] & ~(1 << v) for r in reps):
                continue
            reps.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    search([list(range(g.n))])
    return best[0], best[1]


def canonical_code(g: Graph) -> int:
    return canonical_form(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_form(g)[1])


def graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    pos = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def isomorphic(g1: Graph, g2: Graph) -> bool:
    if max(g1.n, g2.n) > ISO_MAX_N:
        raise GraphError(f"isomorphism test is capped at n={ISO_MAX_N}")
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_code(g1) == canonical_code(g2)


def _extensions(args: tuple[int, tuple[int, ...]]) -> set[int]:
    n, parents = args
    codes = set()
    for pcode in parents:
        h = graph_from_code(n - 1, pcode)
        for mask in range(1, 1 << (n - 1)):
            rows = list(h.rows)
            for v in _bits(mask):
                rows[v] |= 1 << (n - 1)
            rows.append(mask)
            codes.add(canonical_code(Graph(n, tuple(rows))))
    return codes


_CODES: dict[int, tuple[int, ...]] = {1: (0,)}


def _connected_codes(n: int, jobs: int = 1) -> tuple[int, ...]:
    if n in _CODES:
        return _CODES[n]
    # every connected graph has a non-cut vertex (a leaf of a spanning tree),
    # so it arises from a connected graph on n - 1 vertices plus one vertex
    parents = _connected_codes(n - 1, 1)
    if jobs > 1 and len(parents) > jobs:
        chunks = [(n, parents[i::jobs]) for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            codes = set().union(*pool.map(_extensions, chunks))
    else:
        codes = _extensions((n, parents))
    _CODES[n] = tuple(sorted(codes))
    return _CODES[n]


def enumerate_connected(n: int, jobs: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs, by code."""
    if not ENUM_MIN_N <= n <= ENUM_MAX_N:
        raise GraphError(f"enumeration supports {ENUM_MIN_N} <= n <= {ENUM_MAX_N}, got {n}")
    for code in _connected_codes(n, max(1, jobs)):
        yield graph_from_code(n, code)
