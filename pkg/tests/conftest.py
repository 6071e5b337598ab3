from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from harary.enumeration import canonical_code, graph_from_code
from harary.graph import Graph, from_edge_list


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 10) -> Graph:
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def any_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])


_ALL: dict[int, list[Graph]] = {1: [Graph(1, (0,))]}


def all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of all graphs (connected or not) on n vertices."""
    if n not in _ALL:
        codes = set()
        for h in all_graphs(n - 1):
            for mask in range(1 << (n - 1)):
                rows = list(h.rows)
                for v in range(n - 1):
                    if mask >> v & 1:
                        rows[v] |= 1 << (n - 1)
                codes.add(canonical_code(Graph(n, tuple(rows) + (mask,))))
        _ALL[n] = [graph_from_code(n, c) for c in sorted(codes)]
    return _ALL[n]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1234)
