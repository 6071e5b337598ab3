"""Parametric graph families used by the extremal results.

Labeling convention for :func:`generate`: the join block comes first, then
each part in the order listed; clique vertices come before pendant vertices,
and pendants are grouped by the clique vertex they hang from.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from functools import reduce

from .errors import GraphError
from .graph import Graph, complete_graph, disjoint_union, empty_graph, from_edge_list, join


def _positive(name: str, *values: int) -> None:
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise GraphError(f"{name}: counts must be positive integers, got {v!r}")


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self) -> None:
        _positive("Complete", self.n)


@dataclass(frozen=True)
class EmptyComplement:
    """The edgeless graph on ``n`` vertices (complement of ``K_n``)."""

    n: int

    def __post_init__(self) -> None:
        _positive("EmptyComplement", self.n)


@dataclass(frozen=True)
class CompleteBipartite:
    n1: int
    n2: int

    def __post_init__(self) -> None:
        _positive("CompleteBipartite", self.n1, self.n2)


@dataclass(frozen=True)
class Star:
    """``K_{1,n-1}`` with the center at vertex 0."""

    n: int

    def __post_init__(self) -> None:
        _positive("Star", self.n)


@dataclass(frozen=True)
class SplitJoin:
    """``K_s`` joined to the disjoint union of cliques ``K_{n_1}, ..., K_{n_k}``."""

    s: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise GraphError("SplitJoin needs at least one part")
        _positive("SplitJoin", self.s, *self.parts)


@dataclass(frozen=True)
class PendantClique:
    """``K_t(r_1, ..., r_s)``: clique vertex ``i`` carries ``pendants[i]`` pendant edges."""

    t: int
    pendants: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pendants", tuple(self.pendants))
        _positive("PendantClique", self.t, *self.pendants)
        if len(self.pendants) > self.t:
            raise GraphError("PendantClique: more pendant groups than clique vertices")


@dataclass(frozen=True)
class CollapsedSplit:
    """``K_s`` joined to (edgeless ``k-1`` vertices plus ``K_{2t+1}``)."""

    s: int
    t: int
    k: int

    def __post_init__(self) -> None:
        _positive("CollapsedSplit", self.s, self.t, self.k)
        if self.k < 3:
            raise GraphError("CollapsedSplit requires k >= 3")


FamilySpec = Complete | EmptyComplement | CompleteBipartite | Star | SplitJoin | PendantClique | CollapsedSplit

FAMILIES = {
    cls.__name__.lower(): cls
    for cls in (Complete, EmptyComplement, CompleteBipartite, Star, SplitJoin, PendantClique, CollapsedSplit)
}


def generate(spec: FamilySpec) -> Graph:
    match spec:
        case Complete(n):
            return complete_graph(n)
        case EmptyComplement(n):
            return empty_graph(n)
        case CompleteBipartite(n1, n2):
            return join(empty_graph(n1), empty_graph(n2))
        case Star(n):
            return complete_graph(1) if n == 1 else join(complete_graph(1), empty_graph(n - 1))
        case SplitJoin(s, parts):
            cliques = reduce(disjoint_union, [complete_graph(p) for p in parts])
            return join(complete_graph(s), cliques)
        case PendantClique(t, pendants):
            n = t + sum(pendants)
            edges = [(u, v) for u in range(t) for v in range(u + 1, t)]
            nxt = t
            for anchor, r in enumerate(pendants):
                edges.extend((anchor, nxt + j) for j in range(r))
                nxt += r
            return from_edge_list(n, edges)
        case CollapsedSplit(s, t, k):
            rest = disjoint_union(empty_graph(k - 1), complete_graph(2 * t + 1))
            return join(complete_graph(s), rest)
    raise GraphError(f"unknown family spec {spec!r}")


_SPEC_RE = re.compile(r"^\s*([A-Za-z]+)\s*(\(.*\))\s*$")


def parse_family(text: str) -> FamilySpec:
    """Parse the textual form ``SplitJoin(2,[1,1,1,1])`` (names are case-insensitive)."""
    match = _SPEC_RE.match(text)
    if not match:
        raise GraphError(f"cannot parse family spec {text!r}")
    name, args = match.groups()
    cls = FAMILIES.get(name.lower())
    if cls is None:
        raise GraphError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    try:
        values = ast.literal_eval(args)
    except (ValueError, SyntaxError) as exc:
        raise GraphError(f"bad arguments in {text!r}") from exc
    if not isinstance(values, tuple):
        values = (values,)
    values = tuple(tuple(v) if isinstance(v, list) else v for v in values)
    try:
        return cls(*values)
    except TypeError as exc:
        raise GraphError(f"wrong number of arguments for {cls.__name__}") from exc
