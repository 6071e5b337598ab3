"""Extremal searches over enumerated graphs and numeric checks of the lemma inequalities.

Every strict inequality ``rho(A) < rho(B)`` is turned into a margin
``rho(B) - rho(A)``, evaluated once with power iteration and once with Jacobi
eigenvalues; the smaller of the two differences is reported. A check passes
when the margin exceeds ``tol`` (1e-9 by default).
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable

from .enumeration import canonical_code, enumerate_connected, isomorphic
from .errors import EmptyClassError, GraphError, HypothesisError
from .families import (
    CollapsedSplit,
    Complete,
    CompleteBipartite,
    PendantClique,
    SplitJoin,
    Star,
    generate,
)
from .graph import Graph, complete_graph, contract_cut_edge_with_pendant, from_edge_list, is_bridge, is_connected
from .invariants import cut_edges, is_bipartite, matching_number
from .io import decode_graph6, encode_graph6
from .spectral import harary_of, rho_closed_form, rho_pair, spectral_radius

MARGIN_TOL = 1e-9
SYMMETRY_TOL = 1e-8
CLOSED_FORM_TOL = 1e-8
CHECK_MAX_TOTAL = 14


@lru_cache(maxsize=65536)
def radii(g: Graph) -> tuple[float, float]:
    return rho_pair(g)


def margin(lower: Graph, upper: Graph) -> float:
    """Conservative value of ``rho(upper) - rho(lower)`` over both eigen-routes."""
    lo, hi = radii(lower), radii(upper)
    return min(hi[0] - lo[0], hi[1] - lo[1])


# ---------------------------------------------------------------------------
# exhaustive catalog and extremal search


@dataclass(frozen=True)
class GraphRecord:
    graph: Graph
    radius: float
    radius_check: float
    matching: int
    bipartite: bool
    bridges: int

    @property
    def g6(self) -> str:
        return encode_graph6(self.graph)


def _record(g: Graph) -> GraphRecord:
    r, rc = radii(g)
    return GraphRecord(g, r, rc, matching_number(g).size, is_bipartite(g) is not None, len(cut_edges(g)))


_CATALOG: dict[int, tuple[GraphRecord, ...]] = {}


def catalog(n: int, jobs: int = 1) -> tuple[GraphRecord, ...]:
    """Invariants and both radii for every connected graph on ``n`` vertices, cached."""
    if n not in _CATALOG:
        graphs = list(enumerate_connected(n, jobs))
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                records = list(pool.map(_record, graphs, chunksize=64))
        else:
            records = [_record(g) for g in graphs]
        _CATALOG[n] = tuple(records)
    return _CATALOG[n]


class Family(str, Enum):
    MATCHING = "matching"
    BIPARTITE = "bipartite"
    CUT_EDGES = "cut-edges"
    TREES = "trees"


@dataclass(frozen=True)
class ClassSpec:
    family: Family
    n: int
    p: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        n, p = self.n, self.p
        if n < 2:
            raise GraphError("extremal classes need n >= 2")
        if self.family in (Family.MATCHING, Family.BIPARTITE) and not 1 <= p <= n // 2:
            raise GraphError(f"matching number must lie in 1..{n // 2}, got {p}")
        if self.family is Family.CUT_EDGES and not 0 <= p <= n - 1:
            raise GraphError(f"cut-edge count must lie in 0..{n - 1}, got {p}")

    def admits(self, rec: GraphRecord) -> bool:
        match self.family:
            case Family.MATCHING:
                return rec.matching == self.p
            case Family.BIPARTITE:
                return rec.bipartite and rec.matching == self.p
            case Family.CUT_EDGES:
                return rec.bridges == self.p
            case Family.TREES:
                return rec.graph.m == self.n - 1

    def params(self) -> dict[str, Any]:
        out: dict[str, Any] = {"family": self.family.value, "n": self.n}
        if self.family is not Family.TREES:
            out["p"] = self.p
        return out


def theorem_graph(spec: ClassSpec) -> Graph:
    """The extremal graph the corresponding theorem names for this class."""
    n, p = spec.n, spec.p
    match spec.family:
        case Family.MATCHING:
            if p == n // 2:
                return complete_graph(n)
            return generate(SplitJoin(p, (1,) * (n - p)))
        case Family.BIPARTITE:
            return generate(CompleteBipartite(p, n - p))
        case Family.CUT_EDGES:
            if p == 0:
                return complete_graph(n)
            return generate(PendantClique(n - p, (p,)))
        case Family.TREES:
            return generate(Star(n))


def theorem_graph_feasible(spec: ClassSpec, g: Graph) -> bool:
    rec = _record(g)
    return spec.admits(rec)


@dataclass
class VerificationReport:
    spec: ClassSpec
    class_size: int
    maximizers: list[Graph]
    maximizer_radius: float
    theorem_graph: Graph
    theorem_feasible: bool
    matches_theorem: bool
    runner_up_gap: float
    margins: list[tuple[dict[str, Any], float]] = field(default_factory=list)
    counterexample: Graph | None = None

    @property
    def ok(self) -> bool:
        return not self.theorem_feasible or self.matches_theorem


def extremal_search(spec: ClassSpec, tol: float = MARGIN_TOL, jobs: int = 1) -> VerificationReport:
    """Scan every connected graph of the class and compare the maximizer with the theorem graph."""
    members = [rec for rec in catalog(spec.n, jobs) if spec.admits(rec)]
    if not members:
        raise EmptyClassError(f"no connected graph in class {spec.params()}")
    members.sort(key=lambda rec: (-rec.radius, canonical_code(rec.graph)))
    top = members[0]
    tied = [rec for rec in members if top.radius - rec.radius <= tol]
    if len(members) > len(tied):
        nxt = members[len(tied)]
        gap = min(top.radius - nxt.radius, top.radius_check - nxt.radius_check)
    else:
        gap = math.inf

    target = theorem_graph(spec)
    feasible = theorem_graph_feasible(spec, target)
    target_code = canonical_code(target)
    matches = feasible and len(tied) == 1 and canonical_code(top.graph) == target_code
    counterexample = None
    if feasible and not matches:
        counterexample = next((rec.graph for rec in tied if canonical_code(rec.graph) != target_code), top.graph)

    margins = []
    if feasible:
        ref = next((rec for rec in members if canonical_code(rec.graph) == target_code), None)
        if ref is not None:
            for rec in members:
                if rec is ref:
                    continue
                m = min(ref.radius - rec.radius, ref.radius_check - rec.radius_check)
                margins.append(({"graph": rec.g6}, m))
                if m <= tol and counterexample is None:
                    counterexample = rec.graph
                    matches = False

    return VerificationReport(
        spec=spec,
        class_size=len(members),
        maximizers=[rec.graph for rec in tied],
        maximizer_radius=top.radius,
        theorem_graph=target,
        theorem_feasible=feasible,
        matches_theorem=matches,
        runner_up_gap=gap,
        margins=margins,
        counterexample=counterexample,
    )


def class_specs(family: Family | str, n: int) -> list[ClassSpec]:
    family = Family(family)
    match family:
        case Family.MATCHING | Family.BIPARTITE:
            return [ClassSpec(family, n, p) for p in range(1, n // 2 + 1)]
        case Family.CUT_EDGES:
            return [ClassSpec(family, n, p) for p in range(n)]
        case Family.TREES:
            return [ClassSpec(family, n)]


# ---------------------------------------------------------------------------
# lemma checks


@dataclass
class CaseResult:
    params: dict[str, Any]
    value: float
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass
class LemmaReport:
    lemma: str
    cases: list[CaseResult]
    tol: float = MARGIN_TOL
    # "margin": value must exceed tol; "deviation": value must not exceed tol
    kind: str = "margin"

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def counterexample(self) -> dict[str, Any] | None:
        return next((c.params for c in self.cases if not c.passed), None)

    def extend(self, other: LemmaReport) -> None:
        self.cases.extend(other.cases)


def _margin_case(params: dict[str, Any], value: float, tol: float, **detail: Any) -> CaseResult:
    return CaseResult(params, value, value > tol, detail)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise HypothesisError(message)


def check_edge_addition(graph: Graph, edge: tuple[int, int], tol: float = MARGIN_TOL) -> LemmaReport:
    """Adding a missing edge to a connected graph raises the radius."""
    u, v = edge
    _require(is_connected(graph), "graph must be connected")
    _require(not graph.has_edge(u, v), f"({u}, {v}) is already an edge")
    params = {"graph": encode_graph6(graph), "edge": [u, v]}
    return LemmaReport("2.2", [_margin_case(params, margin(graph, graph.add_edge(u, v)), tol)], tol)


def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs r < s with N(r) minus s equal to N(s) minus r."""
    return [
        (r, s)
        for r, s in combinations(range(g.n), 2)
        if g.rows[r] & ~(1 << s) == g.rows[s] & ~(1 << r)
    ]


def check_eigenvector_symmetry(graph: Graph, tol: float = SYMMETRY_TOL) -> LemmaReport:
    """Twin vertices carry equal Perron-vector entries."""
    result = spectral_radius(harary_of(graph))
    g6 = encode_graph6(graph)
    cases = []
    for r, s in twin_pairs(graph):
        dev = abs(float(result.vector[r] - result.vector[s]))
        cases.append(CaseResult({"graph": g6, "r": r, "s": s}, dev, dev <= tol, {"residual": result.residual}))
    return LemmaReport("2.4", cases, tol, kind="deviation")


def check_clique_shift(s: int, parts: list[int] | tuple[int, ...], tol: float = MARGIN_TOL) -> LemmaReport:
    """Moving a vertex from the smaller clique part to a larger one raises the radius.

    Compares ``K_s v (K_{n1} u K_{n2} u ...)`` with the one-vertex shift
    ``(n1 - 1, n2 + 1, ...)``, and when ``n1 >= 3`` also with the two-vertex
    shift ``(n1 - 2, n2 + 2, ...)``.
    """
    parts = tuple(parts)
    _require(s >= 1 and len(parts) >= 2, "need s >= 1 and at least two parts")
    n1, n2, rest = parts[0], parts[1], parts[2:]
    _require(n2 >= n1 >= 2, "need n2 >= n1 >= 2")
    _require(all(p >= 1 for p in rest), "part sizes must be positive")
    _require(s + sum(parts) <= CHECK_MAX_TOTAL, f"total vertex count above {CHECK_MAX_TOTAL}")
    base = generate(SplitJoin(s, parts))
    cases = []
    for shift in (1, 2):
        if n1 - shift < 1:
            break
        moved = generate(SplitJoin(s, (n1 - shift, n2 + shift) + rest))
        params = {"s": s, "parts": list(parts), "shift": shift}
        cases.append(_margin_case(params, margin(base, moved), tol))
    return LemmaReport("3.1", cases, tol)


def check_odd_clique_collapse(s: int, t: int, k: int, tol: float = MARGIN_TOL) -> LemmaReport:
    """``K_s v (edgeless k-1 u K_{2t+1})`` loses to ``K_{s+t} v edgeless(k+t)``.

    Also records the bound ``rho > s + 2t`` from the clique ``K_{s+2t+1}`` inside.
    """
    _require(s >= 1 and t >= 1 and k >= 3, "need s >= 1, t >= 1, k >= 3")
    _require(s + k + 2 * t <= CHECK_MAX_TOTAL, f"total vertex count above {CHECK_MAX_TOTAL}")
    g = generate(CollapsedSplit(s, t, k))
    g2 = generate(SplitJoin(s + t, (1,) * (k + t)))
    if g.n != g2.n:
        raise AssertionError("collapse changed the vertex count")
    r = radii(g)
    cases = [
        _margin_case({"s": s, "t": t, "k": k, "claim": "collapse"}, margin(g, g2), tol),
        _margin_case({"s": s, "t": t, "k": k, "claim": "bound"}, min(r) - (s + 2 * t), tol),
    ]
    return LemmaReport("3.2", cases, tol)


def bipartite_rewire_graphs(a: int, b: int, c: int, d: int) -> tuple[Graph, Graph, Graph]:
    """``G*``, ``G'`` and ``G''`` on X1 = [0, a), X2, Y1, Y2 laid out consecutively."""
    x1 = range(0, a)
    x2 = range(a, a + b)
    y1 = range(a + b, a + b + c)
    y2 = range(a + b + c, a + b + c + d)
    n = a + b + c + d
    star = [(x, y) for x in x1 for y in (*y1, *y2)] + [(x, y) for x in x2 for y in y1]
    keep_x1 = [(x, y) for x in x1 for y in (*y1, *y2)]
    prime = keep_x1 + [(u, w) for u in x2 for w in x1]
    keep_y1 = [(x, y) for x in (*x1, *x2) for y in y1]
    double_prime = keep_y1 + [(u, w) for u in y2 for w in y1]
    return from_edge_list(n, star), from_edge_list(n, prime), from_edge_list(n, double_prime)


def check_bipartite_rewire(a: int, b: int, c: int, d: int, tol: float = MARGIN_TOL) -> LemmaReport:
    """One of the two rewirings of ``G*`` raises the radius; both are complete bipartite."""
    _require(min(a, b, c, d) >= 1, "all four part sizes must be positive")
    _require(a + b + c + d <= CHECK_MAX_TOTAL, f"total vertex count above {CHECK_MAX_TOTAL}")
    star, prime, double_prime = bipartite_rewire_graphs(a, b, c, d)
    n = a + b + c + d
    shape_prime = canonical_code(prime) == canonical_code(generate(CompleteBipartite(a, n - a)))
    shape_double = canonical_code(double_prime) == canonical_code(generate(CompleteBipartite(c, n - c)))
    m1, m2 = margin(star, prime), margin(star, double_prime)
    value = max(m1, m2)
    branches = [name for name, m in (("G'", m1), ("G''", m2)) if m > tol]
    case = CaseResult(
        {"a": a, "b": b, "c": c, "d": d},
        value,
        value > tol and shape_prime and shape_double,
        {"margin_prime": m1, "margin_double_prime": m2, "branches": branches,
         "prime_complete_bipartite": shape_prime, "double_prime_complete_bipartite": shape_double},
    )
    return LemmaReport("4.4", [case], tol)


def check_cut_edge_contraction(graph: Graph, edge: tuple[int, int], tol: float = MARGIN_TOL) -> LemmaReport:
    """Contracting a cut edge and re-attaching it as a pendant raises the radius."""
    u, v = edge
    _require(is_connected(graph), "graph must be connected")
    _require(graph.has_edge(u, v) and is_bridge(graph, u, v), f"({u}, {v}) is not a cut edge")
    _require(graph.degree(u) >= 2 and graph.degree(v) >= 2, "both endpoints need degree >= 2")
    contracted = contract_cut_edge_with_pendant(graph, (u, v))
    params = {"graph": encode_graph6(graph), "edge": [u, v]}
    bridges_kept = len(cut_edges(contracted)) == len(cut_edges(graph))
    case = _margin_case(params, margin(graph, contracted), tol, bridges_preserved=bridges_kept)
    case.passed = case.passed and bridges_kept
    return LemmaReport("5.1", [case], tol)


def check_pendant_merge(t: int, pendants: list[int] | tuple[int, ...], tol: float = MARGIN_TOL) -> LemmaReport:
    """Gathering all pendant edges at one clique vertex raises the radius, step by step."""
    pendants = tuple(pendants)
    _require(len(pendants) >= 2, "need at least two pendant groups")
    _require(len(pendants) <= t, "more pendant groups than clique vertices")
    _require(all(r >= 1 for r in pendants), "pendant counts must be positive")
    _require(t + sum(pendants) <= CHECK_MAX_TOTAL, f"total vertex count above {CHECK_MAX_TOTAL}")
    start = generate(PendantClique(t, pendants))
    end = generate(PendantClique(t, (sum(pendants),)))
    cases = [_margin_case({"t": t, "pendants": list(pendants), "step": "total"}, margin(start, end), tol)]
    current = pendants
    step = 1
    while len(current) > 1:
        merged = (current[0] + current[1],) + current[2:]
        m = margin(generate(PendantClique(t, current)), generate(PendantClique(t, merged)))
        cases.append(_margin_case({"t": t, "pendants": list(pendants), "step": step}, m, tol))
        current = merged
        step += 1
    return LemmaReport("5.2", cases, tol)


def bipartite_chain_key(n: int, k: int) -> int:
    """The integer under the square root of the closed form for ``K_{k,n-k}``."""
    return n * n + 12 * k * (n - k)


def check_bipartite_chain(n: int, tol: float = MARGIN_TOL) -> LemmaReport:
    """``rho(K_{k,n-k})`` increases strictly in ``k`` up to ``n // 2``.

    Strictness is decided on the exact integers under the square root; the
    reported margin is the rationalized float difference. For ``n <= 12`` each
    closed form is also compared with power iteration.
    """
    _require(n >= 4, "need n >= 4")
    cases = []
    for k in range(1, n // 2):
        lo, hi = bipartite_chain_key(n, k), bipartite_chain_key(n, k + 1)
        value = (hi - lo) / (4 * (math.sqrt(lo) + math.sqrt(hi)))
        detail: dict[str, Any] = {"exact_increase": hi > lo}
        passed = hi > lo and value > tol
        if n <= 12:
            dev = max(
                abs(spectral_radius(harary_of(generate(CompleteBipartite(j, n - j)))).radius
                    - rho_closed_form(CompleteBipartite(j, n - j)))
                for j in (k, k + 1)
            )
            detail["iterative_deviation"] = dev
            passed = passed and dev <= CLOSED_FORM_TOL
        cases.append(CaseResult({"n": n, "k": k}, value, passed, detail))
    return LemmaReport("4.2", cases, tol)


# ---------------------------------------------------------------------------
# parameter grids, used by the CLI and the acceptance suite


def _nondecreasing(total: int, min_part: int = 1, max_len: int | None = None):
    """All nondecreasing tuples of parts >= min_part with sum <= total."""
    yield ()
    if max_len == 0:
        return
    for first in range(min_part, total + 1):
        for tail in _nondecreasing(total - first, first, None if max_len is None else max_len - 1):
            yield (first,) + tail


def _grid_clique_shift(max_total: int) -> list[dict[str, Any]]:
    out = []
    for s in range(1, max_total):
        for n1 in range(2, max_total):
            for n2 in range(n1, max_total):
                room = max_total - s - n1 - n2
                if room < 0:
                    break
                for rest in _nondecreasing(room):
                    out.append({"s": s, "parts": [n1, n2, *rest]})
    return out


def _grid_odd_collapse(max_total: int) -> list[dict[str, Any]]:
    return [
        {"s": s, "t": t, "k": k}
        for s in range(1, max_total)
        for t in range(1, max_total)
        for k in range(3, max_total)
        if s + k + 2 * t <= max_total
    ]


def _grid_rewire(max_total: int) -> list[dict[str, Any]]:
    return [
        {"a": a, "b": b, "c": c, "d": d}
        for a in range(1, max_total)
        for b in range(1, max_total)
        for c in range(1, max_total)
        for d in range(1, max_total)
        if a + b + c + d <= max_total
    ]


def _grid_pendant_merge(max_total: int) -> list[dict[str, Any]]:
    out = []
    for t in range(2, max_total):
        for pend in _nondecreasing(max_total - t, 1, t):
            if len(pend) >= 2:
                # largest group first, the merge order then follows the listed order
                out.append({"t": t, "pendants": list(reversed(pend))})
    return out


def _grid_cut_contraction(max_total: int) -> list[dict[str, Any]]:
    out = []
    for n in range(4, min(max_total, 7) + 1):
        for g in enumerate_connected(n):
            for u, v in cut_edges(g):
                if g.degree(u) >= 2 and g.degree(v) >= 2:
                    out.append({"graph": encode_graph6(g), "edge": [u, v]})
    # two cliques joined by one edge
    for a in range(2, max_total):
        for b in range(a, max_total - a + 1):
            edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
            edges += [(a + i, a + j) for i in range(b) for j in range(i + 1, b)]
            edges.append((a - 1, a))
            out.append({"graph": encode_graph6(from_edge_list(a + b, edges)), "edge": [a - 1, a]})
    return out


def _grid_edge_addition(max_total: int, samples: int = 500, seed: int = 20240611) -> list[dict[str, Any]]:
    rng = random.Random(seed)
    hi = max(3, min(max_total, 10))
    out = []
    while len(out) < samples:
        n = rng.randint(3, hi)
        order = list(range(n))
        rng.shuffle(order)
        edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
        density = rng.random()
        for u, v in combinations(range(n), 2):
            if rng.random() < density * 0.5:
                edges.add((u, v))
        g = from_edge_list(n, edges)
        missing = g.non_edges()
        if not missing:
            continue
        u, v = rng.choice(missing)
        out.append({"graph": encode_graph6(g), "edge": [u, v]})
    return out


def _grid_symmetry(max_total: int) -> list[dict[str, Any]]:
    return [
        {"graph": encode_graph6(g)}
        for n in range(2, min(max_total, 6) + 1)
        for g in enumerate_connected(n)
        if twin_pairs(g)
    ]


def _grid_chain(max_total: int) -> list[dict[str, Any]]:
    return [{"n": n} for n in range(4, max_total + 1)]


@dataclass(frozen=True)
class LemmaSpec:
    lemma: str
    title: str
    check: Callable[..., LemmaReport]
    grid: Callable[[int], list[dict[str, Any]]]
    args: tuple[str, ...]
    default_max_total: int = 12


def _graph_arg(fn: Callable[..., LemmaReport]) -> Callable[..., LemmaReport]:
    def call(graph: str | Graph, edge=None, tol: float = MARGIN_TOL) -> LemmaReport:
        g = decode_graph6(graph) if isinstance(graph, str) else graph
        if edge is None:
            return fn(g, tol=tol)
        return fn(g, tuple(edge), tol=tol)

    return call


LEMMAS: dict[str, LemmaSpec] = {
    spec.lemma: spec
    for spec in (
        LemmaSpec("2.2", "edge addition raises the radius", _graph_arg(check_edge_addition),
                  _grid_edge_addition, ("graph", "edge"), 10),
        LemmaSpec("2.4", "twin vertices have equal Perron entries", _graph_arg(check_eigenvector_symmetry),
                  _grid_symmetry, ("graph",), 6),
        LemmaSpec("3.1", "clique shift", check_clique_shift, _grid_clique_shift, ("s", "parts")),
        LemmaSpec("3.2", "odd clique collapse", check_odd_clique_collapse, _grid_odd_collapse, ("s", "t", "k")),
        LemmaSpec("4.2", "complete bipartite chain", check_bipartite_chain, _grid_chain, ("n",), 30),
        LemmaSpec("4.4", "bipartite rewiring", check_bipartite_rewire, _grid_rewire, ("a", "b", "c", "d")),
        LemmaSpec("5.1", "cut edge contraction", _graph_arg(check_cut_edge_contraction),
                  _grid_cut_contraction, ("graph", "edge")),
        LemmaSpec("5.2", "pendant merge", check_pendant_merge, _grid_pendant_merge, ("t", "pendants")),
    )
}


def _run_one(item: tuple[str, dict[str, Any], float]) -> LemmaReport:
    lemma, args, tol = item
    return LEMMAS[lemma].check(**args, tol=tol)


def run_lemma(lemma: str, max_total: int | None = None, tol: float | None = None, jobs: int = 1) -> LemmaReport:
    """Run a lemma check over its whole parameter grid."""
    spec = LEMMAS.get(lemma)
    if spec is None:
        raise KeyError(f"unknown lemma id {lemma!r}; expected one of {sorted(LEMMAS)}")
    if max_total is None:
        max_total = spec.default_max_total
    if tol is None:
        tol = SYMMETRY_TOL if lemma == "2.4" else MARGIN_TOL
    items = [(lemma, args, tol) for args in spec.grid(max_total)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_one, items, chunksize=16))
    else:
        parts = [_run_one(item) for item in items]
    kind = "deviation" if lemma == "2.4" else "margin"
    report = LemmaReport(lemma, [], tol, kind)
    for part in parts:
        report.extend(part)
    return report


def rerun_case(lemma: str, params: dict[str, Any], tol: float | None = None) -> CaseResult:
    """Recompute a single reported case from its parameters."""
    spec = LEMMAS[lemma]
    if tol is None:
        tol = SYMMETRY_TOL if lemma == "2.4" else MARGIN_TOL
    args = {k: params[k] for k in spec.args}
    for case in spec.check(**args, tol=tol).cases:
        if case.params == params:
            return case
    raise KeyError(f"no case with parameters {params} in lemma {lemma}")
