"""Exact rc / src of tiny graphs by exhaustive coloring search.

Colorings are enumerated as restricted-growth strings over the edge list
(edge ``t`` may only use colors ``0..max_so_far+1``), which visits each
partition of the edges into color classes once.  For each vertex pair we
keep the list of candidate paths (all geodesics for ``src``; all simple
paths of at most ``k`` edges for ``rc``) and prune as soon as every
candidate of some pair has two equal colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .abelian_group import GeneratorSet, floor_half_score, is_independent, is_minimal_generating
from .cayley import LabeledGraph, all_distances, diameter, is_connected
from .circulant import CirculantSpec, diameter_formula, expected_color_count
from .coloring import EdgeColoring, color_count_upper_bound
from .verify import is_rainbow_connected, is_strong_rainbow_connected

DEFAULT_MAX_EDGES = 16
DEFAULT_MAX_COLORS = 4
DEFAULT_MAX_STATES = 10 ** 8


class SearchBudgetExceeded(Exception):
    pass


@dataclass
class OracleResult:
    mode: str
    status: str  # "exact" or "cap_exceeded"
    lower: int
    upper: int
    value: Optional[int] = None
    witness: Optional[EdgeColoring] = None
    states: int = 0
    reason: str = ""

    @property
    def exact(self) -> bool:
        return self.status == "exact"


def _geodesics(G: LabeledGraph, dist: List[List[int]], u: int, v: int) -> List[Tuple[int, ...]]:
    out = []
    adj = G.adjacency

    def walk(x, edges):
        if x == v:
            out.append(tuple(edges))
            return
        for w, k in adj[x]:
            if dist[w][v] == dist[x][v] - 1:
                edges.append(k)
                walk(w, edges)
                edges.pop()

    walk(u, [])
    return out


def _short_paths(G: LabeledGraph, dist: List[List[int]], u: int, v: int, k: int):
    out = []
    adj = G.adjacency
    on_path = {u}

    def walk(x, edges):
        if x == v:
            out.append(tuple(edges))
            return
        if len(edges) + dist[x][v] > k:
            return
        for w, e in adj[x]:
            if w in on_path:
                continue
            on_path.add(w)
            edges.append(e)
            walk(w, edges)
            edges.pop()
            on_path.discard(w)

    walk(u, [])
    return out


def _edge_order(G: LabeledGraph) -> List[int]:
    """Edges in BFS discovery order from vertex 0, so pairs close early."""
    order, seen = [], set()
    frontier, visited = [0], {0}
    while frontier:
        nxt = []
        for x in frontier:
            for w, e in G.adjacency[x]:
                if e not in seen:
                    seen.add(e)
                    order.append(e)
                if w not in visited:
                    visited.add(w)
                    nxt.append(w)
        frontier = nxt
    order.extend(e for e in range(G.num_edges) if e not in seen)
    return order


class _Search:
    def __init__(self, G: LabeledGraph, paths_by_pair: Sequence[Sequence[Tuple[int, ...]]],
                 k: int, budget: int):
        self.G = G
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.order = _edge_order(G)
        self.paths: List[Tuple[int, ...]] = []
        self.path_pair: List[int] = []
        self.alive: List[int] = []
        for pair_id, paths in enumerate(paths_by_pair):
            self.alive.append(len(paths))
            for p in paths:
                self.paths.append(p)
                self.path_pair.append(pair_id)
        self.by_edge: List[List[int]] = [[] for _ in range(G.num_edges)]
        for pid, p in enumerate(self.paths):
            for e in p:
                self.by_edge[e].append(pid)
        self.mask = [0] * len(self.paths)
        self.dead = [False] * len(self.paths)
        self.colors = [-1] * G.num_edges

    def run(self) -> Optional[List[int]]:
        if any(a == 0 for a in self.alive):
            return None
        if self._extend(0, -1):
            return list(self.colors)
        return None

    def _assign(self, e: int, c: int) -> Tuple[bool, List[Tuple[int, int]]]:
        bit = 1 << c
        touched = []  # (path id, previous mask) or (path id, -1) for newly dead
        ok = True
        for pid in self.by_edge[e]:
            if self.dead[pid]:
                continue
            if self.mask[pid] & bit:
                self.dead[pid] = True
                touched.append((pid, -1))
                pair = self.path_pair[pid]
                self.alive[pair] -= 1
                if self.alive[pair] == 0:
                    ok = False
            else:
                touched.append((pid, self.mask[pid]))
                self.mask[pid] |= bit
        return ok, touched

    def _undo(self, touched) -> None:
        for pid, prev in reversed(touched):
            if prev == -1:
                self.dead[pid] = False
                self.alive[self.path_pair[pid]] += 1
            else:
                self.mask[pid] = prev

    def _extend(self, t: int, top: int) -> bool:
        if t == len(self.order):
            return True
        e = self.order[t]
        for c in range(min(top + 1, self.k - 1) + 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded
            ok, touched = self._assign(e, c)
            self.colors[e] = c
            if ok and self._extend(t + 1, max(top, c)):
                return True
            self._undo(touched)
            self.colors[e] = -1
        return False


def exact_rc(
    G: LabeledGraph,
    mode: str = "rc",
    max_edges: int = DEFAULT_MAX_EDGES,
    max_colors: int = DEFAULT_MAX_COLORS,
    max_states: int = DEFAULT_MAX_STATES,
    upper: Optional[int] = None,
) -> OracleResult:
    """Smallest ``k`` admitting a rainbow (``rc``) or strong rainbow (``src``) coloring.

    Starts at the diameter and raises ``k`` until a coloring is found.  When a
    cap is hit, returns the proven interval ``[lower, upper]`` instead; ``upper``
    defaults to the edge count (all-distinct colors always work).
    """
    if mode not in ("rc", "src"):
        raise ValueError(f"mode must be 'rc' or 'src', got {mode!r}")
    if not is_connected(G):
        return OracleResult(mode, "exact", 0, 0, value=0, reason="disconnected")
    if G.n == 1:
        return OracleResult(mode, "exact", 0, 0, value=0)
    D = diameter(G)
    hi = G.num_edges if upper is None else min(upper, G.num_edges)
    if G.num_edges > max_edges:
        return OracleResult(mode, "cap_exceeded", D, hi,
                            reason=f"{G.num_edges} edges > cap {max_edges}")
    dist = all_distances(G)
    pairs = [(u, v) for u in range(G.n) for v in range(u + 1, G.n)]
    geodesics = [_geodesics(G, dist, u, v) for u, v in pairs] if mode == "src" else None
    states = 0
    k = max(D, 1)
    while True:
        if k > max_colors:
            return OracleResult(mode, "cap_exceeded", k, max(hi, k), states=states,
                                reason=f"needs more than the {max_colors}-color cap")
        if mode == "src":
            paths = geodesics
        else:
            paths = [_short_paths(G, dist, u, v, k) for u, v in pairs]
        search = _Search(G, paths, k, max_states - states)
        try:
            colors = search.run()
        except SearchBudgetExceeded:
            return OracleResult(mode, "cap_exceeded", k, max(hi, k), states=max_states,
                                reason=f"search budget of {max_states} nodes exhausted")
        states += search.nodes
        if colors is not None:
            witness = EdgeColoring.from_ids(G, colors)
            check = is_strong_rainbow_connected if mode == "src" else is_rainbow_connected
            report = check(G, witness)
            assert report.ok, f"search produced a coloring the verifier rejects: {report}"
            return OracleResult(mode, "exact", k, k, value=k, witness=witness, states=states)
        k += 1


@dataclass
class BoundsReport:
    diameter: int
    formula_lower: int
    lower: int
    upper: int
    exact: bool
    oracle: Optional[OracleResult] = None

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


def bounds_report(
    G: LabeledGraph,
    generators: Optional[GeneratorSet] = None,
    circulant: Optional[CirculantSpec] = None,
    use_oracle: bool = False,
    mode: str = "rc",
    **caps,
) -> BoundsReport:
    """Lower/upper bounds on rc (or src) and whether they meet.

    Lower bound is the diameter, raised by ``sum floor(|a|/2)`` when the
    generators are independent.  Upper bound is the constructive color count.
    ``use_oracle`` closes the gap by exact search when within caps.
    """
    if not is_connected(G):
        return BoundsReport(0, 0, 0, 0, True)
    D = diameter(G)
    formula_lower = D
    if circulant is not None:
        upper = expected_color_count(circulant)
        formula_lower = circulant.m // 2 if circulant.d == 2 else diameter_formula(circulant)
    elif generators is not None:
        upper, _ = color_count_upper_bound(generators)
        reps = generators.representatives()
        # The floor-half sum is only a valid bound for independent generators.
        if is_minimal_generating(generators.group, reps) and is_independent(generators.group, reps):
            formula_lower = floor_half_score(reps)
    else:
        upper = G.num_edges
    lower = max(D, formula_lower)
    report = BoundsReport(D, formula_lower, lower, upper, lower == upper)
    if use_oracle and not report.exact:
        res = exact_rc(G, mode, upper=upper, **caps)
        report.oracle = res
        report.lower = max(report.lower, res.lower)
        report.upper = min(report.upper, res.upper)
        report.exact = res.exact
        if res.exact:
            report.lower = report.upper = res.value
    return report
