"""Exact rainbow / strong-rainbow verification by color-subset search.

States are ``(vertex, set of colors used so far)``; a move along an edge is
allowed only if its color is unused.  Strong verification restricts moves to
the shortest-path DAG of the source, so it can sweep all targets at once.
"""

from __future__ import annotations

import os
import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .cayley import UNREACHABLE, LabeledGraph, bfs_distances
from .coloring import EdgeColoring

MAX_COLORS = 24
THREADS_ENV = "RAINBOW_THREADS"


class ColorCapExceeded(ValueError):
    pass


@dataclass
class VerifyReport:
    ok: bool
    failing_pair: Optional[Tuple[int, int]] = None
    states_explored: int = 0
    pairs_checked: int = 0

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "states_explored": self.states_explored,
        }


def _check_cap(coloring: EdgeColoring) -> None:
    if coloring.num_colors > MAX_COLORS:
        raise ColorCapExceeded(
            f"{coloring.num_colors} colors exceeds the verifier cap of {MAX_COLORS}"
        )


def _neighbors(G: LabeledGraph, coloring: EdgeColoring):
    bits = [1 << c for c in coloring.colors]
    return [tuple((w, bits[k]) for w, k in nbrs) for nbrs in G.adjacency]


def rainbow_path_exists(G: LabeledGraph, coloring: EdgeColoring, u: int, v: int) -> bool:
    _check_cap(coloring)
    if u == v:
        return True
    adj = _neighbors(G, coloring)
    seen = {(u, 0)}
    queue = deque([(u, 0)])
    while queue:
        x, used = queue.popleft()
        for w, bit in adj[x]:
            if used & bit:
                continue
            if w == v:
                return True
            state = (w, used | bit)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return False


def _geodesic_masks(adj, dist: List[int], source: int) -> Tuple[List[set], int]:
    """For every vertex, the color sets of rainbow geodesics from ``source``."""
    order = sorted(range(len(dist)), key=lambda x: dist[x] if dist[x] != UNREACHABLE else 1 << 30)
    masks: List[set] = [set() for _ in dist]
    masks[source].add(0)
    states = 1
    for x in order:
        here = masks[x]
        if not here or dist[x] == UNREACHABLE:
            continue
        nxt = dist[x] + 1
        for w, bit in adj[x]:
            if dist[w] != nxt:
                continue
            target = masks[w]
            before = len(target)
            for used in here:
                if not used & bit:
                    target.add(used | bit)
            states += len(target) - before
    return masks, states


def _general_search(adj, source: int, targets: set) -> Tuple[set, int]:
    """Targets reachable from ``source`` by some rainbow path (full state search)."""
    seen = {(source, 0)}
    queue = deque([(source, 0)])
    found = set()
    while queue and found != targets:
        x, used = queue.popleft()
        for w, bit in adj[x]:
            if used & bit:
                continue
            if w in targets:
                found.add(w)
            state = (w, used | bit)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return found, len(seen)


def _check_source(args) -> Tuple[Optional[int], int]:
    G, coloring, source, strong = args
    adj = _neighbors(G, coloring)
    dist = bfs_distances(G, source)
    if UNREACHABLE in dist:
        return dist.index(UNREACHABLE), 0
    masks, states = _geodesic_masks(adj, dist, source)
    missing = {t for t in range(G.n) if t != source and not masks[t]}
    if not missing:
        return None, states
    if strong:
        return min(missing), states
    # Rainbow geodesics settle most targets; the rest need the full search.
    found, extra = _general_search(adj, source, missing)
    left = missing - found
    return (min(left) if left else None), states + extra


def _sources(G: LabeledGraph, vertex_transitive: bool, seed: int) -> List[int]:
    if not vertex_transitive or G.n <= 2:
        return list(range(G.n))
    other = random.Random(seed).randrange(1, G.n)
    return [0, other]


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _run(G, coloring, strong: bool, vertex_transitive: bool, seed: int) -> VerifyReport:
    _check_cap(coloring)
    sources = _sources(G, vertex_transitive, seed)
    jobs = [(G, coloring, s, strong) for s in sources]
    threads = _threads()
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results: Iterable = list(pool.map(_check_source, jobs, chunksize=8))
    else:
        results = map(_check_source, jobs)
    report = VerifyReport(ok=True)
    for s, (bad, states) in zip(sources, results):
        report.states_explored += states
        report.pairs_checked += G.n - 1
        if bad is not None:
            report.ok = False
            report.failing_pair = (min(s, bad), max(s, bad))
            break
    return report


def is_rainbow_connected(
    G: LabeledGraph, coloring: EdgeColoring, vertex_transitive: bool = False, seed: int = 0
) -> VerifyReport:
    """Every pair joined by some rainbow path.

    ``vertex_transitive=True`` checks source 0 plus one seeded random source
    instead of all sources; only meaningful when the coloring itself is
    symmetric.
    """
    return _run(G, coloring, False, vertex_transitive, seed)


def is_strong_rainbow_connected(
    G: LabeledGraph, coloring: EdgeColoring, vertex_transitive: bool = False, seed: int = 0
) -> VerifyReport:
    """Every pair joined by a rainbow geodesic."""
    return _run(G, coloring, True, vertex_transitive, seed)


def verify(
    coloring: EdgeColoring, mode: str = "rainbow", vertex_transitive: bool = False, seed: int = 0
) -> VerifyReport:
    if mode not in ("rainbow", "strong"):
        raise ValueError(f"mode must be 'rainbow' or 'strong', got {mode!r}")
    check = is_strong_rainbow_connected if mode == "strong" else is_rainbow_connected
    return check(coloring.graph, coloring, vertex_transitive, seed)
