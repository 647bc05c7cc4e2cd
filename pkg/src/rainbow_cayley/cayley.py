"""Labeled undirected graphs, Cayley graph construction, distances."""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .abelian_group import (
    GeneratorSet,
    GroupElement,
    GroupError,
    GroupSpec,
    floor_half_score,
    is_minimal_generating,
    order,
)

UNREACHABLE = -1

Edge = Tuple[int, int, int]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph whose edges carry an integer label.

    ``edges`` holds ``(u, v, label)`` with ``u < v``.  For Cayley graphs the
    label is the index of the generator pair that induced the edge, and
    ``group``/``generators`` record where the graph came from.
    """

    n: int
    edges: Tuple[Edge, ...]
    group: Optional[GroupSpec] = None
    generators: Optional[Tuple[GroupElement, ...]] = None

    def __post_init__(self):
        seen = set()
        for u, v, _ in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge ({u}, {v}) for a graph on {self.n} vertices")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, n: int, pairs: Sequence[Tuple[int, int]]) -> "LabeledGraph":
        """Plain graph with every edge labeled 0."""
        return cls(n, tuple((min(u, v), max(u, v), 0) for u, v in pairs))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> Dict[Tuple[int, int], int]:
        return {(u, v): k for k, (u, v, _) in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    @cached_property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """Per vertex, a tuple of ``(neighbor, edge id)`` in edge order."""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for k, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, k))
            adj[v].append((u, k))
        return tuple(tuple(a) for a in adj)

    def label_classes(self) -> Dict[int, List[int]]:
        classes: Dict[int, List[int]] = {}
        for k, (_, _, lab) in enumerate(self.edges):
            classes.setdefault(lab, []).append(k)
        return classes

    @property
    def is_cayley(self) -> bool:
        return self.group is not None

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [[u, v, lab] for u, v, lab in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LabeledGraph":
        return cls(int(obj["n"]), tuple((int(u), int(v), int(lab)) for u, v, lab in obj["edges"]))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def to_dot(self, colors: Optional[Sequence[int]] = None) -> str:
        lines = ["graph G {"]
        for k, (u, v, lab) in enumerate(self.edges):
            attrs = f"label={lab}"
            if colors is not None:
                attrs += f", color_id={colors[k]}"
            lines.append(f"  {u} -- {v} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_cayley(group: GroupSpec, S: GeneratorSet) -> LabeledGraph:
    """Cayley graph of ``group`` w.r.t. the inverse-closed set ``S``.

    Vertex ids are mixed-radix ranks of the residue vectors; edge labels
    number the {a, -a} pairs of ``S`` in first-appearance order.
    """
    if S.group != group:
        raise GroupError("generator set belongs to a different group")
    if not S.inverse_closed:
        raise GroupError("Cayley graph needs an inverse-closed generator set")
    reps = S.representatives()
    edges = []
    for lab, a in enumerate(reps):
        for u_el in group.elements():
            u = u_el.index
            v = (u_el + a).index
            if order(a) == 2 and v < u:
                continue  # a == -a: each edge is met from both ends
            edges.append((min(u, v), max(u, v), lab))
    edges.sort()
    return LabeledGraph(group.order, tuple(edges), group, reps)


def bfs_distances(G: LabeledGraph, source: int) -> List[int]:
    dist = [UNREACHABLE] * G.n
    dist[source] = 0
    queue = deque([source])
    adj = G.adjacency
    while queue:
        u = queue.popleft()
        for w, _ in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_distances(G: LabeledGraph) -> List[List[int]]:
    return [bfs_distances(G, s) for s in range(G.n)]


def diameter(G: LabeledGraph) -> int:
    """Largest BFS distance.

    Cayley graphs are vertex-transitive, so one source suffices there;
    other graphs are scanned from every vertex.
    """
    sources = [0] if G.is_cayley else range(G.n)
    best = 0
    for s in sources:
        dist = bfs_distances(G, s)
        if UNREACHABLE in dist:
            raise GraphError("diameter of a disconnected graph is undefined")
        best = max(best, max(dist))
    return best


def is_connected(G: LabeledGraph) -> bool:
    return G.n > 0 and UNREACHABLE not in bfs_distances(G, 0)


def distance_profile_matches(G: LabeledGraph, seed: int = 0) -> bool:
    """Compare the sorted distance list from vertex 0 with that of a random vertex."""
    other = random.Random(seed).randrange(G.n)
    return sorted(bfs_distances(G, 0)) == sorted(bfs_distances(G, other))


def theoretical_diameter(S_star: GeneratorSet) -> int:
    """Sum of ``floor(|a|/2)`` over a minimal generating set.

    This is the diameter of the Cayley graph when the group is the direct
    product of the cyclic subgroups the generators span.
    """
    reps = S_star.representatives()
    if not is_minimal_generating(S_star.group, reps):
        raise GroupError("generator set is not a minimal generating set")
    return floor_half_score(reps)

