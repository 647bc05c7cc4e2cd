"""Edge colorings and the half-cycle construction for Abelian Cayley graphs.

Each generator ``a`` of order ``b`` splits the vertex set into ``n/b`` coset
cycles.  Around every such cycle, edge ``j`` and edge ``j + b/2`` share a
color (``b`` even); for odd ``b`` the two halves of length ``(b-1)/2`` repeat
and the middle edge gets one extra color.  So generator ``a`` costs
``ceil(b/2)`` colors and every window of ``floor(b/2)`` consecutive cycle
edges is rainbow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .abelian_group import (
    GeneratorSet,
    GroupElement,
    GroupError,
    generates,
    minimal_generating_subsets,
    order,
)
from .cayley import LabeledGraph

ColorPair = Tuple[int, int]


@dataclass(frozen=True)
class EdgeColoring:
    """Total edge -> color map aligned with ``graph.edges``.

    ``colors[k]`` is the flat color id of edge ``k``; ``legend[c]`` is the
    ``(generator, slot)`` pair that id ``c`` stands for.
    """

    graph: LabeledGraph
    colors: Tuple[int, ...]
    legend: Tuple[ColorPair, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.num_edges:
            raise ValueError(
                f"coloring has {len(self.colors)} entries for {self.graph.num_edges} edges"
            )
        used = set(self.colors)
        if used != set(range(len(self.legend))):
            raise ValueError("legend must list exactly the colors in use")

    @classmethod
    def from_pairs(cls, graph: LabeledGraph, pairs: Sequence[ColorPair]) -> "EdgeColoring":
        """Flatten per-edge ``(i, j)`` pairs; ids follow the sorted legend."""
        legend = tuple(sorted(set(pairs)))
        flat = {p: c for c, p in enumerate(legend)}
        return cls(graph, tuple(flat[p] for p in pairs), legend)

    @classmethod
    def from_ids(cls, graph: LabeledGraph, ids: Sequence[int]) -> "EdgeColoring":
        """Coloring from bare ids, relabeled by first appearance."""
        relabel: Dict[int, int] = {}
        out = [relabel.setdefault(c, len(relabel)) for c in ids]
        return cls(graph, tuple(out), tuple((0, c + 1) for c in range(len(relabel))))

    @property
    def num_colors(self) -> int:
        return len(self.legend)

    def pair_of(self, edge: int) -> ColorPair:
        return self.legend[self.colors[edge]]

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph.to_json_obj(),
            "num_colors": self.num_colors,
            "legend": [list(p) for p in self.legend],
            "edges": [[u, v, c] for (u, v, _), c in zip(self.graph.edges, self.colors)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":")) + "\n"

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EdgeColoring":
        graph = LabeledGraph.from_json_obj(obj["graph"])
        by_pair = {(int(u), int(v)): int(c) for u, v, c in obj["edges"]}
        if len(by_pair) != graph.num_edges:
            raise ValueError("certificate edge list does not match its graph")
        try:
            colors = tuple(by_pair[(u, v)] for u, v, _ in graph.edges)
        except KeyError as exc:
            raise ValueError(f"certificate misses edge {exc.args[0]}") from None
        coloring = cls(graph, colors, tuple((int(i), int(j)) for i, j in obj["legend"]))
        if int(obj["num_colors"]) != coloring.num_colors:
            raise ValueError("num_colors disagrees with the legend")
        return coloring

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        return cls.from_json_obj(json.loads(text))


def half_cycle_slot(position: int, length: int) -> int:
    """1-based color slot of edge ``position`` on a cycle of ``length`` edges."""
    if length % 2 == 0:
        return position % (length // 2) + 1
    half = (length - 1) // 2
    if position < half:
        return position + 1
    if position == half:
        return half + 1
    return position - half


@dataclass(frozen=True)
class CycleClass:
    """Coset cycles of one generator: ordered vertex lists, first vertex repeated implicitly."""

    generator: int
    step: GroupElement
    cycles: Tuple[Tuple[int, ...], ...]


def decompose_cycles(G: LabeledGraph, label: int) -> CycleClass:
    """Cosets of ``<a_label>`` traversed by repeatedly adding ``a_label``.

    Each coset starts at the smallest vertex id not yet covered, beginning
    with the identity.  For an order-2 generator the "cycles" are the
    matching edges as 2-vertex lists.
    """
    if not G.is_cayley:
        raise ValueError("cycle decomposition needs a Cayley graph")
    group = G.group
    a = G.generators[label]
    covered = [False] * G.n
    cycles = []
    for start in range(G.n):
        if covered[start]:
            continue
        x = group.element_at(start)
        cyc = []
        while not covered[x.index]:
            covered[x.index] = True
            cyc.append(x.index)
            x = x + a
        cycles.append(tuple(cyc))
    return CycleClass(label, a, tuple(cycles))


def cycle_edges(G: LabeledGraph, cycle: Sequence[int]) -> List[int]:
    """Edge ids along a cycle, position ``j`` joining ``cycle[j]`` and ``cycle[j+1]``."""
    L = len(cycle)
    if L == 2:
        return [G.edge_id(cycle[0], cycle[1])]
    return [G.edge_id(cycle[j], cycle[(j + 1) % L]) for j in range(L)]


def color_cayley(G: LabeledGraph, S_star: Optional[GeneratorSet] = None) -> EdgeColoring:
    """Half-cycle coloring of a Cayley graph built over ``S* ∪ (S*)^{-1}``.

    ``S_star`` defaults to the graph's own generator representatives; when
    given it must match them.  Uses exactly ``sum ceil(|a|/2)`` colors.
    """
    if not G.is_cayley:
        raise ValueError("half-cycle coloring needs a Cayley graph")
    if S_star is not None:
        reps = S_star.representatives()
        if tuple(reps) != tuple(G.generators):
            raise ValueError("graph was not built over the given generating set")
    if not generates(GeneratorSet(G.group, G.generators)):
        raise GroupError("generators do not generate the group")
    pairs: List[Optional[ColorPair]] = [None] * G.num_edges
    for label, a in enumerate(G.generators):
        b = order(a)
        if b == 2:
            for k in G.label_classes()[label]:
                pairs[k] = (label, 1)
            continue
        for cyc in decompose_cycles(G, label).cycles:
            for pos, k in enumerate(cycle_edges(G, cyc)):
                pairs[k] = (label, half_cycle_slot(pos, b))
    return EdgeColoring.from_pairs(G, pairs)


def color_count_upper_bound(S: GeneratorSet) -> Tuple[int, Optional[GeneratorSet]]:
    """Smallest ``sum ceil(|a|/2)`` over minimal generating subsets of ``S``.

    Returns ``(0, None)`` when ``S`` does not generate (disconnected graph).
    """
    subsets = minimal_generating_subsets(S)
    if not subsets:
        return 0, None
    best = min(subsets, key=lambda m: m.score)
    return best.score, best.generators


def extend_to_supergraph(coloring: EdgeColoring, G_full: LabeledGraph) -> EdgeColoring:
    """Carry a coloring of a spanning subgraph over to ``G_full``.

    Extra edges reuse color id 0, so no color is added; every rainbow path
    of the subgraph is still present.
    """
    sub = coloring.graph
    if sub.n != G_full.n:
        raise ValueError("graphs must share the vertex set")
    colors = []
    sub_index = sub.edge_index
    for u, v, _ in G_full.edges:
        k = sub_index.get((u, v))
        colors.append(0 if k is None else coloring.colors[k])
    if len(sub_index) != sum(1 for u, v, _ in G_full.edges if (u, v) in sub_index):
        raise ValueError("subgraph has edges outside the full graph")
    return EdgeColoring(G_full, tuple(colors), coloring.legend)
