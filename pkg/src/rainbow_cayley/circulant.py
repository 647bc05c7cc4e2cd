"""Recursive circulants G(r*d^m, d): construction, diameter, level colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .abelian_group import GeneratorSet, GroupSpec
from .cayley import LabeledGraph, build_cayley
from .coloring import EdgeColoring, ColorPair, cycle_edges, decompose_cycles, half_cycle_slot


class CirculantError(ValueError):
    pass


@dataclass(frozen=True)
class CirculantSpec:
    """The triple ``(r, d, m)`` with ``1 <= r < d``, ``d >= 2``, ``m >= 1``."""

    r: int
    d: int
    m: int

    def __post_init__(self):
        if self.d < 2:
            raise CirculantError(f"d must be >= 2, got {self.d}")
        if not 1 <= self.r < self.d:
            raise CirculantError(f"need 1 <= r < d, got r={self.r}, d={self.d}")
        if self.m < 1:
            raise CirculantError(f"m must be >= 1, got {self.m}")

    @classmethod
    def parse(cls, text: str) -> "CirculantSpec":
        parts = text.split(":")
        if len(parts) != 3:
            raise CirculantError(f"expected 'r:d:m', got {text!r}")
        try:
            r, d, m = (int(p) for p in parts)
        except ValueError as exc:
            raise CirculantError(f"expected 'r:d:m', got {text!r}") from exc
        return cls(r, d, m)

    @property
    def N(self) -> int:
        return self.r * self.d ** self.m

    @property
    def num_levels(self) -> int:
        return self.m + (1 if self.r >= 2 else 0)

    @property
    def levels(self) -> Tuple[int, ...]:
        """Jump lengths ``d^0, ..., d^{m-1}``, plus ``d^m`` when ``r >= 2``."""
        return tuple(self.d ** i for i in range(self.num_levels))

    def level_order(self, i: int) -> int:
        """Order of ``d^i`` in ``Z_N``, i.e. the length of a level-``i`` cycle."""
        return self.r * self.d ** (self.m - i)

    def __str__(self) -> str:
        return f"G({self.N},{self.d})"


def build_circulant(spec: CirculantSpec) -> LabeledGraph:
    """``Cay(Z_N, {±d^i})`` with edge label ``i`` on the ``±d^i`` edges."""
    group = GroupSpec((spec.N,))
    gens = []
    for jump in spec.levels:
        gens.append(group.element((jump,)))
        gens.append(group.element((-jump,)))
    return build_cayley(group, GeneratorSet(group, tuple(gens)))


def diameter_formula(spec: CirculantSpec) -> int:
    r, d, m = spec.r, spec.d, spec.m
    if d % 2 == 1:
        return (d // 2) * m + r // 2
    if r % 2 == 0:
        return ((d - 1) * m) // 2 + r // 2
    return -(-((d - 1) * m) // 2) + r // 2


def odd_remainder(spec: CirculantSpec) -> int:
    """Number of trailing edges per level cycle left over by the period ``floor(d/2)``."""
    half = spec.d // 2
    if spec.r == half:
        return 0
    if spec.r < half:
        return spec.r
    return spec.r - half


def expected_color_count(spec: CirculantSpec) -> int:
    """Color count promised for the level construction, case by case."""
    r, d, m = spec.r, spec.d, spec.m
    if d == 2:
        return -(-m // 2)
    if d == 3:
        return m + r // 2
    top = -(-r // 2) if r >= 4 else r // 2
    if d % 2 == 0:
        return (d // 2) * m + top
    half = d // 2
    if r == half:
        return half * m + top
    if r < half:
        return (half + r) * m + top
    return r * m + top


def _level_slot(spec: CirculantSpec, i: int, position: int) -> int:
    d = spec.d
    if d % 2 == 0:
        return position % (d // 2) + 1
    half = d // 2
    length = spec.level_order(i)
    extra = odd_remainder(spec)
    periodic, rest = divmod(length - extra, half)
    assert rest == 0, (spec, i, length, extra)
    if position < periodic * half:
        return position % half + 1
    return half + (position - periodic * half) + 1


def color_circulant(spec: CirculantSpec, G: Optional[LabeledGraph] = None) -> EdgeColoring:
    """Level-wise strong rainbow coloring of ``G(r*d^m, d)``.

    * ``d = 2``: levels ``2i`` and ``2i+1`` share color ``(i, 1)``.
    * ``d = 3``: one color ``(i, 1)`` per level.
    * ``d >= 4``: each level ``i < m`` is colored around its cycles with a
      pattern of period ``d/2`` (``d`` even), or period ``floor(d/2)``
      followed by fresh colors for the leftover edges (``d`` odd).  The top
      level uses the half-cycle pattern when ``r >= 4`` and a single color
      when it is a matching or a union of triangles.
    """
    if G is None:
        G = build_circulant(spec)
    pairs: List[Optional[ColorPair]] = [None] * G.num_edges
    classes = G.label_classes()
    d, m, r = spec.d, spec.m, spec.r
    for i in range(spec.num_levels):
        edges = classes[i]
        if d == 2:
            for k in edges:
                pairs[k] = (i // 2, 1)
        elif d == 3 or (i == m and r <= 3):
            for k in edges:
                pairs[k] = (i, 1)
        elif i == m:
            for cyc in decompose_cycles(G, i).cycles:
                for pos, k in enumerate(cycle_edges(G, cyc)):
                    pairs[k] = (i, half_cycle_slot(pos, r))
        else:
            for cyc in decompose_cycles(G, i).cycles:
                for pos, k in enumerate(cycle_edges(G, cyc)):
                    pairs[k] = (i, _level_slot(spec, i, pos))
    return EdgeColoring.from_pairs(G, pairs)


def exact_value(spec: CirculantSpec) -> Optional[int]:
    """The rc = src value when the level construction meets the diameter, else None."""
    upper = expected_color_count(spec)
    return upper if upper == diameter_formula(spec) else None
