"""Finite Abelian groups given as direct products of cyclic groups.

A group is described by its list of moduli, ``Z_{n_1} x ... x Z_{n_s}``, and
elements are residue vectors.  Everything here is immutable.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple

MAX_SUBSET_GENERATORS = 16


class GroupError(ValueError):
    """Raised for malformed groups, elements or generator sets."""


@dataclass(frozen=True)
class GroupSpec:
    moduli: Tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(n) for n in self.moduli)
        if not moduli:
            raise GroupError("a group needs at least one modulus")
        if any(n < 2 for n in moduli):
            raise GroupError(f"every modulus must be >= 2, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``"2,2,2"`` style moduli lists."""
        try:
            moduli = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise GroupError(f"bad moduli string {text!r}") from exc
        return cls(moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def element(self, residues: Iterable[int]) -> "GroupElement":
        residues = tuple(residues)
        if len(residues) != self.rank:
            raise GroupError(
                f"element {residues} has {len(residues)} components, group has {self.rank}"
            )
        return GroupElement(self, tuple(x % n for x, n in zip(residues, self.moduli)))

    def parse_element(self, text: str) -> "GroupElement":
        try:
            return self.element(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise GroupError(f"bad element string {text!r}") from exc

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def unit(self, k: int) -> "GroupElement":
        residues = [0] * self.rank
        residues[k] = 1
        return GroupElement(self, tuple(residues))

    # Mixed-radix indexing; the last component varies fastest.
    def index_of(self, g: "GroupElement") -> int:
        idx = 0
        for x, n in zip(g.residues, self.moduli):
            idx = idx * n + x
        return idx

    def element_at(self, idx: int) -> "GroupElement":
        if not 0 <= idx < self.order:
            raise GroupError(f"index {idx} out of range for group of order {self.order}")
        residues = []
        for n in reversed(self.moduli):
            idx, x = divmod(idx, n)
            residues.append(x)
        return GroupElement(self, tuple(reversed(residues)))

    def elements(self) -> Iterator["GroupElement"]:
        for idx in range(self.order):
            yield self.element_at(idx)

    def __str__(self) -> str:
        return " x ".join(f"Z_{n}" for n in self.moduli)


@dataclass(frozen=True, order=False)
class GroupElement:
    group: GroupSpec = field(compare=True, repr=False)
    residues: Tuple[int, ...]

    def _check(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise GroupError(f"elements of different groups: {self.group} vs {other.group}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.group,
            tuple((x + y) % n for x, y, n in zip(self.residues, other.residues, self.group.moduli)),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(
            self.group, tuple((-x) % n for x, n in zip(self.residues, self.group.moduli))
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        return GroupElement(
            self.group, tuple((k * x) % n for x, n in zip(self.residues, self.group.moduli))
        )

    __rmul__ = __mul__

    def __lt__(self, other: "GroupElement") -> bool:
        self._check(other)
        return self.residues < other.residues

    @property
    def is_identity(self) -> bool:
        return not any(self.residues)

    @property
    def index(self) -> int:
        return self.group.index_of(self)

    def __str__(self) -> str:
        if self.group.rank == 1:
            return str(self.residues[0])
        return "(" + ",".join(map(str, self.residues)) + ")"


def add(g: GroupElement, h: GroupElement) -> GroupElement:
    return g + h


def order(g: GroupElement) -> int:
    """Least ``t >= 1`` with ``t*g`` equal to the identity."""
    return math.lcm(*(n // math.gcd(n, x) for x, n in zip(g.residues, g.group.moduli)))


def canonical(g: GroupElement) -> GroupElement:
    """Representative of the pair {g, -g}: the lexicographically smaller one."""
    return min(g, -g)


@dataclass(frozen=True)
class GeneratorSet:
    """A deduplicated set of non-identity elements of one group.

    Element order is preserved from the input; it fixes the generator (label)
    numbering used by graph construction and colouring legends.
    """

    group: GroupSpec
    elements: Tuple[GroupElement, ...]

    def __post_init__(self):
        seen = []
        for g in self.elements:
            if g.group != self.group:
                raise GroupError(f"generator {g} does not belong to {self.group}")
            if g.is_identity:
                raise GroupError("generator sets may not contain the identity")
            if g not in seen:
                seen.append(g)
        object.__setattr__(self, "elements", tuple(seen))

    @classmethod
    def parse(cls, group: GroupSpec, text: str) -> "GeneratorSet":
        """Parse ``"1,0,0;0,1,0"`` style lists of residue vectors."""
        parts = [p for p in text.split(";") if p.strip()]
        return cls(group, tuple(group.parse_element(p) for p in parts))

    @classmethod
    def units(cls, group: GroupSpec) -> "GeneratorSet":
        return cls(group, tuple(group.unit(k) for k in range(group.rank)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def inverse_closed(self) -> bool:
        members = set(self.elements)
        return all(-g in members for g in self.elements)

    def closure(self) -> "GeneratorSet":
        """``S ∪ S^{-1}``, keeping first-appearance order."""
        out: List[GroupElement] = []
        for g in self.elements:
            out.append(g)
            out.append(-g)
        return GeneratorSet(self.group, tuple(out))

    def representatives(self) -> Tuple[GroupElement, ...]:
        """One canonical element per {a, -a} pair, in first-appearance order."""
        reps: List[GroupElement] = []
        for g in self.elements:
            c = canonical(g)
            if c not in reps:
                reps.append(c)
        return tuple(reps)


def subgroup_closure(group: GroupSpec, gens: Sequence[GroupElement]) -> set:
    """Residue vectors of the subgroup generated by ``gens`` (BFS from identity)."""
    start = group.identity
    seen = {start.residues}
    queue = deque([start])
    steps = list(gens) + [-g for g in gens]
    while queue:
        x = queue.popleft()
        for g in steps:
            y = x + g
            if y.residues not in seen:
                seen.add(y.residues)
                queue.append(y)
    return seen


def _generates(group: GroupSpec, gens: Sequence[GroupElement]) -> bool:
    return len(subgroup_closure(group, gens)) == group.order


def generates(S: GeneratorSet) -> bool:
    return _generates(S.group, S.elements)


def is_minimal_generating(group: GroupSpec, gens: Sequence[GroupElement]) -> bool:
    """True iff ``gens`` generate and dropping any one of them does not.

    Generation is monotone under taking supersets, so single deletions suffice.
    """
    gens = list(gens)
    if not _generates(group, gens):
        return False
    return all(not _generates(group, gens[:k] + gens[k + 1:]) for k in range(len(gens)))


def is_independent(group: GroupSpec, gens: Sequence[GroupElement]) -> bool:
    """True iff the group is the internal direct product of the cyclic
    subgroups generated by ``gens``: they generate and their orders multiply
    to the group order.  Exponent vectors are then unique.
    """
    return _generates(group, gens) and math.prod(order(g) for g in gens) == group.order


def ceil_half_score(gens: Iterable[GroupElement]) -> int:
    return sum((order(g) + 1) // 2 for g in gens)


def floor_half_score(gens: Iterable[GroupElement]) -> int:
    return sum(order(g) // 2 for g in gens)


@dataclass(frozen=True)
class MinimalSubset:
    generators: GeneratorSet
    score: int


def minimal_generating_subsets(S: GeneratorSet) -> List[MinimalSubset]:
    """All minimal generating subsets of ``S`` up to identifying ``a`` with ``-a``.

    Each subset is given by pair representatives and carries its
    sum of ``ceil(|a|/2)``.  Returns an empty list when ``S`` does not generate.
    """
    reps = S.representatives()
    if len(reps) > MAX_SUBSET_GENERATORS:
        raise GroupError(
            f"{len(reps)} generator pairs exceeds the subset-enumeration cap of "
            f"{MAX_SUBSET_GENERATORS}"
        )
    group = S.group
    if not _generates(group, reps):
        return []
    found: List[MinimalSubset] = []
    for size in range(1, len(reps) + 1):
        for combo in combinations(reps, size):
            if is_minimal_generating(group, combo):
                found.append(MinimalSubset(GeneratorSet(group, combo), ceil_half_score(combo)))
    return found
