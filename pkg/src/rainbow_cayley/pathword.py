"""Shortest-path words in recursive circulants.

A path from 0 is recorded as one signed coefficient per level: ``c_j`` steps
of ``sign(c_j) * d^j``.  Because the group is Abelian the steps can be taken
in any order; the word only fixes how many of each kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from .circulant import CirculantSpec


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class PathWord:
    coeffs: Tuple[int, ...]
    d: int

    @property
    def length(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    @property
    def value(self) -> int:
        return sum(c * self.d ** j for j, c in enumerate(self.coeffs))

    def steps(self) -> List[int]:
        """Signed jumps, level-ascending."""
        out = []
        for j, c in enumerate(self.coeffs):
            jump = self.d ** j if c > 0 else -(self.d ** j)
            out.extend([jump] * abs(c))
        return out

    def format(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            sign = "+" if c > 0 else "-"
            parts.extend([f"{sign}{self.d}^{j}"] * abs(c))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format() or "(empty)"


def level_bounds(spec: CirculantSpec) -> Tuple[int, ...]:
    """Largest allowed ``|c_j|``: ``floor(d/2)`` below the top, ``floor(r/2)`` on top."""
    bounds = [spec.d // 2] * spec.m
    if spec.r >= 2:
        bounds.append(spec.r // 2)
    return tuple(bounds)


def check_word(spec: CirculantSpec, word: PathWord) -> None:
    if word.d != spec.d:
        raise WordError(f"word is in base {word.d}, circulant has d={spec.d}")
    bounds = level_bounds(spec)
    if len(word.coeffs) > len(bounds) and any(word.coeffs[len(bounds):]):
        raise WordError("word uses a level the circulant does not have")
    for j, (c, bound) in enumerate(zip(word.coeffs, bounds)):
        if abs(c) > bound:
            raise WordError(f"level {j} has {abs(c)} steps, at most {bound} allowed")


def _pad(coeffs: Sequence[int], size: int) -> Tuple[int, ...]:
    return tuple(coeffs) + (0,) * (size - len(coeffs))


def canonical_word(spec: CirculantSpec, v: int) -> PathWord:
    """Minimum-length word reaching ``v`` with every level inside its bound.

    Digits are chosen level by level from the bottom, ``c_j ≡ x (mod d)`` for
    the running residual ``x``.  Only an even ``d`` with ``x ≡ d/2`` leaves a
    choice (``±d/2``); both branches are explored and ``+d/2`` wins ties.
    The top level works modulo ``r`` (``d^m`` has order ``r``) and vanishes
    when ``r = 1``.
    """
    r, d, m, N = spec.r, spec.d, spec.m, spec.N
    if not 0 <= v < N:
        raise WordError(f"vertex {v} outside 0..{N - 1}")
    half = d // 2

    @lru_cache(maxsize=None)
    def best(j: int, x: int) -> Tuple[int, Tuple[int, ...]]:
        if j == m:
            if r == 1:
                return 0, ()
            y = x % r
            c = y if y <= r // 2 else y - r
            return abs(c), (c,)
        low = x % d
        choices = [low] if low <= half else [low - d]
        if d % 2 == 0 and low == half:
            choices = [half, -half]
        result = None
        for c in choices:
            cost, tail = best(j + 1, (x - c) // d)
            cand = (cost + abs(c), (c,) + tail)
            if result is None or cand[0] < result[0]:
                result = cand
        return result

    _, coeffs = best(0, v)
    return PathWord(_pad(coeffs, spec.num_levels), d)


def greedy_word(spec: CirculantSpec, v: int) -> PathWord:
    """Plain base-``d`` digits of ``v``; the top level holds ``v // d^m``."""
    coeffs = []
    x = v
    for _ in range(spec.m):
        x, digit = divmod(x, spec.d)
        coeffs.append(digit)
    if spec.r >= 2:
        coeffs.append(x)
    return PathWord(tuple(coeffs), spec.d)


def rewrite_word(spec: CirculantSpec, word: PathWord) -> PathWord:
    """Push a word inside the level bounds without making it longer.

    Repeatedly takes the lowest level over its bound.  Below the top,
    ``c`` steps of ``+d^i`` become one ``+d^(i+1)`` and ``d - c`` steps of
    ``-d^i`` (mirrored for negative ``c``).  On the top level, ``c`` steps of
    ``+d^m`` become ``r - c`` steps of ``-d^m``.
    """
    r, d, m = spec.r, spec.d, spec.m
    bounds = level_bounds(spec)
    coeffs = list(_pad(word.coeffs, spec.num_levels))
    limit = (m + 1) * d + sum(abs(c) for c in coeffs)
    for _ in range(limit):
        bad = [j for j, (c, b) in enumerate(zip(coeffs, bounds)) if abs(c) > b]
        if not bad:
            return PathWord(tuple(coeffs), d)
        i = bad[0]
        s = 1 if coeffs[i] > 0 else -1
        if i < m:
            coeffs[i] -= s * d
            if i + 1 < len(coeffs):
                coeffs[i + 1] += s
        else:
            coeffs[i] -= s * r
    raise AssertionError(f"rewrite did not settle within {limit} passes")


def naf_digits(x: int) -> List[int]:
    """Non-adjacent form of the integer ``x``, least significant digit first."""
    digits = []
    while x != 0:
        if x % 2:
            z = 2 - (x % 4)
            x -= z
        else:
            z = 0
        digits.append(z)
        x //= 2
    return digits


def naf_word(m: int, v: int) -> PathWord:
    """NAF of the representative of ``v`` in ``(-2^(m-1), 2^(m-1)]``."""
    N = 2 ** m
    if not 0 <= v < N:
        raise WordError(f"vertex {v} outside 0..{N - 1}")
    x = v if v <= N // 2 else v - N
    digits = naf_digits(x)
    if len(digits) > m:
        raise AssertionError(f"NAF of {x} overflows {m} digits")
    return PathWord(_pad(digits, m), 2)


def route_word(spec: CirculantSpec, v: int) -> PathWord:
    """Canonical word used for routing: NAF for ``d = 2``, level digits otherwise."""
    if spec.d == 2:
        return naf_word(spec.m, v)
    return canonical_word(spec, v)


def word_to_path(spec: CirculantSpec, word: PathWord, start: int = 0) -> List[int]:
    """Vertices visited from ``start`` taking the word's steps level-ascending."""
    check_word(spec, word)
    N = spec.N
    path = [start % N]
    for jump in word.steps():
        path.append((path[-1] + jump) % N)
    return path
