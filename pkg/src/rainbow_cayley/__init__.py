"""Rainbow and strong rainbow edge-colorings of Abelian Cayley graphs and
recursive circulants, with exact verification and a brute-force oracle."""

from .abelian_group import GeneratorSet, GroupElement, GroupSpec
from .cayley import LabeledGraph, bfs_distances, build_cayley, diameter
from .circulant import CirculantSpec, build_circulant, color_circulant, diameter_formula
from .coloring import EdgeColoring, color_cayley
from .oracle import bounds_report, exact_rc
from .pathword import PathWord, canonical_word, naf_word, word_to_path
from .verify import is_rainbow_connected, is_strong_rainbow_connected

__version__ = "0.1.0"

__all__ = [
    "CirculantSpec",
    "EdgeColoring",
    "GeneratorSet",
    "GroupElement",
    "GroupSpec",
    "LabeledGraph",
    "PathWord",
    "bfs_distances",
    "bounds_report",
    "build_cayley",
    "build_circulant",
    "canonical_word",
    "color_cayley",
    "color_circulant",
    "diameter",
    "diameter_formula",
    "exact_rc",
    "is_rainbow_connected",
    "is_strong_rainbow_connected",
    "naf_word",
    "word_to_path",
]
