"""Instance corpus shared by the sweep command and the acceptance tests."""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple

from .abelian_group import GeneratorSet, GroupSpec
from .circulant import CirculantSpec


@dataclass(frozen=True)
class Instance:
    name: str
    kind: str  # "group" or "circulant"
    tags: Tuple[str, ...]
    group: Optional[GroupSpec] = None
    gens: Optional[GeneratorSet] = None
    circulant: Optional[CirculantSpec] = None

    def has(self, tag: str) -> bool:
        return tag in self.tags


@dataclass(frozen=True)
class Grid:
    d_min: int = 2
    d_max: int = 9
    m_max: int = 3
    max_n_diameter: int = 600
    max_n_verify: int = 300

    def specs(self, max_n: Optional[int] = None) -> List[CirculantSpec]:
        limit = self.max_n_diameter if max_n is None else max_n
        out = []
        for d in range(self.d_min, self.d_max + 1):
            for r in range(1, d):
                for m in range(1, self.m_max + 1):
                    spec = CirculantSpec(r, d, m)
                    if spec.N <= limit:
                        out.append(spec)
        return out


@dataclass(frozen=True)
class Corpus:
    instances: Tuple[Instance, ...]
    grid: Grid

    def tagged(self, tag: str) -> List[Instance]:
        return [inst for inst in self.instances if inst.has(tag)]

    def __getitem__(self, name: str) -> Instance:
        for inst in self.instances:
            if inst.name == name:
                return inst
        raise KeyError(name)


def _read_text(name: str) -> str:
    path = Path(name)
    if path.suffix == ".ini" and path.exists():
        return path.read_text()
    return resources.files("rainbow_cayley").joinpath("corpora", f"{name}.ini").read_text()


def load_corpus(name: str = "default") -> Corpus:
    """Load a corpus by bundled name (``"default"``) or by ``.ini`` path."""
    parser = configparser.ConfigParser(interpolation=None)
    parser.read_string(_read_text(name))
    grid = Grid()
    if parser.has_section("grid"):
        grid = Grid(**{k: parser.getint("grid", k) for k in parser["grid"]})
    instances = []
    for section in parser.sections():
        if ":" not in section:
            continue
        kind, inst_name = section.split(":", 1)
        body = parser[section]
        tags = tuple(t.strip() for t in body.get("tags", "").split(",") if t.strip())
        if kind == "group":
            group = GroupSpec.parse(body["moduli"])
            if "gens" in body:
                gens = GeneratorSet.parse(group, body["gens"])
            else:
                gens = GeneratorSet.units(group)
            instances.append(Instance(inst_name, kind, tags, group=group, gens=gens.closure()))
        elif kind == "circulant":
            instances.append(
                Instance(inst_name, kind, tags, circulant=CirculantSpec.parse(body["spec"]))
            )
        else:
            raise ValueError(f"unknown corpus section kind {kind!r}")
    return Corpus(tuple(instances), grid)
