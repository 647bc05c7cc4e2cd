"""Sweep over a corpus: constructions, bounds, verification, oracle values.

The table goes out tab-delimited; ``plot_sweep`` renders the same rows as a
PNG next to it.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Tuple

from .abelian_group import (
    GeneratorSet,
    GroupSpec,
    floor_half_score,
    is_independent,
    is_minimal_generating,
)
from .cayley import LabeledGraph, build_cayley, diameter
from .circulant import CirculantSpec, color_circulant, diameter_formula
from .coloring import EdgeColoring, color_cayley, color_count_upper_bound, extend_to_supergraph
from .corpus import Corpus, Instance
from .oracle import DEFAULT_MAX_COLORS, DEFAULT_MAX_EDGES, bounds_report, exact_rc
from .verify import is_rainbow_connected, is_strong_rainbow_connected

SWEEP_COLUMNS = (
    "instance", "n", "edges", "diameter", "formula_diameter",
    "lower", "construction", "verified", "oracle",
)


def construct_group(group: GroupSpec, S: GeneratorSet) -> Tuple[LabeledGraph, EdgeColoring]:
    """Half-cycle coloring over the cheapest minimal generating subset of ``S``,
    extended to the full Cayley graph of ``S`` if ``S`` is larger."""
    S = S.closure()
    _, S_star = color_count_upper_bound(S)
    if S_star is None:
        raise ValueError("generators do not generate the group")
    S_pair = S_star.closure()
    H = build_cayley(group, S_pair)
    coloring = color_cayley(H, S_star)
    if set(S_pair.elements) == set(S.elements):
        return H, coloring
    G = build_cayley(group, S)
    return G, extend_to_supergraph(coloring, G)


def construct(inst: Instance) -> Tuple[LabeledGraph, EdgeColoring]:
    if inst.kind == "circulant":
        coloring = color_circulant(inst.circulant)
        return coloring.graph, coloring
    return construct_group(inst.group, inst.gens)


def circulant_instance(spec: CirculantSpec) -> Instance:
    return Instance(str(spec), "circulant", ("grid",), circulant=spec)


def verification_label(coloring: EdgeColoring) -> str:
    G = coloring.graph
    if is_strong_rainbow_connected(G, coloring).ok:
        return "strong"
    if is_rainbow_connected(G, coloring).ok:
        return "rainbow"
    return "FAIL"


@dataclass
class SweepRow:
    instance: str
    n: int
    edges: int
    diameter: int
    formula_diameter: str
    lower: int
    construction: int
    verified: str
    oracle: str


def _formula_diameter(inst: Instance) -> str:
    if inst.kind == "circulant":
        return str(diameter_formula(inst.circulant))
    reps = inst.gens.representatives()
    if is_minimal_generating(inst.group, reps) and is_independent(inst.group, reps):
        return str(floor_half_score(reps))
    return "-"


def _oracle_text(G: LabeledGraph, upper: int, max_edges: int, max_colors: int) -> str:
    if G.num_edges > max_edges:
        return "-"
    res = exact_rc(G, "rc", max_edges=max_edges, max_colors=max_colors, upper=upper)
    if res.exact:
        return str(res.value)
    return f"[{res.lower},{res.upper}]"


def evaluate(
    inst: Instance,
    oracle: bool = True,
    verify_limit: Optional[int] = None,
    max_edges: int = DEFAULT_MAX_EDGES,
    max_colors: int = DEFAULT_MAX_COLORS,
) -> SweepRow:
    G, coloring = construct(inst)
    if inst.kind == "circulant":
        bounds = bounds_report(G, circulant=inst.circulant)
    else:
        bounds = bounds_report(G, generators=inst.gens)
    if verify_limit is not None and G.n > verify_limit:
        verified = "skipped"
    else:
        verified = verification_label(coloring)
    return SweepRow(
        instance=inst.name,
        n=G.n,
        edges=G.num_edges,
        diameter=diameter(G),
        formula_diameter=_formula_diameter(inst),
        lower=bounds.lower,
        construction=coloring.num_colors,
        verified=verified,
        oracle=_oracle_text(G, coloring.num_colors, max_edges, max_colors) if oracle else "-",
    )


def sweep(corpus: Corpus, oracle: bool = True, grid: bool = True) -> List[SweepRow]:
    """Named instances first, then the circulant grid (verified up to its size limit)."""
    rows = [evaluate(inst, oracle=oracle) for inst in corpus.instances]
    if grid:
        for spec in corpus.grid.specs():
            rows.append(
                evaluate(circulant_instance(spec), oracle=oracle,
                         verify_limit=corpus.grid.max_n_verify)
            )
    return rows


def format_table(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        d = asdict(row)
        writer.writerow([d[c] for c in SWEEP_COLUMNS])
    return buf.getvalue()


@dataclass
class ProbeRow:
    instance: str
    construction: int
    rc: str
    src: str
    verdict: str


def _classify(res, construction: int) -> Tuple[str, str]:
    if res.exact:
        return str(res.value), ("equal" if res.value == construction else "strictly-less")
    if res.lower >= construction:
        # The verified construction already meets the proven lower bound.
        return str(construction), "equal"
    return f"[{res.lower},{res.upper}]", "cap-exceeded"


def probe_odd_orders(
    instances: Iterable[Instance],
    max_edges: int = DEFAULT_MAX_EDGES,
    max_colors: int = DEFAULT_MAX_COLORS,
) -> List[ProbeRow]:
    """Compare exact rc/src against the half-cycle count on odd-order instances."""
    rows = []
    for inst in instances:
        G, coloring = construct(inst)
        k = coloring.num_colors
        verdicts = []
        texts = []
        for mode in ("rc", "src"):
            res = exact_rc(G, mode, max_edges=max_edges, max_colors=max_colors, upper=k)
            text, verdict = _classify(res, k)
            texts.append(text)
            verdicts.append(verdict)
        if "cap-exceeded" in verdicts:
            verdict = "cap-exceeded"
        elif "strictly-less" in verdicts:
            verdict = "strictly-less"
        else:
            verdict = "equal"
        rows.append(ProbeRow(inst.name, k, texts[0], texts[1], verdict))
    return rows


def format_probe(rows: Iterable[ProbeRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    cols = ("instance", "construction", "rc", "src", "verdict")
    writer.writerow(cols)
    for row in rows:
        d = asdict(row)
        writer.writerow([d[c] for c in cols])
    return buf.getvalue()


def plot_sweep(rows: List[SweepRow], path: str) -> None:
    """Lower bound, construction and oracle value per instance, saved to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r.instance for r in rows]
    x = list(range(len(rows)))
    fig, ax = plt.subplots(figsize=(max(8, 0.22 * len(rows)), 4.5))
    ax.plot(x, [r.lower for r in rows], "v", color="tab:blue", label="lower bound")
    ax.plot(x, [r.construction for r in rows], "^", color="tab:orange", label="construction")
    ox = [i for i, r in enumerate(rows) if r.oracle.isdigit()]
    ax.plot(ox, [int(rows[i].oracle) for i in ox], "o", mfc="none", color="k",
            label="exact rc")
    bad = [i for i, r in enumerate(rows) if r.verified == "FAIL"]
    if bad:
        ax.plot(bad, [rows[i].construction for i in bad], "x", color="red", ms=9,
                label="verification failed")
    ax.set_xticks(x)
    ax.set_xticklabels(names, rotation=90, fontsize=6)
    ax.set_ylabel("colors")
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
