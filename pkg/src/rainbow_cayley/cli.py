"""Command line interface: ``rainbow-cayley <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from .abelian_group import (
    GeneratorSet,
    GroupError,
    GroupSpec,
    generates,
    minimal_generating_subsets,
    order,
)
from .cayley import GraphError, LabeledGraph, build_cayley
from .circulant import CirculantError, CirculantSpec, build_circulant, color_circulant
from .coloring import EdgeColoring
from .corpus import load_corpus
from .oracle import (
    DEFAULT_MAX_COLORS,
    DEFAULT_MAX_EDGES,
    DEFAULT_MAX_STATES,
    exact_rc,
)
from .pathword import WordError, route_word, word_to_path
from .report import construct_group, format_probe, format_table, plot_sweep, probe_odd_orders, sweep
from .verify import ColorCapExceeded, verify


class UsageError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--moduli", help="cyclic factors, e.g. 2,2,2")
    p.add_argument("--gens", help="generators, e.g. '1,0,0;0,1,0' (default: unit vectors)")
    p.add_argument("--circulant", help="recursive circulant as r:d:m")


def _group_and_gens(args) -> Tuple[GroupSpec, GeneratorSet]:
    if not args.moduli:
        raise UsageError("--moduli is required")
    group = GroupSpec.parse(args.moduli)
    gens = GeneratorSet.parse(group, args.gens) if args.gens else GeneratorSet.units(group)
    return group, gens.closure()


def _graph_from_args(args) -> LabeledGraph:
    if args.circulant:
        return build_circulant(CirculantSpec.parse(args.circulant))
    group, gens = _group_and_gens(args)
    return build_cayley(group, gens)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_group(args) -> int:
    group, gens = _group_and_gens(args)
    print(f"group: {group} (order {group.order})")
    for rep in gens.representatives():
        print(f"  {rep}: order {order(rep)}")
    print(f"generates: {'yes' if generates(gens) else 'no'}")
    for sub in minimal_generating_subsets(gens):
        elems = " ".join(str(g) for g in sub.generators)
        print(f"minimal subset: {{{elems}}} score {sub.score}")
    return 0


def cmd_build(args) -> int:
    G = _graph_from_args(args)
    _write(G.to_dot() if args.format == "dot" else G.to_json() + "\n", args.out)
    return 0


def cmd_color(args) -> int:
    if args.method == "thm4":
        if not args.circulant:
            raise UsageError("--method thm4 needs --circulant")
        coloring = color_circulant(CirculantSpec.parse(args.circulant))
    elif args.circulant:
        spec = CirculantSpec.parse(args.circulant)
        group = GroupSpec((spec.N,))
        gens = GeneratorSet(group, tuple(group.element((j,)) for j in spec.levels))
        _, coloring = construct_group(group, gens)
    else:
        _, coloring = construct_group(*_group_and_gens(args))
    if args.out:
        Path(args.out).write_text(coloring.to_json())
    if args.format == "dot":
        sys.stdout.write(coloring.graph.to_dot(coloring.colors))
    print(f"colors: {coloring.num_colors}")
    return 0


def cmd_verify(args) -> int:
    coloring = EdgeColoring.from_json(Path(args.cert).read_text())
    report = verify(coloring, args.mode, vertex_transitive=args.vertex_transitive, seed=args.seed)
    print(json.dumps(report.to_json_obj()))
    return 0 if report.ok else 1


def cmd_route(args) -> int:
    spec = CirculantSpec.parse(args.circulant)
    word = route_word(spec, args.to)
    path = word_to_path(spec, word)
    print(f"{word} | {' '.join(map(str, path))}")
    return 0


def cmd_solve(args) -> int:
    if args.graph:
        G = LabeledGraph.from_json_obj(json.loads(Path(args.graph).read_text()))
    else:
        G = _graph_from_args(args)
    res = exact_rc(G, args.mode, max_edges=args.max_edges, max_colors=args.max_colors,
                   max_states=args.max_states)
    if res.exact:
        print(f"{args.mode}: {res.value}")
        if args.out and res.witness is not None:
            Path(args.out).write_text(res.witness.to_json())
    else:
        print(f"{args.mode}: [{res.lower}, {res.upper}] ({res.reason})")
    return 0


def cmd_sweep(args) -> int:
    corpus = load_corpus(args.corpus)
    rows = sweep(corpus, oracle=not args.no_oracle, grid=not args.no_grid)
    table = format_table(rows)
    probe = format_probe(probe_odd_orders(corpus.tagged("probe")))
    sys.stdout.write(table)
    sys.stdout.write("\n")
    sys.stdout.write(probe)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "sweep.tsv").write_text(table)
        (out / "probe.tsv").write_text(probe)
        plot_sweep(rows, str(out / "sweep.png"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbow-cayley",
        description="Rainbow edge-colorings of Cayley graphs and recursive circulants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="element orders, generation, minimal generating subsets")
    _add_graph_args(p)
    p.add_argument("action", nargs="?", default="info", choices=["info"])
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("build", help="export a Cayley graph or circulant")
    _add_graph_args(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("color", help="constructive coloring, written as a certificate")
    _add_graph_args(p)
    p.add_argument("--method", choices=["thm2", "thm4"], default="thm2",
                   help="thm2: half-cycle coloring; thm4: circulant level coloring")
    p.add_argument("--format", choices=["none", "dot"], default="none")
    p.add_argument("--out", help="certificate JSON path")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--mode", choices=["rainbow", "strong"], default="rainbow")
    p.add_argument("--vertex-transitive", action="store_true",
                   help="check source 0 and one random source only")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("route", help="canonical shortest path in a recursive circulant")
    p.add_argument("--circulant", required=True)
    p.add_argument("--to", type=int, required=True)
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("solve", help="exact rc/src by exhaustive search")
    _add_graph_args(p)
    p.add_argument("--graph", help="graph JSON file instead of --moduli/--circulant")
    p.add_argument("--mode", choices=["rc", "src"], default="rc")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.add_argument("--max-colors", type=int, default=DEFAULT_MAX_COLORS)
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--out", help="witness certificate path")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="bounds/verification/oracle table over a corpus")
    p.add_argument("--corpus", default="default", help="bundled corpus name or .ini path")
    p.add_argument("--out-dir", help="write sweep.tsv, probe.tsv and sweep.png here")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--no-grid", action="store_true", help="skip the circulant grid")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GroupError, GraphError, CirculantError, WordError,
            ColorCapExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
