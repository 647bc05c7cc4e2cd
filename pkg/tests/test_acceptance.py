"""Acceptance criteria, each with its runtime budget.

A one-line PASS/FAIL per criterion is printed in the terminal summary.
"""

import random
import time
from contextlib import contextmanager

import pytest

from rainbow_cayley.abelian_group import (
    ceil_half_score,
    floor_half_score,
    is_independent,
    order,
)
from rainbow_cayley.cayley import LabeledGraph, bfs_distances, diameter, is_connected
from rainbow_cayley.circulant import build_circulant, color_circulant, diameter_formula
from rainbow_cayley.coloring import color_count_upper_bound
from rainbow_cayley.corpus import load_corpus
from rainbow_cayley.oracle import bounds_report, exact_rc
from rainbow_cayley.pathword import canonical_word, check_word, naf_word, route_word
from rainbow_cayley.report import construct, probe_odd_orders
from rainbow_cayley.verify import is_strong_rainbow_connected

from test_pathword import min_weight_signed_digits

CORPUS = load_corpus("default")


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds}s"


@pytest.mark.criterion(1, "hypercube: n colors, strong, rc(Q2)=2, rc(Q3)=3")
def test_hypercube_exactness():
    with budget(60):
        cubes = CORPUS.tagged("hypercube")
        assert [inst.group.rank for inst in cubes] == [2, 3, 4]
        for inst in cubes:
            n = inst.group.rank
            G, coloring = construct(inst)
            assert coloring.num_colors == n
            assert is_strong_rainbow_connected(G, coloring).ok
            if inst.has("oracle"):
                for mode in ("rc", "src"):
                    res = exact_rc(G, mode)
                    assert res.exact and res.value == n, (inst.name, mode, res)


@pytest.mark.criterion(2, "even torus: construction == diameter == sum n_k/2, strong")
def test_even_torus_exactness():
    with budget(30):
        expected = {"C4xC4": 4, "C4xC6": 5}
        tori = {inst.name: inst for inst in CORPUS.tagged("torus")}
        assert set(expected) <= set(tori)
        for inst in tori.values():
            value = sum(n // 2 for n in inst.group.moduli)
            assert expected.get(inst.name, value) == value
            G, coloring = construct(inst)
            assert coloring.num_colors == value
            assert diameter(G) == value
            assert is_strong_rainbow_connected(G, coloring).ok


@pytest.mark.criterion(3, "circulant diameter formula == BFS diameter, N <= 600")
def test_diameter_formula_grid():
    with budget(120):
        specs = CORPUS.grid.specs(600)
        expected = {(r, d, m) for d in range(2, 10) for r in range(1, d)
                    for m in range(1, 4) if r * d ** m <= 600}
        assert {(s.r, s.d, s.m) for s in specs} == expected
        for spec in specs:
            G = build_circulant(spec)
            assert diameter_formula(spec) == max(bfs_distances(G, 0)), spec


@pytest.mark.criterion(4, "recursive circulant exact cases")
def test_circulant_exact_cases():
    with budget(120):
        expected = {
            "G(9,3)": (2, True),   # m + floor(r/2), diameter matches
            "G(27,3)": (3, True),
            "G(18,3)": (3, True),
            "G(16,2)": (2, True),  # m/2
            "G(36,9)": (6, False),  # rm + r/2
            "G(21,7)": (4, False),  # 3m + 1
        }
        for name, (value, diameter_tight) in expected.items():
            spec = CORPUS[name].circulant
            coloring = color_circulant(spec)
            G = coloring.graph
            assert coloring.num_colors == value, name
            assert is_strong_rainbow_connected(G, coloring).ok, name
            if diameter_tight:
                assert diameter(G) == value, name
                report = bounds_report(G, circulant=spec)
                assert report.exact and report.value == value, name


@pytest.mark.criterion(5, "canonical word length == BFS distance; digit bounds; NAF minimal")
def test_canonical_word_minimality():
    with budget(120):
        specs = CORPUS.grid.specs(600) + [i.circulant for i in CORPUS.tagged("exact")]
        for spec in specs:
            dist = bfs_distances(build_circulant(spec), 0)
            for v in range(spec.N):
                w = route_word(spec, v)
                assert w.length == dist[v], (spec, v)
                assert w.value % spec.N == v
                check_word(spec, w)
                if spec.d == 2:
                    c = w.coeffs
                    assert all(not (c[j] and c[j + 1]) for j in range(len(c) - 1))
                else:
                    assert canonical_word(spec, v) == w
        for m in range(1, 11):
            best, naf_by_value = min_weight_signed_digits(m)
            N = 2 ** m
            for v in range(N):
                w = naf_word(m, v)
                assert w.length == best[v], (m, v)
                rep = v if v <= N // 2 else v - N
                assert [w.coeffs] == naf_by_value[rep], (m, v)


@pytest.mark.criterion(6, "half-cycle sandwich on >= 10 minimal generating sets")
def test_sandwich():
    with budget(180):
        instances = CORPUS.tagged("sandwich")
        assert len(instances) >= 10
        parities = set()
        for inst in instances:
            _, S_star = color_count_upper_bound(inst.gens)
            gens = S_star.elements
            assert is_independent(inst.group, gens), inst.name
            lo, hi = floor_half_score(gens), ceil_half_score(gens)
            parities.update(order(g) % 2 for g in gens)
            G, coloring = construct(inst)
            assert lo <= coloring.num_colors <= hi, inst.name
            assert diameter(G) == lo, inst.name
            assert is_strong_rainbow_connected(G, coloring).ok, inst.name
        assert parities == {0, 1}


def _random_pair(rng):
    """A random connected graph with at most 12 edges and a random connected
    spanning subgraph of it."""
    while True:
        n = rng.randint(3, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        m = rng.randint(n - 1, min(12, len(pairs)))
        G = LabeledGraph.from_edges(n, sorted(rng.sample(pairs, m)))
        if not is_connected(G):
            continue
        keep = [(u, v) for u, v, _ in G.edges]
        rng.shuffle(keep)
        drop = rng.randint(0, m - (n - 1))
        for e in list(keep):
            if drop == 0:
                break
            trial = [f for f in keep if f != e]
            if is_connected(LabeledGraph.from_edges(n, sorted(trial))):
                keep = trial
                drop -= 1
        return G, LabeledGraph.from_edges(n, sorted(keep))


@pytest.mark.criterion(7, "spanning-subgraph monotonicity rc(G) <= rc(H), 20 random pairs")
def test_spanning_monotonicity():
    with budget(300):
        rng = random.Random(20240607)
        proper = 0
        for _ in range(20):
            G, H = _random_pair(rng)
            proper += H.num_edges < G.num_edges
            assert G.num_edges <= 12
            rg = exact_rc(G, "rc", max_colors=12)
            rh = exact_rc(H, "rc", max_colors=12)
            assert rg.exact and rh.exact
            assert rg.value <= rh.value, (G.edges, H.edges)
        assert proper >= 10


@pytest.mark.criterion(8, "odd-order probe completes and classifies every instance")
def test_odd_order_probe():
    with budget(300):
        instances = CORPUS.tagged("probe")
        rows = probe_odd_orders(instances)
        assert [r.instance for r in rows] == [i.name for i in instances]
        for row in rows:
            assert row.verdict in ("equal", "strictly-less", "cap-exceeded")
