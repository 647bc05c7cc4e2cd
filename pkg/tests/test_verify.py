import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbow_cayley.cayley import LabeledGraph
from rainbow_cayley.circulant import CirculantSpec, color_circulant
from rainbow_cayley.coloring import EdgeColoring, color_cayley, cycle_edges
from rainbow_cayley.verify import (
    ColorCapExceeded,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    rainbow_path_exists,
    verify,
)

from conftest import cayley_units, naive_rainbow


def _around_cycle(G, pattern):
    ids = [0] * G.num_edges
    for pos, e in enumerate(cycle_edges(G, list(range(G.n)))):
        ids[e] = pattern[pos]
    return EdgeColoring.from_ids(G, ids)


def test_path_exists_examples(c6):
    col = color_cayley(c6)
    assert rainbow_path_exists(c6, col, 2, 2)
    assert rainbow_path_exists(c6, col, 0, 3)
    c4 = cayley_units(4)
    one = EdgeColoring.from_ids(c4, [0] * 4)
    assert not rainbow_path_exists(c4, one, 0, 2)


def test_connected_examples(q3):
    assert is_rainbow_connected(q3, color_cayley(q3)).ok
    rep = is_rainbow_connected(q3, EdgeColoring.from_ids(q3, [0] * 12))
    assert not rep.ok and rep.failing_pair is not None
    u, v = rep.failing_pair
    assert bin(u ^ v).count("1") >= 2
    g16 = color_circulant(CirculantSpec(1, 2, 4))
    assert is_rainbow_connected(g16.graph, g16).ok


def test_strong_examples():
    torus = cayley_units(4, 4)
    assert is_strong_rainbow_connected(torus, color_cayley(torus)).ok
    g9 = color_circulant(CirculantSpec(1, 3, 2))
    assert is_strong_rainbow_connected(g9.graph, g9).ok


def test_rainbow_but_not_strong():
    c5 = cayley_units(5)
    col = _around_cycle(c5, [0, 0, 1, 2, 0])  # cycle order 0-1-2-3-4-0
    assert is_rainbow_connected(c5, col).ok
    rep = is_strong_rainbow_connected(c5, col)
    assert not rep.ok and rep.failing_pair == (0, 2)


def test_c6_pattern_with_repeated_neighbors_fails():
    c6 = cayley_units(6)
    col = _around_cycle(c6, [0, 1, 2, 0, 2, 1])
    rep = is_rainbow_connected(c6, col)
    assert not rep.ok and rep.failing_pair == (2, 5)


def test_color_cap():
    G = LabeledGraph.from_edges(26, [(i, i + 1) for i in range(25)])
    col = EdgeColoring.from_ids(G, list(range(25)))
    with pytest.raises(ColorCapExceeded):
        is_rainbow_connected(G, col)


def test_report_json(q3):
    rep = verify(color_cayley(q3), "strong")
    obj = rep.to_json_obj()
    assert obj["ok"] is True and obj["failing_pair"] is None and obj["states_explored"] > 0
    with pytest.raises(ValueError):
        verify(color_cayley(q3), "weak")


def test_vertex_transitive_shortcut(q3):
    col = color_cayley(q3)
    full = is_strong_rainbow_connected(q3, col)
    quick = is_strong_rainbow_connected(q3, col, vertex_transitive=True, seed=3)
    assert full.ok and quick.ok and quick.pairs_checked < full.pairs_checked


def test_thread_env_gives_same_answer(monkeypatch):
    col = color_circulant(CirculantSpec(2, 5, 1))
    single = is_strong_rainbow_connected(col.graph, col)
    monkeypatch.setenv("RAINBOW_THREADS", "2")
    multi = is_strong_rainbow_connected(col.graph, col)
    assert (single.ok, single.failing_pair) == (multi.ok, multi.failing_pair)


def random_colored_graph(seed):
    rnd = random.Random(seed)
    n = rnd.randint(3, 8)
    H = nx.connected_watts_strogatz_graph(n, 2, 0.5, seed=seed) if n > 3 else nx.path_graph(n)
    extra = rnd.randint(0, 4)
    for _ in range(extra):
        u, v = rnd.sample(range(n), 2)
        H.add_edge(u, v)
    G = LabeledGraph.from_edges(n, sorted(tuple(sorted(e)) for e in H.edges()))
    k = rnd.randint(1, 4)
    return G, [rnd.randrange(k) for _ in range(G.num_edges)]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_agrees_with_path_enumeration(seed):
    G, ids = random_colored_graph(seed)
    col = EdgeColoring.from_ids(G, ids)
    rainbow = is_rainbow_connected(G, col).ok
    strong = is_strong_rainbow_connected(G, col).ok
    assert rainbow == naive_rainbow(G, ids)
    assert strong == naive_rainbow(G, ids, strong=True)
    assert not strong or rainbow


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 100))
def test_refining_a_color_class_keeps_validity(seed, pick):
    G, ids = random_colored_graph(seed)
    col = EdgeColoring.from_ids(G, ids)
    target = col.colors[pick % G.num_edges]
    fresh = max(col.colors) + 1
    members = [k for k, c in enumerate(col.colors) if c == target]
    refined = list(col.colors)
    for k in members[len(members) // 2:]:
        refined[k] = fresh
    finer = EdgeColoring.from_ids(G, refined)
    for check in (is_rainbow_connected, is_strong_rainbow_connected):
        if check(G, col).ok:
            assert check(G, finer).ok
