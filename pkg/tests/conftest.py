import itertools

import pytest

from rainbow_cayley.abelian_group import GeneratorSet, GroupSpec
from rainbow_cayley.cayley import build_cayley


def cayley_units(*moduli):
    group = GroupSpec(tuple(moduli))
    return build_cayley(group, GeneratorSet.units(group).closure())


def cayley_gens(moduli, gens):
    group = GroupSpec(tuple(moduli))
    return build_cayley(group, GeneratorSet.parse(group, gens).closure())


def simple_paths(G, u, v):
    """Every simple u-v path as a list of edge ids (plain DFS, no pruning)."""
    out = []

    def walk(x, seen, edges):
        if x == v:
            out.append(list(edges))
            return
        for w, e in G.adjacency[x]:
            if w not in seen:
                walk(w, seen | {w}, edges + [e])

    walk(u, {u}, [])
    return out


def naive_rainbow(G, colors, strong=False):
    """All-pairs rainbow check by enumerating simple paths."""
    from rainbow_cayley.cayley import bfs_distances

    for u in range(G.n):
        dist = bfs_distances(G, u)
        for v in range(u + 1, G.n):
            ok = False
            for p in simple_paths(G, u, v):
                if strong and len(p) != dist[v]:
                    continue
                cs = [colors[e] for e in p]
                if len(set(cs)) == len(cs):
                    ok = True
                    break
            if not ok:
                return False
    return True


def naive_rc(G, strong=False, max_k=6):
    """Smallest k such that some k^|E| coloring passes the naive check."""
    for k in range(1, max_k + 1):
        for colors in itertools.product(range(k), repeat=G.num_edges):
            if naive_rainbow(G, colors, strong):
                return k
    return None


@pytest.fixture
def q3():
    return cayley_units(2, 2, 2)


@pytest.fixture
def c6():
    return cayley_units(6)


# --- acceptance reporting -------------------------------------------------

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, title = marker.args
        _CRITERIA.append((number, title, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in sorted(_CRITERIA):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({duration:.1f}s)")
