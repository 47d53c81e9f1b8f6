import random

import pytest

from cfinterval.graphs import SimpleGraph, intersection_graph
from cfinterval.hypergraph import IntervalHypergraph, all_interval_families, parse_hypergraph, random_hypergraph
from cfinterval.oracle import graph_canonical_form

H10_TEXT = "10 6\n1 5\n5 10\n2 3\n4 5\n6 7\n8 9\n"
# representative of each H10 interval, in file order
H10_T = {0: 5, 1: 9, 2: 3, 3: 5, 4: 7, 5: 9}

# vertices u, a, b, c, d, e numbered 1..6
U, A, B, C, D, E = 1, 2, 3, 4, 5, 6
HUB_EDGES = [(A, U), (A, D), (U, B), (U, C), (U, E), (U, D), (B, D), (B, E), (E, C)]


@pytest.fixture
def h10():
    return parse_hypergraph(H10_TEXT)


@pytest.fixture
def hub():
    return SimpleGraph(6, HUB_EDGES)


def star(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, [(1, k) for k in range(2, leaves + 2)])


def small_corpus(samples: int = 10_000, seed: int = 20240601):
    """Every set of intervals of 1..4, then random families with n <= 6, m <= 7."""
    out = list(all_interval_families(4))
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, 6)
        m = rng.randint(1, 7)
        out.append(random_hypergraph(rng, n, m))
    return out


def random_interval_graphs(samples: int, seed: int, max_vertices: int = 8):
    """Connected intersection graphs of random interval models, one per
    isomorphism class. Returns (number of connected models, graphs)."""
    rng = random.Random(seed)
    classes = {}
    connected = 0
    for _ in range(samples):
        n = rng.randint(1, max_vertices)
        span = rng.randint(2, 2 * n + 2)
        ivs = []
        for _ in range(n):
            a = rng.randint(1, span)
            ivs.append((a, min(span, a + rng.randint(0, span // 2))))
        g = intersection_graph(IntervalHypergraph(span, ivs))
        if not g.is_connected():
            continue
        connected += 1
        classes.setdefault(graph_canonical_form(g), g)
    return connected, list(classes.values())


_ACCEPTANCE: list = []


def record_acceptance(line: str):
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
