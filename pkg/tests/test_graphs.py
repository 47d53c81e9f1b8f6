import random
from functools import lru_cache

import pytest

from conftest import HUB_EDGES, A, B, C, D, E, U, random_interval_graphs, star
from cfinterval.ehs import is_ehs, is_exact_hitting_set
from cfinterval.graphs import (
    NotIntervalGraph,
    SimpleGraph,
    build_canonical,
    check_forbidden_witness,
    consecutive_order,
    ehs_representation,
    find_forbidden,
    format_graph,
    intersection_graph,
    is_ehig,
    is_interval_graph,
    is_proper_interval_graph,
    maximal_clique_ordering,
    parse_graph,
    set_system_intersection_graph,
    set_system_is_exact,
)
from cfinterval.hypergraph import IntervalHypergraph, ParseError
from cfinterval.oracle import brute_clique_ordering, brute_maximal_cliques, graph_canonical_form


def path(k):
    return SimpleGraph(k, [(i, i + 1) for i in range(1, k)])


def cycle(k):
    return SimpleGraph(k, [(i, i % k + 1) for i in range(1, k + 1)])


def complete(k):
    return SimpleGraph(k, [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)])


@lru_cache(maxsize=1)
def corpus():
    return random_interval_graphs(4000, seed=31)[1]


def relabel(g, perm):
    return SimpleGraph(g.n, [(perm[u - 1], perm[v - 1]) for u, v in g.edges])


def test_graph_io_round_trip(hub):
    assert parse_graph(format_graph(hub)) == hub
    with pytest.raises(ParseError):
        parse_graph("3 1\n1 1")
    with pytest.raises(ParseError):
        parse_graph("3 1\n1 4")
    with pytest.raises(ParseError):
        parse_graph("3 2\n1 2")


def test_intersection_graph_examples():
    g = intersection_graph(IntervalHypergraph(5, [(1, 2), (2, 3), (4, 5)]))
    assert g.n == 3 and g.edges == {(1, 2)}
    claw_model = intersection_graph(IntervalHypergraph(5, [(2, 4), (1, 2), (3, 3), (4, 5)]))
    assert claw_model.edges == {(1, 2), (1, 3), (1, 4)}
    assert intersection_graph(IntervalHypergraph(1, [(1, 1)])) == SimpleGraph(1, [])


def test_claw_model_hitting_set():
    claw_model = IntervalHypergraph(5, [(2, 4), (1, 2), (3, 3), (4, 5)])
    assert is_exact_hitting_set(claw_model, {1, 3, 5})
    assert is_ehs(claw_model)[0]


def test_clique_ordering_examples(hub):
    order = maximal_clique_ordering(hub)
    assert order == [frozenset({U, A, D}), frozenset({U, B, D}), frozenset({U, B, E}), frozenset({U, C, E})]
    assert maximal_clique_ordering(complete(3)) == [frozenset({1, 2, 3})]
    with pytest.raises(NotIntervalGraph):
        maximal_clique_ordering(cycle(4))


def test_non_interval_chordal_graph():
    # three length-2 arms on a common centre: chordal, not interval
    arms = SimpleGraph(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
    with pytest.raises(NotIntervalGraph) as err:
        maximal_clique_ordering(arms)
    assert "consecutive" in err.value.reason


def test_canonical_hub_graph(hub):
    model = build_canonical(hub)
    h = model.hypergraph
    got = {v: tuple(h[model.vertex_interval[v]]) for v in hub.vertices}
    assert h.n == 11
    assert got == {A: (1, 3), D: (2, 5), U: (3, 9), B: (5, 7), E: (7, 10), C: (9, 11)}
    assert model.anchors == (3, 5, 7, 9)
    ok, points = is_ehs(h)
    assert ok and is_exact_hitting_set(h, points)
    # the hitting set drawn for this model is exact too
    assert is_exact_hitting_set(h, {2, 6, 10})


def test_canonical_small_cases():
    k1 = build_canonical(SimpleGraph(1, []))
    assert k1.hypergraph.m == 1 and len(k1.anchors) == 1
    claw = build_canonical(star(3))
    assert claw.hypergraph.m == 4
    assert intersection_graph(claw.hypergraph) == star(3)


def test_canonical_merges_twins():
    g = SimpleGraph(3, [(1, 2), (1, 3), (2, 3)])
    model = build_canonical(g)
    assert model.hypergraph.m == 1
    assert model.merged == {2: 1, 3: 1}


def test_anchor_lies_in_every_covering_interval():
    for g in corpus():
        model = build_canonical(g)
        for k, z in enumerate(model.anchors):
            clique = model.cliques[k]
            for v in clique:
                assert z in model.hypergraph[model.vertex_interval[v]]


def test_canonical_round_trip_on_corpus():
    for g in corpus():
        model = build_canonical(g)
        retained = sorted(v for v in g.vertices if v not in model.merged)
        assert graph_canonical_form(intersection_graph(model.hypergraph)) == graph_canonical_form(g.induced(retained))


def test_clique_ordering_matches_permutation_oracle():
    rng = random.Random(77)
    for _ in range(400):
        n = rng.randint(1, 7)
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.45]
        g = SimpleGraph(n, edges)
        if len(brute_maximal_cliques(g)) > 8:
            continue
        expected = brute_clique_ordering(g) is not None
        assert is_interval_graph(g) == expected
        if expected:
            order = maximal_clique_ordering(g)
            assert set(order) == set(brute_maximal_cliques(g))
            for v in g.vertices:
                idx = [k for k, c in enumerate(order) if v in c]
                assert idx[-1] - idx[0] == len(idx) - 1


def test_consecutive_order_simple():
    assert consecutive_order(3, [{0, 2}, {1, 2}]) in ([0, 2, 1], [1, 2, 0])
    assert consecutive_order(4, [{0, 1}, {0, 2}, {0, 3}]) is None


def test_is_ehig_examples(hub):
    claw = is_ehig(star(3))
    assert claw.verdict and is_exact_hitting_set(claw.model.hypergraph, claw.hitting_set)
    four = is_ehig(star(4))
    assert not four.verdict
    assert four.witness.path == (1,) and four.witness.independent == (2, 3, 4, 5)
    assert is_ehig(hub).verdict
    with pytest.raises(NotIntervalGraph):
        is_ehig(cycle(4))


def test_find_forbidden_examples():
    assert find_forbidden(star(4)).path == (1,)
    # induced path a-b with five independent neighbours c, d, u, e, f
    a, b, c, d, u, e, f = range(1, 8)
    g = SimpleGraph(7, [(a, b), (a, c), (a, d), (a, u), (b, u), (b, e), (b, f)])
    w = find_forbidden(g)
    assert w is not None and len(w.path) == 2 and len(w.independent) == 5
    assert check_forbidden_witness(g, w)
    assert find_forbidden(path(5)) is None


def test_witnesses_are_valid_on_corpus():
    for g in corpus():
        w = find_forbidden(g)
        if w is not None:
            assert check_forbidden_witness(g, w)


def test_verdict_ignores_vertex_labels():
    rng = random.Random(5)
    for g in corpus()[:200]:
        perm = list(range(1, g.n + 1))
        rng.shuffle(perm)
        assert is_ehig(relabel(g, perm)).verdict == is_ehig(g).verdict


def test_ehs_representation_examples():
    k3 = ehs_representation(complete(3))
    assert all(len(s) == 3 for s in k3.sets) and k3.hitting == {1, 2, 3}
    edgeless = ehs_representation(SimpleGraph(3, []))
    assert [len(s) for s in edgeless.sets] == [1, 1, 1]
    p3 = ehs_representation(path(3))
    assert p3.sets == (frozenset({1, (1, 2)}), frozenset({2, (1, 2), (2, 3)}), frozenset({3, (2, 3)}))


def test_ehs_representation_properties():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = SimpleGraph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4])
        rep = ehs_representation(g)
        assert set_system_is_exact(rep)
        assert set_system_intersection_graph(rep) == g


def test_proper_interval_examples():
    assert is_proper_interval_graph(path(4))
    assert not is_proper_interval_graph(star(3))
    assert not is_proper_interval_graph(cycle(4))
