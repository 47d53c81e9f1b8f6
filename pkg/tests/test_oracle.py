import random
from itertools import combinations, product

import pytest

from cfinterval.hypergraph import IntervalHypergraph, count_cf_intervals, discrete_hypergraph, random_hypergraph, verify_cf_colouring
from cfinterval.oracle import (
    OracleScaleExceeded,
    brute_cfc_number,
    brute_exact_hitting_set,
    brute_max_cfc,
    brute_min_eh_partition,
    brute_min_over_cooccurrence,
    graph_canonical_form,
)
from cfinterval.graphs import SimpleGraph

CHAIN = IntervalHypergraph(4, [(1, 2), (2, 3), (3, 4)])


def plain_cfc_number(h):
    """Definition check over every colouring, no symmetry pruning."""
    k = 0
    while True:
        if any(verify_cf_colouring(h, c) for c in product(range(k + 1), repeat=h.n)):
            return k
        k += 1


def test_cfc_number_examples(h10):
    assert brute_cfc_number(h10) == 2
    assert brute_cfc_number(discrete_hypergraph(3)) == 2
    assert brute_cfc_number(CHAIN) == 1
    assert brute_cfc_number(IntervalHypergraph(3, [])) == 0


def test_exact_hitting_set_examples(h10):
    assert brute_exact_hitting_set(h10) is None
    assert brute_exact_hitting_set(IntervalHypergraph(3, [(1, 3), (2, 2)])) == {2}
    assert brute_exact_hitting_set(IntervalHypergraph(3, [])) == frozenset()


def test_max_cfc_examples(h10):
    assert brute_max_cfc(h10, 1) == 4
    assert brute_max_cfc(h10, 2) == 6
    assert brute_max_cfc(discrete_hypergraph(3), 1) == 4


def test_min_over_cooccurrence_examples(h10):
    assert brute_min_over_cooccurrence(h10) == 2
    assert brute_min_over_cooccurrence(IntervalHypergraph(1, [(1, 1)])) == 1
    assert brute_min_over_cooccurrence(CHAIN) == 1


def test_min_eh_partition_examples(h10):
    assert brute_min_eh_partition(h10) == 2
    assert brute_min_eh_partition(CHAIN) == 1
    assert brute_min_eh_partition(discrete_hypergraph(3)) == 2


def test_symmetry_pruning_changes_nothing():
    rng = random.Random(1)
    for _ in range(150):
        h = random_hypergraph(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert brute_cfc_number(h) == plain_cfc_number(h)
        for n_colours in (1, 2):
            plain = max(count_cf_intervals(h, c) for c in product(range(n_colours + 1), repeat=h.n))
            assert brute_max_cfc(h, n_colours) == plain


def test_max_cfc_is_largest_colourable_subfamily():
    rng = random.Random(2)
    for _ in range(60):
        h = random_hypergraph(rng, rng.randint(1, 5), rng.randint(1, 6))
        for n_colours in (1, 2):
            best = max(
                size
                for size in range(h.m + 1)
                for s in combinations(range(h.m), size)
                if brute_cfc_number(h.subfamily(s)) <= n_colours
            )
            assert brute_max_cfc(h, n_colours) == best


def test_four_way_agreement_wider_points():
    rng = random.Random(3)
    for _ in range(150):
        h = random_hypergraph(rng, rng.randint(6, 8), rng.randint(1, 7))
        k = brute_cfc_number(h)
        assert brute_min_over_cooccurrence(h) == k
        assert brute_min_eh_partition(h) == k
        assert (brute_exact_hitting_set(h) is not None) == (k <= 1)


def test_scale_guards():
    big = IntervalHypergraph(30, [(1, 30)])
    with pytest.raises(OracleScaleExceeded, match="oracle scale exceeded"):
        brute_exact_hitting_set(big)
    with pytest.raises(OracleScaleExceeded):
        brute_max_cfc(big, 2)
    with pytest.raises(OracleScaleExceeded):
        brute_min_eh_partition(IntervalHypergraph(2, [(1, 1)] * 13))
    with pytest.raises(OracleScaleExceeded):
        graph_canonical_form(SimpleGraph(9, []))


def test_canonical_form_is_label_invariant():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 7)
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4]
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        g = SimpleGraph(n, edges)
        h = SimpleGraph(n, [(perm[u - 1], perm[v - 1]) for u, v in edges])
        assert graph_canonical_form(g) == graph_canonical_form(h)
    path = SimpleGraph(4, [(1, 2), (2, 3), (3, 4)])
    star = SimpleGraph(4, [(1, 2), (1, 3), (1, 4)])
    assert graph_canonical_form(path) != graph_canonical_form(star)
