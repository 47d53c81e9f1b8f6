"""Maximum conflict-free colourable subfamily with N colours, and the
conflict-free chromatic number, for interval hypergraphs.

Both run a left-to-right sweep over the points. For every colour the sweep
remembers its last two occurrences (s, t), s < t, 0 meaning "none yet". An
interval [l, r] is conflict-free at its right end r exactly when some
colour has s < l <= t, that is, occurs once in [l, r]. Only the relative
order of s and t with respect to left endpoints of intervals that are still
open matters, so each position is replaced by the largest open left
endpoint not exceeding it. Colours are interchangeable, so a state is the
sorted tuple of pairs. The number of states is polynomial in n for fixed N.
"""
from __future__ import annotations

from bisect import bisect_right
from typing import Mapping, NamedTuple

from .cooccurrence import (
    InfeasibleColouring,
    build_cooccurrence,
    clique_number,
    colour_graph,
    lift_colouring,
)
from .hypergraph import IntervalHypergraph, count_cf_intervals, unique_colours, verify_cf_colouring


class SubproblemKey(NamedTuple):
    a: int
    b: int
    tb: frozenset


class MaxCfcResult(NamedTuple):
    count: int
    witness: dict  # interval index -> representative point


class MinCfcResult(NamedTuple):
    k: int
    colouring: tuple


def canonicalize(h: IntervalHypergraph, t: Mapping[int, int], b: int | None = None) -> dict:
    """Move intervals onto the rightmost representative b where harmless.

    Let I1 be the interval represented by b with the smallest left endpoint.
    Every represented interval that contains b and starts no earlier than I1
    is reassigned to b. The co-occurrence graph loses no colourability by
    this: its edge set can only shrink or stay the same.
    """
    t = dict(t)
    if not t:
        return t
    if b is None:
        b = max(t.values())
    rep_b = [i for i, p in t.items() if p == b]
    if not rep_b:
        return t
    left = min(h[i].l for i in rep_b)
    for i in t:
        iv = h[i]
        if b in iv and iv.l >= left:
            t[i] = b
    return t


def beta(h: IntervalHypergraph, n_colours: int, key: SubproblemKey, sub_witness: Mapping[int, int]) -> frozenset:
    """Intervals that become unusable when T_b is represented by b on top of
    a solution of the subproblem ending at a.

    The combined assignment keeps sub_witness and sends every interval of
    T_b to b. An interval is returned when its part inside 1..b holds a
    clique of N + 1 representatives that includes b.
    """
    a, b, tb = key
    if not a < b:
        raise ValueError("need a < b")
    for i in tb:
        if b not in h[i]:
            raise ValueError(f"interval {i} of T_b does not contain b")
    t = {i: p for i, p in sub_witness.items() if p <= a}
    for i in tb:
        t[i] = b
    g = build_cooccurrence(h, t)
    out = set()
    for i in t:
        iv = h[i]
        if b not in iv:
            continue
        inside = {v for v in g.vertices if iv.l <= v <= b}
        cand = {v for v in inside if g.has_edge(v, b)}
        if 1 + _clique_size(g.adjacency, cand) >= n_colours + 1:
            out.add(i)
    return frozenset(out)


def _clique_size(adj, cand: set) -> int:
    best = 0

    def grow(size, cand):
        nonlocal best
        best = max(best, size)
        if size + len(cand) <= best:
            return
        for v in sorted(cand):
            grow(size + 1, cand & adj[v])
            cand = cand - {v}
            if size + len(cand) <= best:
                return

    grow(0, set(cand))
    return best


def _sweep(h: IntervalHypergraph, n_colours: int, lossless: bool):
    """Run the sweep; return (best value, colouring) or None if lossless and
    no colouring keeps every interval."""
    n = h.n
    ends: list[list[int]] = [[] for _ in range(n + 2)]
    for iv in h.intervals:
        ends[iv.r].append(iv.l)
    # open_lefts[p]: sorted distinct l of intervals with l <= p < r
    open_lefts: list[list[int]] = []
    for p in range(n + 1):
        open_lefts.append(sorted({iv.l for iv in h.intervals if iv.l <= p < iv.r}))

    def project(x: int, lefts: list[int]) -> int:
        k = bisect_right(lefts, x)
        return lefts[k - 1] if k else 0

    start = ((0, 0),) * n_colours
    layer = {start: 0}
    history = []  # per point: dict new_state -> (old_state, chosen pair or None)
    for p in range(1, n + 1):
        lefts = open_lefts[p]
        nxt: dict = {}
        back: dict = {}
        for state, value in layer.items():
            options = [None] + sorted(set(state))
            for choice in options:
                pairs = list(state)
                if choice is not None:
                    k = pairs.index(choice)
                    pairs[k] = (choice[1], p)
                gained = 0
                rejected = False
                for l in ends[p]:
                    if any(s < l <= t for s, t in pairs):
                        gained += 1
                    else:
                        rejected = True
                if lossless and rejected:
                    continue
                key = tuple(sorted((project(s, lefts), project(t, lefts)) for s, t in pairs))
                total = value + gained
                if key not in nxt or total > nxt[key]:
                    nxt[key] = total
                    back[key] = (state, choice)
        history.append(back)
        layer = nxt
        if not layer:
            return None
    final = max(layer, key=lambda s: (layer[s], s))
    value = layer[final]

    # walk back to the sequence of choices, then replay with concrete labels
    choices = []
    state = final
    for back in reversed(history):
        state, choice = back[state]
        choices.append(choice)
    choices.reverse()

    slots = [[j + 1, (0, 0)] for j in range(n_colours)]
    colouring = []
    for p, choice in enumerate(choices, start=1):
        if choice is None:
            colouring.append(0)
        else:
            slot = next(sl for sl in slots if sl[1] == choice)
            colouring.append(slot[0])
            slot[1] = (choice[1], p)
        lefts = open_lefts[p]
        for sl in slots:
            sl[1] = (project(sl[1][0], lefts), project(sl[1][1], lefts))
    return value, tuple(colouring)


def _witness_from_colouring(h: IntervalHypergraph, colouring) -> dict:
    """Represent every conflict-free interval by the point carrying its
    smallest unique colour."""
    t = {}
    for i, iv in enumerate(h.intervals):
        unique = unique_colours(colouring, iv)
        if unique:
            c = unique[0]
            t[i] = next(p for p in range(iv.l, iv.r + 1) if colouring[p - 1] == c)
    return t


def max_cfc_colouring(h: IntervalHypergraph, n_colours: int) -> tuple:
    """(count, colouring): a colouring with at most N colours that is
    conflict-free on as many intervals as possible."""
    if n_colours < 0:
        raise ValueError("number of colours must be non-negative")
    if n_colours == 0 or h.m == 0:
        return 0, (0,) * h.n
    value, colouring = _sweep(h, n_colours, lossless=False)
    if count_cf_intervals(h, colouring) != value:
        raise AssertionError("sweep value and replayed colouring disagree")
    return value, colouring


def max_cfc(h: IntervalHypergraph, n_colours: int) -> MaxCfcResult:
    """Largest number of intervals that some N-colouring makes conflict-free.

    The witness maps each of those intervals to a representative point; its
    co-occurrence graph has clique number at most N.
    """
    value, colouring = max_cfc_colouring(h, n_colours)
    t = _witness_from_colouring(h, colouring)
    if t:
        t = canonicalize(h, t)
    if len(t) != value:
        raise AssertionError("witness size differs from optimum")
    if t and clique_number(build_cooccurrence(h, t), h) > n_colours:
        raise AssertionError("witness co-occurrence graph has a clique larger than N")
    return MaxCfcResult(value, t)


def min_cfc(h: IntervalHypergraph) -> MinCfcResult:
    """Conflict-free chromatic number and a colouring achieving it.

    The colouring is obtained by colouring the witness's co-occurrence graph
    with k colours and giving every representative its graph colour.
    """
    if h.m == 0:
        return MinCfcResult(0, (0,) * h.n)
    k = 1
    while True:
        found = _sweep(h, k, lossless=True)
        if found is not None:
            break
        k += 1
    _, colouring = found
    t = _witness_from_colouring(h, colouring)
    g = build_cooccurrence(h, t)
    try:
        graph_colouring = colour_graph(g, k)
    except InfeasibleColouring:
        raise AssertionError("witness graph not k-colourable") from None
    lifted = lift_colouring(h, g, graph_colouring)
    if not verify_cf_colouring(h, lifted):
        raise AssertionError("lifted colouring is not conflict-free")
    return MinCfcResult(k, lifted)
