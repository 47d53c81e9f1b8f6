"""Brute-force reference implementations for small instances.

Each function enumerates its search space directly and shares no code with
the fast algorithms it is used to check. Inputs beyond a fixed size raise
OracleScaleExceeded instead of running for hours.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .hypergraph import IntervalHypergraph

MAX_COLOURINGS = 5_000_000
MAX_POINTS_SUBSETS = 22
MAX_PARTITION_INTERVALS = 12
MAX_REP_STATES = 200_000
MAX_PERMUTED_CLIQUES = 8
MAX_CANONICAL_VERTICES = 8


class OracleScaleExceeded(RuntimeError):
    """Instance too large for exhaustive search."""

    def __init__(self, what: str):
        super().__init__(f"oracle scale exceeded: {what}")


# --- colourings -------------------------------------------------------------


@lru_cache(maxsize=64)
def _colouring_table(n: int, k: int) -> np.ndarray:
    """Every colouring of n points with colours 0..k in which non-zero colours
    first appear in increasing order (one per class of colour renamings)."""
    if (k + 1) ** n > MAX_COLOURINGS:
        raise OracleScaleExceeded(f"{k + 1}^{n} colourings")
    rows = []

    def rec(prefix: list, highest: int):
        if len(prefix) == n:
            rows.append(list(prefix))
            return
        for c in range(0, min(k, highest + 1) + 1):
            prefix.append(c)
            rec(prefix, max(highest, c))
            prefix.pop()

    rec([], 0)
    table = np.array(rows, dtype=np.int8).reshape(len(rows), n)
    table.setflags(write=False)
    return table


def _cf_matrix(h: IntervalHypergraph, table: np.ndarray, k: int) -> np.ndarray:
    """Boolean matrix [colouring, interval]: interval has a unique colour."""
    out = np.zeros((table.shape[0], h.m), dtype=bool)
    for i, iv in enumerate(h.intervals):
        window = table[:, iv.l - 1 : iv.r]
        for c in range(1, k + 1):
            out[:, i] |= (window == c).sum(axis=1) == 1
    return out


def brute_cfc_number(h: IntervalHypergraph) -> int:
    """Fewest colours of a conflict-free colouring, by trying k = 0, 1, ..."""
    if h.m == 0:
        return 0
    k = 1
    while True:
        table = _colouring_table(h.n, k)
        if _cf_matrix(h, table, k).all(axis=1).any():
            return k
        k += 1


def brute_max_cfc(h: IntervalHypergraph, n_colours: int) -> int:
    """Most intervals made conflict-free by a single N-colouring."""
    if h.m == 0 or n_colours == 0:
        return 0
    table = _colouring_table(h.n, n_colours)
    return int(_cf_matrix(h, table, n_colours).sum(axis=1).max())


# --- exact hitting sets -----------------------------------------------------


def _hit_once_masks(h: IntervalHypergraph) -> np.ndarray:
    """For every subset s of points (bit p-1 for point p), the bitmask of
    intervals that s hits exactly once."""
    if h.n > MAX_POINTS_SUBSETS:
        raise OracleScaleExceeded(f"2^{h.n} point subsets")
    subsets = np.arange(1 << h.n, dtype=np.int64)
    out = np.zeros_like(subsets)
    for i, iv in enumerate(h.intervals):
        mask = ((1 << (iv.r - iv.l + 1)) - 1) << (iv.l - 1)
        once = np.bitwise_count(subsets & mask) == 1
        out |= once.astype(np.int64) << i
    return out


def brute_exact_hitting_set(h: IntervalHypergraph) -> frozenset | None:
    """Some point set meeting every interval exactly once (smallest bitmask
    first), or None."""
    full = (1 << h.m) - 1
    masks = _hit_once_masks(h)
    hits = np.flatnonzero(masks == full)
    if hits.size == 0:
        return None
    s = int(hits[0])
    return frozenset(p for p in range(1, h.n + 1) if s >> (p - 1) & 1)


def brute_min_eh_partition(h: IntervalHypergraph) -> int:
    """Fewest parts in a partition of the intervals into exactly hittable
    families."""
    m = h.m
    if m == 0:
        return 0
    if m > MAX_PARTITION_INTERVALS:
        raise OracleScaleExceeded(f"partitions of {m} intervals")
    goods = {int(g) for g in np.unique(_hit_once_masks(h))}
    hittable = [False] * (1 << m)
    for g in goods:
        sub = g
        while True:
            hittable[sub] = True
            if sub == 0:
                break
            sub = (sub - 1) & g
    best = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        rest = s ^ low
        value = m + 1
        # every part containing the lowest interval of s
        sub = rest
        while True:
            part = sub | low
            if hittable[part]:
                value = min(value, 1 + best[s ^ part])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = value
    return best[(1 << m) - 1]


# --- co-occurrence graphs ---------------------------------------------------


def _brute_chromatic(vertices: tuple, edges: frozenset) -> int:
    if not vertices:
        return 0
    nbrs = {v: set() for v in vertices}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    for k in range(1, len(vertices) + 1):
        colour: dict = {}

        def place(i: int) -> bool:
            if i == len(vertices):
                return True
            v = vertices[i]
            for c in range(k):
                if all(colour.get(u) != c for u in nbrs[v]):
                    colour[v] = c
                    if place(i + 1):
                        return True
                    del colour[v]
            return False

        if place(0):
            return k
    return len(vertices)


def brute_min_over_cooccurrence(h: IntervalHypergraph) -> int:
    """Minimum chromatic number of the co-occurrence graph over all
    representative functions on all of H.

    The graph of t depends only on, for every used point p, the hull of the
    intervals sent to p: u and v are adjacent iff one lies in the other's
    hull. Assignments are enumerated interval by interval, merging those
    with equal hulls.
    """
    if h.m == 0:
        return 0
    states = {frozenset()}
    for iv in h.intervals:
        nxt = set()
        for state in states:
            hull = {p: (a, b) for p, a, b in state}
            for p in range(iv.l, iv.r + 1):
                a, b = hull.get(p, (iv.l, iv.r))
                new = dict(hull)
                new[p] = (min(a, iv.l), max(b, iv.r))
                nxt.add(frozenset((q, x, y) for q, (x, y) in new.items()))
        states = nxt
        if len(states) > MAX_REP_STATES:
            raise OracleScaleExceeded(f"more than {MAX_REP_STATES} representative states")
    seen: dict = {}
    best = None
    for state in states:
        reps = tuple(sorted(p for p, _, _ in state))
        edges = set()
        for p, a, b in state:
            for q in reps:
                if q != p and a <= q <= b:
                    edges.add((min(p, q), max(p, q)))
        key = (reps, frozenset(edges))
        if key not in seen:
            seen[key] = _brute_chromatic(reps, key[1])
        if best is None or seen[key] < best:
            best = seen[key]
    return best


# --- graphs -----------------------------------------------------------------


def _graph_parts(g):
    return list(g.vertices), {frozenset(e) for e in g.edges}


def brute_maximal_cliques(g) -> list:
    vertices, edges = _graph_parts(g)
    cliques = []
    for size in range(len(vertices), 0, -1):
        for c in combinations(vertices, size):
            if all(frozenset(p) in edges for p in combinations(c, 2)):
                cs = frozenset(c)
                if not any(cs < d for d in cliques):
                    cliques.append(cs)
    return cliques


def brute_clique_ordering(g) -> list | None:
    """A consecutive ordering of maximal cliques found by trying every
    permutation, or None if the graph is not an interval graph."""
    cliques = brute_maximal_cliques(g)
    if len(cliques) > MAX_PERMUTED_CLIQUES:
        raise OracleScaleExceeded(f"{len(cliques)}! clique orderings")
    for perm in permutations(cliques):
        if all(_consecutive([v in c for c in perm]) for v in g.vertices):
            return list(perm)
    return None


def _consecutive(flags: list) -> bool:
    idx = [k for k, f in enumerate(flags) if f]
    return not idx or idx[-1] - idx[0] == len(idx) - 1


def graph_canonical_form(g) -> tuple:
    """Isomorphism-invariant key for graphs on at most 8 vertices.

    Vertices are split by degree, refined by neighbour degrees until
    stable; the key is the smallest adjacency string over all orderings that
    list the classes in a fixed order.
    """
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise OracleScaleExceeded(f"canonical form of a graph on {n} vertices")
    adj = g.adjacency
    label = {v: 0 for v in g.vertices}
    while True:
        sig = {v: (label[v], tuple(sorted(label[u] for u in adj[v]))) for v in g.vertices}
        names = {s: k for k, s in enumerate(sorted(set(sig.values())))}
        new = {v: names[sig[v]] for v in g.vertices}
        if len(set(new.values())) == len(set(label.values())):
            label = new
            break
        label = new
    classes = [sorted(v for v in g.vertices if label[v] == k) for k in range(max(label.values(), default=-1) + 1)]
    best = None
    for choice in product(*(permutations(c) for c in classes)):
        order = [v for block in choice for v in block]
        bits = tuple(int(order[j] in adj[order[i]]) for i in range(n) for j in range(i + 1, n))
        if best is None or bits < best:
            best = bits
    class_sizes = tuple(len(c) for c in classes)
    return n, class_sizes, best
