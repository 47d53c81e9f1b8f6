"""Co-occurrence graphs of representative functions and their colourings.

A representative function t maps interval indices to points with t(I) in I.
Its co-occurrence graph has the image of t as vertex set and an edge uv
whenever some interval of the domain contains both u and v and is itself
represented by u or by v. A proper colouring of that graph lifts to a
conflict-free colouring of the represented intervals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .hypergraph import IntervalHypergraph

Representatives = Mapping[int, int]


class InfeasibleColouring(ValueError):
    """No proper colouring within the requested number of colours."""


@dataclass(frozen=True)
class CoOccurrenceGraph:
    vertices: frozenset
    edges: frozenset  # pairs (u, v) with u < v
    adjacency: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            if u not in adj or v not in adj or u == v:
                raise ValueError(f"bad edge {(u, v)}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", {v: frozenset(s) for v, s in adj.items()})

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())


def _edge(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


def build_cooccurrence(h: IntervalHypergraph, t: Representatives) -> CoOccurrenceGraph:
    reps = set()
    for i, p in t.items():
        if not 0 <= i < h.m:
            raise ValueError(f"representative given for unknown interval {i}")
        if p not in h[i]:
            raise ValueError(f"representative {p} of interval {i} = {h[i]} lies outside it")
        reps.add(p)
    edges = set()
    for i, p in t.items():
        iv = h[i]
        for q in reps:
            if q != p and q in iv:
                edges.add(_edge(p, q))
    return CoOccurrenceGraph(frozenset(reps), frozenset(edges))


def _max_clique_in(adj: Mapping[int, frozenset], candidates: set) -> list:
    best: list = []

    def grow(clique: list, cand: set):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        if len(clique) + len(cand) <= len(best):
            return
        for v in sorted(cand):
            if len(clique) + len(cand) <= len(best):
                return
            clique.append(v)
            grow(clique, cand & adj[v])
            clique.pop()
            cand = cand - {v}

    grow([], set(candidates))
    return best


def max_clique(g: CoOccurrenceGraph, h: IntervalHypergraph) -> list:
    """A maximum clique of g, found interval by interval.

    Every clique of a co-occurrence graph lies inside a single interval of
    the domain (the one joining its two extreme vertices), so searching the
    vertices inside each interval separately finds the optimum.
    """
    best: list = []
    seen = set()
    for iv in h.intervals:
        inside = frozenset(v for v in g.vertices if v in iv)
        if len(inside) <= len(best) or inside in seen:
            continue
        seen.add(inside)
        found = _max_clique_in(g.adjacency, set(inside))
        if len(found) > len(best):
            best = found
    return sorted(best)


def clique_number(g: CoOccurrenceGraph, h: IntervalHypergraph) -> int:
    return len(max_clique(g, h))


def colour_graph(g: CoOccurrenceGraph, bound: int) -> dict:
    """Proper colouring with colours 1..bound, by DSATUR-ordered backtracking.

    Ties are broken by the lowest vertex. Raises InfeasibleColouring when no
    colouring within bound exists.
    """
    adj = g.adjacency
    colour: dict = {}
    order_key = sorted(g.vertices)

    def pick():
        best, best_key = None, None
        for v in order_key:
            if v in colour:
                continue
            sat = len({colour[u] for u in adj[v] if u in colour})
            key = (-sat, -len(adj[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def solve() -> bool:
        v = pick()
        if v is None:
            return True
        used = {colour[u] for u in adj[v] if u in colour}
        highest = max(colour.values(), default=0)
        # colours above highest + 1 are interchangeable with highest + 1
        for c in range(1, min(bound, highest + 1) + 1):
            if c in used:
                continue
            colour[v] = c
            if solve():
                return True
            del colour[v]
        return False

    if not solve():
        raise InfeasibleColouring(f"graph is not {bound}-colourable")
    return dict(colour)


def chromatic_number(g: CoOccurrenceGraph, h: IntervalHypergraph | None = None) -> int:
    if not g.vertices:
        return 0
    k = clique_number(g, h) if h is not None else 1
    while True:
        try:
            colour_graph(g, k)
            return k
        except InfeasibleColouring:
            k += 1


def lift_colouring(h: IntervalHypergraph, g: CoOccurrenceGraph, graph_colouring: Mapping[int, int]) -> tuple:
    """Point colouring: representatives take their graph colour, others 0."""
    for u, v in g.edges:
        if graph_colouring.get(u) == graph_colouring.get(v):
            raise ValueError(f"graph colouring is not proper on edge {(u, v)}")
    out = [0] * h.n
    for v in g.vertices:
        c = graph_colouring[v]
        if c <= 0:
            raise ValueError(f"vertex {v} has non-positive colour {c}")
        out[v - 1] = c
    return tuple(out)


def _is_cycle(adj: Mapping[int, frozenset], nodes: tuple, complement: bool) -> bool:
    node_set = set(nodes)
    k = len(nodes)

    def nbrs(v):
        inside = adj[v] & node_set
        return (node_set - inside - {v}) if complement else inside

    if any(len(nbrs(v)) != 2 for v in nodes):
        return False
    # 2-regular: a single cycle iff connected
    start = nodes[0]
    seen = {start}
    stack = [start]
    while stack:
        for u in nbrs(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == k


def find_odd_hole_or_antihole(g: CoOccurrenceGraph, max_size: int) -> tuple | None:
    """An induced odd cycle of length 5..max_size, in g or in its complement.

    Returns (kind, vertices) with kind "hole" or "antihole", or None.
    """
    vertices = sorted(g.vertices)
    for k in range(5, max_size + 1, 2):
        for nodes in combinations(vertices, k):
            if _is_cycle(g.adjacency, nodes, complement=False):
                return "hole", nodes
            if _is_cycle(g.adjacency, nodes, complement=True):
                return "antihole", nodes
    return None


def scan_perfectness(g: CoOccurrenceGraph, max_hole: int) -> bool:
    """True when g has no odd hole or odd antihole on at most max_hole vertices."""
    return find_odd_hole_or_antihole(g, max_hole) is None
