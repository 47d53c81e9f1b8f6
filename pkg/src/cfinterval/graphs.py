"""Interval graphs, their canonical interval models, and recognition of
exactly hittable interval graphs (EHIGs).

A graph is an EHIG when it is the intersection graph of some interval
family that has an exact hitting set. Every interval graph has a canonical
model built from a consecutive ordering of its maximal cliques; the graph
is an EHIG exactly when that canonical model has an exact hitting set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple

from .ehs import is_ehs, is_exact_hitting_set
from .hypergraph import IntervalHypergraph, ParseError, _content_lines, _ints


class NotIntervalGraph(ValueError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"not an interval graph ({reason})")


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 1..n."""

    n: int
    edges: frozenset
    adjacency: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, n: int, edges: Iterable = ()):
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {(u, v)} has an endpoint outside 1..{n}")
            norm.add((min(u, v), max(u, v)))
        adj = {v: set() for v in range(1, n + 1)}
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adjacency", {v: frozenset(s) for v, s in adj.items()})

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def induced(self, keep: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph, vertices renumbered 1.. in increasing order."""
        keep = sorted(set(keep))
        index = {v: k for k, v in enumerate(keep, start=1)}
        return SimpleGraph(len(keep), [(index[u], index[v]) for u, v in self.edges if u in index and v in index])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {1}
        stack = [1]
        while stack:
            for u in self.adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n


def parse_graph(text: str) -> SimpleGraph:
    """Parse ``n m`` followed by m lines ``u v`` (1-based vertices)."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input: expected header 'n m'", 1)
    number, header = lines[0]
    n, m = _ints(header, number, 2)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", number)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", body[m][0] if len(body) > m else number)
    edges = []
    for number, line in body:
        u, v = _ints(line, number, 2)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u},{v}) has an endpoint outside 1..{n}", number)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", number)
        edges.append((u, v))
    return SimpleGraph(n, edges)


def format_graph(g: SimpleGraph) -> str:
    out = [f"{g.n} {len(g.edges)}"]
    out.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(out) + "\n"


def intersection_graph(h: IntervalHypergraph) -> SimpleGraph:
    """Vertex i + 1 stands for interval i."""
    ivs = h.intervals
    edges = [(i + 1, j + 1) for i, j in combinations(range(len(ivs)), 2) if ivs[i].l <= ivs[j].r and ivs[j].l <= ivs[i].r]
    return SimpleGraph(len(ivs), edges)


# --- chordality and maximal cliques -------------------------------------


def perfect_elimination_order(g: SimpleGraph) -> list | None:
    """A perfect elimination ordering, or None if g is not chordal.

    Maximum cardinality search visits vertices in the reverse of such an
    ordering whenever one exists.
    """
    weight = {v: 0 for v in g.vertices}
    visited: list[int] = []
    done = set()
    for _ in range(g.n):
        v = max((u for u in g.vertices if u not in done), key=lambda u: (weight[u], -u))
        visited.append(v)
        done.add(v)
        for u in g.adjacency[v]:
            if u not in done:
                weight[u] += 1
    order = visited[::-1]
    position = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adjacency[v] if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        if any(u != parent and u not in g.adjacency[parent] for u in later):
            return None
    return order


def maximal_cliques_chordal(g: SimpleGraph, order: list) -> list:
    position = {v: k for k, v in enumerate(order)}
    candidates = {frozenset([v, *[u for u in g.adjacency[v] if position[u] > position[v]]]) for v in order}
    cliques = [c for c in candidates if not any(c < d for d in candidates)]
    return sorted(cliques, key=lambda c: sorted(c))


# --- consecutive arrangement of sets -------------------------------------


class _PNode:
    """Children in any order."""

    def __init__(self, children):
        self.children = list(children)


class _QNode:
    """Children in this order or its reverse."""

    def __init__(self, children):
        self.children = list(children)


def _overlap(a: frozenset, b: frozenset) -> bool:
    return bool(a & b) and not a <= b and not b <= a


def _arrange_component(sets: list) -> list | None:
    """Blocks of a family whose overlap graph is connected, in the order
    (unique up to reversal) in which every set is a run of blocks."""
    order = [sets[0]]
    pending = list(sets[1:])
    while pending:
        nxt = next(s for s in pending if any(_overlap(s, t) for t in order))
        pending.remove(nxt)
        order.append(nxt)

    blocks = [set(order[0])]
    union = set(order[0])
    for s in order[1:]:
        touched = [k for k, b in enumerate(blocks) if b & s]
        outside = set(s) - union
        i0, i1 = touched[0], touched[-1]
        if touched != list(range(i0, i1 + 1)):
            return None
        if any(not blocks[k] <= s for k in range(i0 + 1, i1)):
            return None
        last = len(blocks) - 1
        first_b, last_b = blocks[i0], blocks[i1]
        if outside:
            if i0 == i1 and i1 == last:
                new = blocks[:i0] + [first_b - s, first_b & s, outside]
            elif i0 == i1 and i0 == 0:
                new = [outside, first_b & s, first_b - s] + blocks[1:]
            elif i0 < i1 and i1 == last and last_b <= s:
                new = blocks[:i0] + [first_b - s, first_b & s] + blocks[i0 + 1 :] + [outside]
            elif i0 < i1 and i0 == 0 and first_b <= s:
                new = [outside] + blocks[:i1] + [last_b & s, last_b - s] + blocks[i1 + 1 :]
            else:
                return None
        else:
            if i0 == i1:
                return None
            new = blocks[:i0] + [first_b - s, first_b & s] + blocks[i0 + 1 : i1] + [last_b & s, last_b - s] + blocks[i1 + 1 :]
        blocks = [b for b in new if b]
        union |= s
    return blocks


def consecutive_order(size: int, sets: Iterable[frozenset]) -> list | None:
    """Order 0..size-1 so that every given set is consecutive, or None.

    Sets are grouped into overlap components; each component fixes the
    order of its blocks up to reversal, and the components nest inside
    single blocks of one another, giving a PQ-tree that is read off left to
    right.
    """
    sets = [frozenset(s) for s in sets]
    family = sorted({s for s in sets if 1 < len(s) < size}, key=lambda s: (-len(s), sorted(s)))
    parent = list(range(len(family)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(len(family)), 2):
        if _overlap(family[i], family[j]):
            parent[find(i)] = find(j)
    groups: dict = {}
    for i, s in enumerate(family):
        groups.setdefault(find(i), []).append(s)
    components = list(groups.values())
    # outer components first; a lone set equal to another component's union
    # encloses it
    components.sort(key=lambda c: (-len(frozenset().union(*c)), len(c) > 1, sorted(frozenset().union(*c))))

    root = _PNode(range(size))
    container = {e: root for e in range(size)}
    for comp in components:
        union = frozenset().union(*comp)
        holders = {id(container[e]) for e in union}
        if len(holders) != 1:
            return None
        holder = container[next(iter(union))]
        holder.children = [c for c in holder.children if not (isinstance(c, int) and c in union)]
        if len(comp) == 1:
            node = _PNode(sorted(union))
            for e in union:
                container[e] = node
        else:
            blocks = _arrange_component(comp)
            if blocks is None:
                return None
            parts = []
            for b in blocks:
                part = _PNode(sorted(b))
                for e in b:
                    container[e] = part
                parts.append(part)
            node = _QNode(parts)
        holder.children.append(node)

    def flatten(node) -> list:
        if isinstance(node, int):
            return [node]
        pieces = [flatten(c) for c in node.children]
        if isinstance(node, _PNode):
            pieces.sort(key=min)
        elif pieces and min(pieces[-1]) < min(pieces[0]):
            pieces.reverse()
        return [e for piece in pieces for e in piece]

    result = flatten(root)
    position = {e: k for k, e in enumerate(result)}
    for s in sets:
        if s:
            ks = sorted(position[e] for e in s)
            if ks[-1] - ks[0] != len(ks) - 1:
                return None
    return result


def maximal_clique_ordering(g: SimpleGraph) -> list:
    """Maximal cliques in an order where every vertex lies in consecutive
    cliques. Raises NotIntervalGraph when none exists."""
    order = perfect_elimination_order(g)
    if order is None:
        raise NotIntervalGraph("not chordal")
    cliques = maximal_cliques_chordal(g, order)
    member = [frozenset(k for k, c in enumerate(cliques) if v in c) for v in g.vertices]
    arrangement = consecutive_order(len(cliques), member)
    if arrangement is None:
        raise NotIntervalGraph("no consecutive arrangement of maximal cliques")
    ordered = [cliques[k] for k in arrangement]
    key = [tuple(sorted(c)) for c in ordered]
    if key[::-1] < key:
        ordered.reverse()
    return ordered


def is_interval_graph(g: SimpleGraph) -> bool:
    try:
        maximal_clique_ordering(g)
    except NotIntervalGraph:
        return False
    return True


# --- canonical model ------------------------------------------------------


@dataclass(frozen=True)
class CanonicalModel:
    hypergraph: IntervalHypergraph
    vertex_interval: dict  # every vertex -> index of its interval
    anchors: tuple  # anchors[i - 1] = point z_i of clique i
    gadget_spans: tuple  # (first point, last point) per clique
    merged: dict  # dropped vertex -> vertex with the same cliques
    cliques: tuple


def build_canonical(g: SimpleGraph) -> CanonicalModel:
    """Interval model with one stretch of points ("gadget") per maximal clique.

    In the gadget of clique i, the vertices whose first clique is i start at
    distinct points, longer reach starting further left, and the vertices
    whose last clique is i end at distinct points, earlier start ending
    further left. The gadget's anchor z_i lies in all of them. Gadgets are
    separated by one spare point. Vertices with identical clique sets share
    one interval.
    """
    cliques = maximal_clique_ordering(g)
    span = {}
    for v in g.vertices:
        ks = [k for k, c in enumerate(cliques, start=1) if v in c]
        span[v] = (ks[0], ks[-1])
    keep: dict = {}
    merged: dict = {}
    for v in g.vertices:
        if span[v] in keep:
            merged[v] = keep[span[v]]
        else:
            keep[span[v]] = v
    retained = sorted(keep.values())

    left_at: dict = {}
    right_at: dict = {}
    for k in range(1, len(cliques) + 1):
        starters = sorted((v for v in retained if span[v][0] == k), key=lambda v: -span[v][1])
        enders = sorted((v for v in retained if span[v][1] == k), key=lambda v: span[v][0])
        left_at[k] = starters
        right_at[k] = enders

    anchors = []
    spans = []
    left = {}
    right = {}
    base = 1
    for k in range(1, len(cliques) + 1):
        z = base + max(len(left_at[k]), 1) - 1
        for off, v in enumerate(left_at[k]):
            left[v] = z - off
        for off, v in enumerate(right_at[k]):
            right[v] = z + off
        end = z + max(len(right_at[k]), 1) - 1
        anchors.append(z)
        spans.append((base, end))
        base = end + 2
    n_points = spans[-1][1] if spans else 0

    h = IntervalHypergraph(n_points, [(left[v], right[v]) for v in retained])
    index = {v: k for k, v in enumerate(retained)}
    vertex_interval = {v: index[v] if v in index else index[merged[v]] for v in g.vertices}
    return CanonicalModel(h, vertex_interval, tuple(anchors), tuple(spans), merged, tuple(cliques))


def model_realizes(g: SimpleGraph, h: IntervalHypergraph, vertex_interval: dict) -> bool:
    """Whether vertex v -> interval vertex_interval[v] is an interval model of g."""
    for u, v in combinations(g.vertices, 2):
        a, b = h[vertex_interval[u]], h[vertex_interval[v]]
        meet = a.l <= b.r and b.l <= a.r
        if meet != g.has_edge(u, v):
            return False
    return True


# --- forbidden pattern ----------------------------------------------------


class ForbiddenWitness(NamedTuple):
    path: tuple  # induced path p_1 .. p_k
    independent: tuple  # independent set of size >= k + 3 next to the path


def _max_independent(adj, cand: set) -> list:
    best: list = []

    def grow(chosen: list, cand: set):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + len(cand) <= len(best) or not cand:
            return
        v = min(cand)
        chosen.append(v)
        grow(chosen, cand - adj[v] - {v})
        chosen.pop()
        grow(chosen, cand - {v})

    grow([], set(cand))
    return sorted(best)


def induced_paths(g: SimpleGraph):
    """Every induced path, once per vertex set and direction pair
    (first vertex smaller than last for paths of two or more vertices),
    shorter paths first."""
    adj = g.adjacency
    by_length: dict = {}

    def extend(path: list):
        if len(path) == 1 or path[0] < path[-1]:
            by_length.setdefault(len(path), []).append(tuple(path))
        last = path[-1]
        for u in sorted(adj[last]):
            if u in path:
                continue
            if any(u in adj[p] for p in path[:-1]):
                continue
            path.append(u)
            extend(path)
            path.pop()

    for v in g.vertices:
        extend([v])
    for k in sorted(by_length):
        yield from sorted(by_length[k])


def find_forbidden(g: SimpleGraph) -> ForbiddenWitness | None:
    """Induced path P on k vertices together with k + 3 pairwise
    non-adjacent vertices outside P, each adjacent to P. Brute force."""
    adj = g.adjacency
    for path in induced_paths(g):
        around = set().union(*(adj[p] for p in path)) - set(path)
        if len(around) < len(path) + 3:
            continue
        indep = _max_independent(adj, around)
        if len(indep) >= len(path) + 3:
            return ForbiddenWitness(path, tuple(indep))
    return None


def check_forbidden_witness(g: SimpleGraph, w: ForbiddenWitness) -> bool:
    path, indep = list(w.path), list(w.independent)
    if len(indep) < len(path) + 3 or set(path) & set(indep):
        return False
    for i, j in combinations(range(len(path)), 2):
        if g.has_edge(path[i], path[j]) != (j == i + 1):
            return False
    if any(g.has_edge(a, b) for a, b in combinations(indep, 2)):
        return False
    return all(any(g.has_edge(x, p) for p in path) for x in indep)


# --- EHIG recognition -----------------------------------------------------


class EhigResult(NamedTuple):
    verdict: bool
    model: CanonicalModel
    hitting_set: frozenset | None
    witness: ForbiddenWitness | None


def is_ehig(g: SimpleGraph) -> EhigResult:
    """Decide via the canonical model; a forbidden pattern certifies "no".

    Raises NotIntervalGraph for graphs that are not interval graphs.
    """
    model = build_canonical(g)
    ok, hitting = is_ehs(model.hypergraph)
    if ok:
        return EhigResult(True, model, hitting, None)
    witness = find_forbidden(g)
    if witness is None:
        raise AssertionError("canonical model has no exact hitting set but no forbidden pattern was found")
    return EhigResult(False, model, None, witness)


def is_claw_free(g: SimpleGraph) -> bool:
    adj = g.adjacency
    for v in g.vertices:
        for a, b, c in combinations(sorted(adj[v]), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return False
    return True


def is_proper_interval_graph(g: SimpleGraph) -> bool:
    return is_claw_free(g) and is_interval_graph(g)


@dataclass(frozen=True)
class SetSystem:
    """A general (non-interval) hypergraph with a distinguished hitting set.

    Elements are vertices (ints) and edges ((u, v) tuples)."""

    universe: tuple
    sets: tuple  # sets[v - 1] is the set of vertex v
    hitting: frozenset


def ehs_representation(g: SimpleGraph) -> SetSystem:
    """Every graph is the intersection graph of an exactly hittable family:
    vertex v becomes {v} together with the edges at v, hit by the vertices."""
    universe = tuple(list(g.vertices) + sorted(g.edges))
    sets = tuple(frozenset([v, *[e for e in g.edges if v in e]]) for v in g.vertices)
    return SetSystem(universe, sets, frozenset(g.vertices))


def set_system_is_exact(s: SetSystem) -> bool:
    return all(len(x & s.hitting) == 1 for x in s.sets)


def set_system_intersection_graph(s: SetSystem) -> SimpleGraph:
    k = len(s.sets)
    return SimpleGraph(k, [(i + 1, j + 1) for i, j in combinations(range(k), 2) if s.sets[i] & s.sets[j]])


def canonical_model_is_exact(model: CanonicalModel, points) -> bool:
    return is_exact_hitting_set(model.hypergraph, points)
