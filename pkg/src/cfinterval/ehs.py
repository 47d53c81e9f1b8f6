"""Exact hitting sets of interval hypergraphs, and the correspondence between
conflict-free colourings and partitions into exactly hittable parts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .cooccurrence import InfeasibleColouring, build_cooccurrence, colour_graph, lift_colouring
from .hypergraph import Interval, IntervalHypergraph, is_proper, unique_colours, verify_cf_colouring


def is_exact_hitting_set(h: IntervalHypergraph, points) -> bool:
    pts = sorted(set(points))
    return all(sum(1 for p in pts if p in iv) == 1 for iv in h.intervals)


def greedy_proper_ehs(h: IntervalHypergraph) -> frozenset | None:
    """Exact hitting set of a proper family, or None if there is none.

    Scanning intervals by right endpoint, the right endpoint of each interval
    not yet hit is taken. Identical copies are merged first; any other
    containment raises ValueError.
    """
    ivs = sorted(set(h.intervals), key=lambda iv: (iv.r, iv.l))
    if not is_proper(IntervalHypergraph(h.n, ivs)):
        raise ValueError("hypergraph is not proper")
    chosen: list[int] = []
    for iv in ivs:
        if not chosen or chosen[-1] < iv.l:
            chosen.append(iv.r)
    # when the greedy choice is not exact, no exact hitting set exists
    result = frozenset(chosen)
    if not is_exact_hitting_set(h, result):
        return None
    return result


class BlackenResult(NamedTuple):
    verdict: str  # "continue" or "reject"
    reduced: IntervalHypergraph | None
    labels: tuple  # labels[q - 1] = original point of reduced point q
    black: frozenset
    interval_map: tuple  # original interval index -> reduced interval index


def blacken_step(h: IntervalHypergraph) -> BlackenResult:
    """One reduction step towards an exact hitting set.

    For every pair with I containing J, the points of I outside J cannot be
    in an exact hitting set (J needs its own point, which already lies in
    I), so they are blackened. If an interval ends up entirely black there
    is no exact hitting set. Otherwise the black points are deleted,
    surviving points are renumbered in order and identical intervals merged.
    """
    ivs = h.intervals
    black = set()
    for i, a in enumerate(ivs):
        for j, b in enumerate(ivs):
            if i != j and a.contains_interval(b):
                black.update(range(a.l, b.l))
                black.update(range(b.r + 1, a.r + 1))
    for iv in ivs:
        if all(p in black for p in range(iv.l, iv.r + 1)):
            return BlackenResult("reject", None, (), frozenset(black), ())
    labels = tuple(p for p in range(1, h.n + 1) if p not in black)
    new_index = {p: q for q, p in enumerate(labels, start=1)}
    reduced: list[Interval] = []
    position: dict = {}
    interval_map = []
    for iv in ivs:
        white = [new_index[p] for p in range(iv.l, iv.r + 1) if p not in black]
        # the white points of an interval are consecutive among all white
        # points, so they form an interval after renumbering
        new = Interval(white[0], white[-1])
        if new not in position:
            position[new] = len(reduced)
            reduced.append(new)
        interval_map.append(position[new])
    return BlackenResult(
        "continue",
        IntervalHypergraph(len(labels), reduced),
        labels,
        frozenset(black),
        tuple(interval_map),
    )


def is_ehs(h: IntervalHypergraph) -> tuple:
    """(True, hitting set) if the family has an exact hitting set, else
    (False, None)."""
    labels = tuple(range(1, h.n + 1))
    current = h
    while not is_proper(current):
        step = blacken_step(current)
        if step.verdict == "reject":
            return False, None
        labels = tuple(labels[q - 1] for q in step.labels)
        current = step.reduced
    found = greedy_proper_ehs(current)
    if found is None:
        return False, None
    result = frozenset(labels[q - 1] for q in found)
    if not is_exact_hitting_set(h, result):
        raise AssertionError("reduction produced a set that is not an exact hitting set")
    return True, result


@dataclass(frozen=True)
class Part:
    intervals: frozenset
    hitting: frozenset


def validate_partition(h: IntervalHypergraph, parts: Sequence[Part]) -> None:
    seen: set = set()
    for k, part in enumerate(parts):
        if not part.intervals:
            raise ValueError(f"part {k} is empty")
        if seen & part.intervals:
            raise ValueError(f"part {k} repeats intervals {sorted(seen & part.intervals)}")
        seen |= part.intervals
        sub = h.subfamily(sorted(part.intervals))
        if not is_exact_hitting_set(sub, part.hitting):
            raise ValueError(f"part {k}: points {sorted(part.hitting)} do not hit every interval exactly once")
    if seen != set(range(h.m)):
        raise ValueError(f"intervals {sorted(set(range(h.m)) - seen)} are in no part")


def colouring_to_partition(h: IntervalHypergraph, colours: Sequence[int]) -> list:
    """Group every interval under its smallest unique colour.

    The hitting set of the part of colour c is the set of points of colour c
    lying in at least one of its intervals. Parts come ordered by colour.
    """
    if not verify_cf_colouring(h, colours):
        raise ValueError("colouring is not conflict-free")
    groups: dict = {}
    for i, iv in enumerate(h.intervals):
        groups.setdefault(unique_colours(colours, iv)[0], []).append(i)
    parts = []
    for c in sorted(groups):
        members = groups[c]
        hit = {p for i in members for p in range(h[i].l, h[i].r + 1) if colours[p - 1] == c}
        parts.append(Part(frozenset(members), frozenset(hit)))
    return parts


def partition_to_colouring(h: IntervalHypergraph, parts: Sequence[Part]) -> tuple:
    """Conflict-free colouring with at most len(parts) colours.

    Each interval is represented by the unique point of its part's hitting
    set inside it; the resulting co-occurrence graph is coloured with
    len(parts) colours and lifted back to the points.
    """
    validate_partition(h, parts)
    t = {}
    for part in parts:
        for i in part.intervals:
            t[i] = next(p for p in part.hitting if p in h[i])
    g = build_cooccurrence(h, t)
    try:
        gc = colour_graph(g, len(parts))
    except InfeasibleColouring:
        raise AssertionError("co-occurrence graph of a partition needs more colours than parts") from None
    out = lift_colouring(h, g, gc)
    if not verify_cf_colouring(h, out):
        raise AssertionError("lifted colouring is not conflict-free")
    return out


def parts_from_assignment(h: IntervalHypergraph, hitting: Mapping[int, frozenset]) -> list:
    """Helper: parts from a map part label -> hitting set, each interval
    joining the first part whose points hit it exactly once."""
    parts: dict = {k: [] for k in hitting}
    for i, iv in enumerate(h.intervals):
        for k, pts in hitting.items():
            if sum(1 for p in pts if p in iv) == 1:
                parts[k].append(i)
                break
        else:
            raise ValueError(f"interval {i} is hit exactly once by no part")
    return [Part(frozenset(v), frozenset(hitting[k])) for k, v in parts.items() if v]
