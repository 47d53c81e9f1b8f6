"""Interval hypergraphs on the points 1..n and their conflict-free colourings."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

# A colouring is a tuple of length n; colours[p - 1] is the colour of point p.
# Colour 0 means "uncoloured" and never counts as a unique colour.
Colouring = tuple


class ParseError(ValueError):
    """Malformed text input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Interval(NamedTuple):
    l: int
    r: int

    def __contains__(self, p) -> bool:
        return self.l <= p <= self.r

    def __len__(self) -> int:
        return self.r - self.l + 1

    def contains_interval(self, other: "Interval") -> bool:
        return self.l <= other.l and other.r <= self.r

    def __str__(self) -> str:
        return f"[{self.l},{self.r}]"


@dataclass(frozen=True)
class IntervalHypergraph:
    """Points 1..n and an ordered list of intervals.

    Duplicate intervals are allowed. Interval indices (positions in
    ``intervals``) are stable and are what every other function refers to.
    """

    n: int
    intervals: tuple

    def __init__(self, n: int, intervals: Iterable = ()):
        ivs = tuple(Interval(int(l), int(r)) for l, r in intervals)
        if n < 0:
            raise ValueError(f"number of points must be non-negative, got {n}")
        for i, iv in enumerate(ivs):
            if not 1 <= iv.l <= iv.r <= n:
                raise ValueError(f"interval {i} = {iv} does not satisfy 1 <= l <= r <= {n}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "intervals", ivs)

    @property
    def m(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __getitem__(self, i: int) -> Interval:
        return self.intervals[i]

    def subfamily(self, indices: Iterable[int]) -> "IntervalHypergraph":
        return IntervalHypergraph(self.n, [self.intervals[i] for i in indices])

    def containing(self, p: int) -> list[int]:
        """Indices of the intervals that contain point p."""
        return [i for i, iv in enumerate(self.intervals) if p in iv]


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(line: str, number: int, count: int | None = None) -> list[int]:
    try:
        values = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", number) from None
    if count is not None and len(values) != count:
        raise ParseError(f"expected {count} integers, got {len(values)}", number)
    return values


def parse_hypergraph(text: str) -> IntervalHypergraph:
    """Parse ``n m`` followed by m lines ``l r``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input: expected header 'n m'", 1)
    number, header = lines[0]
    n, m = _ints(header, number, 2)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", number)
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] + 1 if body else number + 1
        raise ParseError(f"header announces {m} intervals, found {len(body)}", last if len(body) < m else body[m][0])
    intervals = []
    for number, line in body:
        l, r = _ints(line, number, 2)
        if not 1 <= l <= r <= n:
            raise ParseError(f"interval [{l},{r}] must satisfy 1 <= l <= r <= {n}", number)
        intervals.append((l, r))
    return IntervalHypergraph(n, intervals)


def format_hypergraph(h: IntervalHypergraph) -> str:
    out = [f"{h.n} {h.m}"]
    out.extend(f"{iv.l} {iv.r}" for iv in h.intervals)
    return "\n".join(out) + "\n"


def parse_colouring(text: str, n: int | None = None) -> Colouring:
    """Parse a single line of non-negative colours, one per point."""
    lines = list(_content_lines(text))
    if len(lines) != 1:
        raise ParseError(f"expected exactly one line of colours, found {len(lines)}", lines[1][0] if lines else 1)
    number, line = lines[0]
    colours = _ints(line, number)
    if any(c < 0 for c in colours):
        raise ParseError("colours must be non-negative", number)
    if n is not None and len(colours) != n:
        raise ParseError(f"expected {n} colours, got {len(colours)}", number)
    return tuple(colours)


def format_colouring(colours: Sequence[int]) -> str:
    return " ".join(str(c) for c in colours) + "\n"


def is_proper(h: IntervalHypergraph) -> bool:
    """True when no interval contains another one.

    Two identical intervals contain each other, so duplicates make H improper.
    """
    ivs = sorted(h.intervals)
    for a, b in zip(ivs, ivs[1:]):
        # proper iff both endpoints strictly increase along the sorted order
        if a.l == b.l or b.r <= a.r:
            return False
    return True


def j_set(h: IntervalHypergraph, b: int) -> list[int]:
    """Indices of the intervals starting at or before b (in index order)."""
    if not 1 <= b <= h.n:
        raise ValueError(f"point {b} outside 1..{h.n}")
    return [i for i, iv in enumerate(h.intervals) if iv.l <= b]


def nested_sets_at(h: IntervalHypergraph, b: int) -> list[frozenset]:
    """All sets T of intervals containing b that are closed under later
    left endpoints: with I in T, every interval containing b that starts
    after I is in T too.

    These are exactly the intervals containing b whose left endpoint is at
    least some threshold. Returned in increasing size, starting with the
    empty set.
    """
    members = [i for i in j_set(h, b) if b in h[i]]
    lefts = sorted({h[i].l for i in members}, reverse=True)
    out = [frozenset()]
    for threshold in lefts:
        out.append(frozenset(i for i in members if h[i].l >= threshold))
    return out


def discrete_hypergraph(n: int) -> IntervalHypergraph:
    """All n(n+1)/2 intervals of 1..n, ordered by left then right endpoint."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return IntervalHypergraph(n, [(l, r) for l in range(1, n + 1) for r in range(l, n + 1)])


def unique_colours(colours: Sequence[int], iv: Interval) -> list[int]:
    """Non-zero colours that occur exactly once inside iv."""
    counts: dict[int, int] = {}
    for c in colours[iv.l - 1 : iv.r]:
        if c:
            counts[c] = counts.get(c, 0) + 1
    return sorted(c for c, k in counts.items() if k == 1)


def is_cf_interval(colours: Sequence[int], iv: Interval) -> bool:
    return bool(unique_colours(colours, iv))


def verify_cf_colouring(h: IntervalHypergraph, colours: Sequence[int]) -> bool:
    if len(colours) != h.n:
        raise ValueError(f"colouring has {len(colours)} entries, hypergraph has {h.n} points")
    return all(is_cf_interval(colours, iv) for iv in h.intervals)


def count_cf_intervals(h: IntervalHypergraph, colours: Sequence[int]) -> int:
    return sum(1 for iv in h.intervals if is_cf_interval(colours, iv))


def colour_count(colours: Sequence[int]) -> int:
    """Number of distinct non-zero colours used."""
    return len({c for c in colours if c})


def random_hypergraph(rng: random.Random, n: int, m: int) -> IntervalHypergraph:
    """m intervals drawn uniformly (with repetition) from all intervals of 1..n."""
    pool = [(l, r) for l in range(1, n + 1) for r in range(l, n + 1)]
    return IntervalHypergraph(n, [rng.choice(pool) for _ in range(m)])


def all_interval_families(n: int) -> Iterator[IntervalHypergraph]:
    """Every set (no repetition) of intervals of 1..n, 2^(n(n+1)/2) of them."""
    pool = discrete_hypergraph(n).intervals
    for mask in range(1 << len(pool)):
        yield IntervalHypergraph(n, [iv for k, iv in enumerate(pool) if mask >> k & 1])
