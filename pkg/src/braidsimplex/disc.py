"""
Combinatorics of the convexly punctured disc.

Vertices 1..n sit on the boundary in clockwise order. Edges are unordered pairs,
named with the smaller label first and ranked lexicographically. An ordered pair
of edges falls into exactly one of five classes; for edges sharing one endpoint
the class says whether the second edge comes right after the first when walking
the triangle they span clockwise.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import IdenticalEdges, NoSharedEndpoint, OutOfRange


@dataclass(frozen=True, order=True)
class Edge:
    i: int
    j: int

    def __post_init__(self):
        if self.i >= self.j:
            raise OutOfRange(f"edge needs i < j, got ({self.i}, {self.j})")

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise OutOfRange(f"degenerate edge ({a}, {a})")
        return cls(min(a, b), max(a, b))

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.i, self.j))

    def rank(self, n: int) -> int:
        return edge_rank(self.i, self.j, n)

    def __str__(self):
        if self.i < 10 and self.j < 10:
            return f"e{self.i}{self.j}"
        return f"e({self.i},{self.j})"

    def to_json(self) -> list[int]:
        return [self.i, self.j]


class EdgePairClass(enum.Enum):
    IDENTICAL = "identical"
    CROSSING = "crossing"
    NONCROSSING = "noncrossing"
    # (e, f) clockwise: f is to the right of e, e is to the left of f
    CLOCKWISE = "clockwise"
    COUNTERCLOCKWISE = "counterclockwise"


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


def edge_rank(i: int, j: int, n: int) -> int:
    if i > j:
        i, j = j, i
    if not 1 <= i < j <= n:
        raise OutOfRange(f"edge ({i}, {j}) not in 1..{n}")
    # edges starting below i: sum_{a<i} (n - a)
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def edges(n: int) -> tuple[Edge, ...]:
    """All edges of D_n in lexicographic order."""
    return tuple(Edge(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def rank_edge(r: int, n: int) -> Edge:
    es = edges(n)
    if not 0 <= r < len(es):
        raise OutOfRange(f"rank {r} outside 0..{len(es) - 1}")
    return es[r]


def _as_edge(e) -> Edge:
    return e if isinstance(e, Edge) else Edge.of(*e)


def classify_pair(e, f, n: int | None = None) -> EdgePairClass:
    e, f = _as_edge(e), _as_edge(f)
    if n is not None and max(e.j, f.j) > n:
        raise OutOfRange(f"edge outside 1..{n}")
    shared = e.ends & f.ends
    if len(shared) == 2:
        return EdgePairClass.IDENTICAL
    if not shared:
        inside = (e.i < f.i < e.j) + (e.i < f.j < e.j)
        return EdgePairClass.CROSSING if inside == 1 else EdgePairClass.NONCROSSING
    x, y, z = sorted(e.ends | f.ends)
    for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
        if e.ends == {u, v} and f.ends == {v, w}:
            return EdgePairClass.CLOCKWISE
    return EdgePairClass.COUNTERCLOCKWISE


def is_right_of(f, e) -> bool:
    """True when f is to the right of e."""
    return classify_pair(e, f) is EdgePairClass.CLOCKWISE


def is_left_of(f, e) -> bool:
    """True when f is to the left of e."""
    return classify_pair(e, f) is EdgePairClass.COUNTERCLOCKWISE


def third_edge(e, f) -> Edge:
    e, f = _as_edge(e), _as_edge(f)
    shared = e.ends & f.ends
    if len(shared) == 2:
        raise IdenticalEdges(f"{e} and {f} coincide")
    if not shared:
        raise NoSharedEndpoint(f"{e} and {f} share no endpoint")
    return Edge.of(*(e.ends ^ f.ends))


def block_edges(block: Iterable[int]) -> list[Edge]:
    b = sorted(set(block))
    return [Edge(x, y) for k, x in enumerate(b) for y in b[k + 1:]]


_EDGE_RE = re.compile(r"^e(?:(\d)(\d)|\((\d+),(\d+)\))$")


def parse_edge(text: str) -> Edge:
    m = _EDGE_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad edge notation {text!r}")
    a, b = (m.group(1), m.group(2)) if m.group(1) else (m.group(3), m.group(4))
    return Edge.of(int(a), int(b))
