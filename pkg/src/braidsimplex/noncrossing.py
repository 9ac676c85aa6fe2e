"""
Noncrossing partitions of [n], their permutations, and the lattice NC_n.

Permutations multiply right to left, as functions: (a * b)(x) = a(b(x)), so
(1,2,3) * (3,4,5) = (1,2,3,4,5). The n-cycle delta = (1,2,...,n) is the top of
NC_n, and the left/right complements of s are delta s^-1 and s^-1 delta.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    CapExceeded,
    ComplementNotNoncrossing,
    DimensionMismatch,
    NotAPartition,
    NotNoncrossingPermutation,
    ProductNotNoncrossing,
)

ENUMERATION_CAP = 12


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: images[k-1] is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def delta(cls, n: int) -> Permutation:
        return cls.from_cycles(n, [range(1, n + 1)])

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = list(cyc)
            if any(x in seen or not 1 <= x <= n for x in cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"bad cycle {cyc} for n={n}")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as "(1,3,6)(2,5)" or "(23)(456)"; "()" is the identity."""
        text = text.strip()
        if text in ("", "()", "id", "1"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*[\d,\s]*\))+", text):
            raise ValueError(f"bad cycle notation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            body = body.strip()
            if not body:
                continue
            if "," in body:
                cycles.append([int(x) for x in body.split(",")])
            else:
                cycles.append([int(x) for x in body.replace(" ", "")])
        return cls.from_cycles(n, cycles)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")
        return Permutation(tuple(self.images[other.images[k] - 1] for k in range(self.n)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Cycles, each starting from its minimum, ordered by minimum."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self):
        return f"Permutation({self}, n={self.n})"


def _check_partition(blocks: Iterable[Iterable[int]], n: int) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    out = []
    for b in blocks:
        b = tuple(sorted(set(b)))
        if not b:
            continue
        for x in b:
            if x in seen or not 1 <= x <= n:
                raise NotAPartition(f"element {x} repeated or outside 1..{n}")
            seen.add(x)
        out.append(b)
    if len(seen) != n:
        raise NotAPartition(f"elements {sorted(set(range(1, n + 1)) - seen)} missing")
    return tuple(sorted(out))


def _blocks_cross(a: Sequence[int], b: Sequence[int]) -> bool:
    # a and b sorted and disjoint; they cross iff b meets two different gaps of a
    if len(a) < 2 or len(b) < 2:
        return False
    lo, hi = a[0], a[-1]
    gaps = set()
    for x in b:
        if x < lo or x > hi:
            gaps.add(-1)
        else:
            gaps.add(next(k for k, y in enumerate(a) if y > x))
        if len(gaps) > 1:
            return True
    return False


def is_noncrossing(blocks: Iterable[Iterable[int]], n: int) -> bool:
    bl = _check_partition(blocks, n)
    return not any(_blocks_cross(a, b) for a, b in itertools.combinations(bl, 2))


@dataclass(frozen=True)
class NCPartition:
    """A noncrossing partition; blocks ascending, ordered by minimum, singletons explicit."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        bl = _check_partition(self.blocks, self.n)
        if any(_blocks_cross(a, b) for a, b in itertools.combinations(bl, 2)):
            raise NotAPartition(f"blocks {bl} are crossing")
        object.__setattr__(self, "blocks", bl)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> NCPartition:
        """Build from the nontrivial blocks only; missing elements become singletons."""
        blocks = [tuple(b) for b in blocks]
        covered = {x for b in blocks for x in b}
        blocks += [(x,) for x in range(1, n + 1) if x not in covered]
        return cls(n, tuple(blocks))

    @classmethod
    def discrete(cls, n: int) -> NCPartition:
        return cls(n, tuple((x,) for x in range(1, n + 1)))

    @classmethod
    def full(cls, n: int) -> NCPartition:
        return cls(n, (tuple(range(1, n + 1)),))

    @classmethod
    def parse(cls, text: str, n: int) -> NCPartition:
        """Parse "{1,3,6|2|4,5}"; unlisted elements are singletons."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        blocks = []
        for part in body.split("|"):
            part = part.strip()
            if not part:
                continue
            if "," in part:
                blocks.append([int(x) for x in part.split(",")])
            else:
                blocks.append([int(x) for x in part])
        return cls.from_blocks(blocks, n)

    @property
    def nontrivial_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    def rank(self) -> int:
        """Height in NC_n: n minus the number of blocks."""
        return self.n - len(self.blocks)

    def is_discrete(self) -> bool:
        return len(self.blocks) == self.n

    def block_of(self, x: int) -> tuple[int, ...]:
        return next(b for b in self.blocks if x in b)

    def to_permutation(self) -> Permutation:
        return to_permutation(self)

    def __str__(self):
        return "{" + "|".join(",".join(map(str, b)) for b in self.blocks) + "}"

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> NCPartition:
        return cls(int(data["n"]), tuple(tuple(b) for b in data["blocks"]))


def _nc_blocks(elems: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for r in range(len(rest) + 1):
        for chosen in itertools.combinations(range(len(rest)), r):
            block = (first,) + tuple(rest[k] for k in chosen)
            cuts = list(chosen) + [len(rest)]
            gaps = []
            prev = -1
            for c in cuts:
                gaps.append(rest[prev + 1:c])
                prev = c
            for parts in itertools.product(*(list(_nc_blocks(g)) for g in gaps)):
                yield [block] + [b for p in parts for b in p]


def enumerate_nc(n: int) -> list[NCPartition]:
    """Every noncrossing partition of [n], sorted by canonical block encoding."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise CapExceeded(f"n={n} outside 1..{ENUMERATION_CAP}")
    return list(_enumerate_nc_cached(n))


@lru_cache(maxsize=None)
def _enumerate_nc_cached(n: int) -> tuple[NCPartition, ...]:
    encs = sorted(tuple(sorted(bl)) for bl in _nc_blocks(tuple(range(1, n + 1))))
    out = []
    for enc in encs:
        p = NCPartition.__new__(NCPartition)
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "blocks", enc)
        out.append(p)
    return tuple(out)


def to_permutation(p: NCPartition) -> Permutation:
    return Permutation.from_cycles(p.n, p.nontrivial_blocks)


def from_permutation(perm: Permutation) -> NCPartition:
    for cyc in perm.cycles():
        # read from the minimum, an increasing cycle is sorted
        if list(cyc) != sorted(cyc):
            raise NotNoncrossingPermutation(f"cycle {cyc} is not increasing")
    try:
        return NCPartition.from_blocks(perm.cycles(), perm.n)
    except NotAPartition as exc:
        raise NotNoncrossingPermutation(str(exc)) from exc


def is_noncrossing_permutation(perm: Permutation) -> bool:
    try:
        from_permutation(perm)
    except NotNoncrossingPermutation:
        return False
    return True


def _as_perm(s) -> Permutation:
    return s.to_permutation() if isinstance(s, NCPartition) else s


def left_complement(sigma) -> Permutation:
    return complement(sigma, "left")


def right_complement(sigma) -> Permutation:
    return complement(sigma, "right")


def complement(sigma, side: str) -> Permutation:
    """lc(s) = delta s^-1 (so lc(s) s = delta); rc(s) = s^-1 delta (so s rc(s) = delta)."""
    s = _as_perm(sigma)
    d = Permutation.delta(s.n)
    if side == "left":
        out = d * s.inverse()
    elif side == "right":
        out = s.inverse() * d
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if not is_noncrossing_permutation(out):
        raise ComplementNotNoncrossing(f"{side} complement {out} of {s} is crossing")
    return out


def partition_complement(p: NCPartition, side: str) -> NCPartition:
    return from_permutation(complement(p, side))


def _reflection_length(s: Permutation) -> int:
    return s.n - len(s.cycles(include_fixed=True))


def five_permutations(s1, s2) -> tuple[Permutation, Permutation, Permutation]:
    """(s3, s4, s5) with delta = s1 s2 s3 = s1 s4 s2 = s5 s1 s2."""
    s1, s2 = _as_perm(s1), _as_perm(s2)
    for s in (s1, s2):
        if not is_noncrossing_permutation(s):
            raise ProductNotNoncrossing(f"{s} is not a noncrossing permutation")
    prod = s1 * s2
    if not is_noncrossing_permutation(prod):
        raise ProductNotNoncrossing(f"product {prod} is not noncrossing")
    # the product must also be reduced: s1 <= s1 s2 in the absolute order
    if _reflection_length(prod) != _reflection_length(s1) + _reflection_length(s2):
        raise ProductNotNoncrossing(f"{s1} * {s2} = {prod} is not a length-additive product")
    d = Permutation.delta(s1.n)
    s3 = complement(prod, "right")
    s5 = complement(prod, "left")
    s4 = s1.inverse() * d * s2.inverse()
    if not is_noncrossing_permutation(s4):
        raise ComplementNotNoncrossing(f"conjugate factor {s4} is crossing")
    assert s1 * s2 * s3 == d and s1 * s4 * s2 == d and s5 * s1 * s2 == d
    return s3, s4, s5


def _same_n(a: NCPartition, b: NCPartition):
    if a.n != b.n:
        raise DimensionMismatch(f"n={a.n} vs n={b.n}")


def nc_leq(a: NCPartition, b: NCPartition) -> bool:
    _same_n(a, b)
    return all(set(x) <= set(b.block_of(x[0])) for x in a.blocks)


def nc_meet(a: NCPartition, b: NCPartition) -> NCPartition:
    _same_n(a, b)
    blocks = [set(x) & set(y) for x in a.blocks for y in b.blocks]
    return NCPartition(a.n, tuple(tuple(s) for s in blocks if s))


def nc_join(a: NCPartition, b: NCPartition) -> NCPartition:
    """Least upper bound via the complement anti-automorphism: lc(rc(a) meet rc(b))."""
    _same_n(a, b)
    ra = partition_complement(a, "right")
    rb = partition_complement(b, "right")
    return partition_complement(nc_meet(ra, rb), "left")
