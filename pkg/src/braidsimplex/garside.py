"""
Greedy normal forms for dual-positive braids and the q-degree experiment.

A dual-positive word is a sequence of dual simples (noncrossing partitions). A
pair (a, b) is left-weighted when rc(a) and b have trivial meet in NC_n: nothing
at the front of b can be pulled into a while keeping a simple. Sliding replaces
(a, b) by (a m, m^-1 b) with m = rc(a) meet b until every pair is left-weighted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce

from .errors import DimensionMismatch, NotNoncrossingPermutation, SlidingFailure
from .matrix import EdgeMatrix
from .noncrossing import (
    NCPartition,
    enumerate_nc,
    from_permutation,
    nc_meet,
    partition_complement,
)
from .rep import DualSimple, dual_simple_matrix
from .verify import Report


@dataclass(frozen=True)
class DualPositiveWord:
    n: int
    factors: tuple[NCPartition, ...]

    def __post_init__(self):
        for f in self.factors:
            if f.n != self.n:
                raise DimensionMismatch(f"factor {f} is not on {self.n} points")

    @classmethod
    def parse(cls, text: str, n: int) -> DualPositiveWord:
        """Whitespace-separated partitions, e.g. "{1,2} {2,3}" or "d{1,2} d{2,3}"."""
        parts = [t[1:] if t.startswith("d") else t for t in text.split()]
        return cls(n, tuple(NCPartition.parse(t, n) for t in parts))

    def matrix(self) -> EdgeMatrix:
        return reduce(lambda a, b: a @ b, (dual_simple_matrix(f) for f in self.factors), EdgeMatrix.identity(self.n))

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return " ".join(str(DualSimple(f)) for f in self.factors) or "1"

    def to_json(self) -> dict:
        return {"n": self.n, "factors": [[list(b) for b in f.nontrivial_blocks] for f in self.factors]}


def is_normal_pair(a: NCPartition, b: NCPartition) -> bool:
    if a.n != b.n:
        raise DimensionMismatch(f"n={a.n} vs n={b.n}")
    return nc_meet(partition_complement(a, "right"), b).is_discrete()


def _slide(a: NCPartition, b: NCPartition) -> tuple[NCPartition, NCPartition]:
    m = nc_meet(partition_complement(a, "right"), b).to_permutation()
    try:
        head = from_permutation(a.to_permutation() * m)
        tail = from_permutation(m.inverse() * b.to_permutation())
    except NotNoncrossingPermutation as exc:
        raise SlidingFailure(f"sliding ({a}, {b}) left NC_{a.n}: {exc}") from exc
    return head, tail


def normal_form(w: DualPositiveWord) -> DualPositiveWord:
    factors = [f for f in w.factors if not f.is_discrete()]
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            a, b = factors[k], factors[k + 1]
            if not is_normal_pair(a, b):
                factors[k], factors[k + 1] = _slide(a, b)
                changed = True
        if changed:
            factors = [f for f in factors if not f.is_discrete()]
    return DualPositiveWord(w.n, tuple(factors))


def dual_length(w: DualPositiveWord) -> int:
    return len(normal_form(w))


def max_q_degree(m: EdgeMatrix) -> int:
    if m.domain != "symbolic":
        raise TypeError("max_q_degree needs a symbolic matrix")
    if any(b != 0 for r in m.rows for x in r for (_, b), _c in x.items()):
        raise ValueError("matrix still depends on t")
    return m.max_q_degree()


def random_dual_positive_word(n: int, max_factors: int, rng: random.Random) -> DualPositiveWord:
    simples = [p for p in enumerate_nc(n) if not p.is_discrete()]
    k = rng.randint(1, max_factors)
    return DualPositiveWord(n, tuple(rng.choice(simples) for _ in range(k)))


def qdegree_experiment(n: int, trials: int = 100, max_factors: int = 6, seed: int = 0) -> Report:
    """Compare the top q-power of S_w with twice the dual length of w on random words.

    Mismatches are findings to report, not errors.
    """
    rng = random.Random(seed)
    rep = Report(f"qdegree n={n}", meta={"n": n, "trials": trials, "max_factors": max_factors, "seed": seed})
    for trial in range(trials):
        w = random_dual_positive_word(n, max_factors, rng)
        nf = normal_form(w)
        deg = max_q_degree(w.matrix())
        length = len(nf)
        rep.add(
            f"trial {trial}",
            deg == 2 * length,
            word=str(w),
            normal_form=str(nf),
            dual_length=length,
            max_q_degree=deg,
        )
    rep.meta["agreement_rate"] = rep.n_passed / trials if trials else 1.0
    return rep
