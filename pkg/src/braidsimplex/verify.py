"""
Mechanical checks of the representation: relations, reshaping, relabel-and-rescale.

Each verifier returns a Report of named pass/fail checks. Nothing here raises on
a failed identity; counterexamples are recorded with enough detail to reproduce.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .disc import num_edges
from .noncrossing import NCPartition, enumerate_nc
from .rep import (
    LKB,
    SIMPLICIAL,
    PERMUTATION,
    RepMode,
    act_word_on_norms,
    dual_simple_by_generators,
    dual_simple_left_form,
    dual_simple_matrix,
    generator_matrix,
    random_word,
    DualGen,
)
from .simplex import EdgeNormVector, PointConfig, is_nondegenerate, norms_from_points


@dataclass
class Check:
    label: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"label": self.label, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, label: str, passed: bool, **detail):
        self.checks.append(Check(label, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def n_passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        return f"{self.name}: {self.n_passed}/{len(self.checks)} pass"

    def to_json(self, include_passing: bool = True) -> dict:
        checks = self.checks if include_passing else self.failures
        return {
            "name": self.name,
            "passed": self.passed,
            "total": len(self.checks),
            "n_passed": self.n_passed,
            "meta": self.meta,
            "checks": [c.to_json() for c in checks],
        }


def _std(i: int):
    return DualGen(i, i + 1)


def dual_rule_triples(n: int) -> Iterable[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """All (B, i, C) with B, C nonempty and B, i, C read clockwise around their union."""
    for m in range(3, n + 1):
        for u in itertools.combinations(range(1, n + 1), m):
            for r in range(m):
                cyc = u[r:] + u[:r]
                for p in range(1, m - 1):
                    yield cyc[:p], cyc[p], cyc[p + 1:]


def _rotation(block: Iterable[int], n: int) -> NCPartition:
    return NCPartition.from_blocks([sorted(block)], n)


def verify_relations(n: int, mode: RepMode = LKB) -> Report:
    """Braid relations and far commutation of standard generators, plus s_Bi s_iC = s_BiC."""
    rep = Report(f"relations n={n} mode={mode.kind}", meta={"n": n, "mode": mode.kind})
    g = {i: generator_matrix(_std(i), n, mode) for i in range(1, n)}
    for i in range(1, n - 1):
        lhs = g[i] @ g[i + 1] @ g[i]
        rhs = g[i + 1] @ g[i] @ g[i + 1]
        rep.add(f"s{i} s{i + 1} s{i} = s{i + 1} s{i} s{i + 1}", lhs == rhs)
    for i, j in itertools.combinations(range(1, n), 2):
        if j - i >= 2:
            rep.add(f"s{i} s{j} = s{j} s{i}", g[i] @ g[j] == g[j] @ g[i])
    dual_mode = PERMUTATION if mode.kind == "perm" else SIMPLICIAL
    for B, i, C in dual_rule_triples(n):
        left = generator_matrix_for_block(B + (i,), n, dual_mode)
        right = generator_matrix_for_block((i,) + C, n, dual_mode)
        whole = generator_matrix_for_block(B + (i,) + C, n, dual_mode)
        label = f"s_{{{','.join(map(str, B))}}}{i} s_{i}{{{','.join(map(str, C))}}} = s_{{{','.join(map(str, B + (i,) + C))}}}"
        rep.add(label, left @ right == whole, B=list(B), i=i, C=list(C))
    return rep


def generator_matrix_for_block(block: Sequence[int], n: int, mode: RepMode = SIMPLICIAL):
    from .rep import DualSimple

    return generator_matrix(DualSimple(_rotation(block, n)), n, mode)


def random_simplex(n: int, rng: random.Random, box: int = 10) -> EdgeNormVector:
    """Exact edge norms of a random nondegenerate simplex with integer vertices in [-box, box]^(n-1)."""
    while True:
        pts = tuple(tuple(Fraction(rng.randint(-box, box)) for _ in range(n - 1)) for _ in range(n))
        v = norms_from_points(PointConfig(pts))
        if all(x > 0 for x in v.a) and is_nondegenerate(v):
            return v


def verify_theorem_a(
    n: int | Sequence[int] = (3, 4, 5),
    q_values: Sequence = (Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(3)),
    word_length: int = 15,
    trials: int = 1000,
    seed: int = 0,
) -> Report:
    """Random words over the dual generators (with inverses) keep simplices nondegenerate."""
    ns = [n] if isinstance(n, int) else list(n)
    qs = [Fraction(x) for x in q_values]
    rng = random.Random(seed)
    rep = Report(
        "theorem-a",
        meta={"n": ns, "q_values": [str(x) for x in qs], "word_length": word_length, "trials": trials, "seed": seed},
    )
    for trial in range(trials):
        m = ns[trial % len(ns)]
        v = random_simplex(m, rng)
        w = random_word(m, rng.randint(0, word_length), rng)
        for q0 in qs:
            out = act_word_on_norms(w, v, q0)
            positive = all(x > 0 for x in out.a)
            ok = positive and is_nondegenerate(out)
            if ok:
                rep.add(f"trial {trial} q={q0}", True)
            else:
                rep.add(
                    f"trial {trial} q={q0}",
                    False,
                    n=m,
                    word=str(w),
                    q=str(q0),
                    norms=[str(x) for x in v.a],
                    image=[str(x) for x in out.a],
                    positive=positive,
                )
    return rep


def verify_theorem_b(n: int) -> Report:
    """S_sigma = P_sigma R^sigma_rc(sigma) = R^sigma_lc(sigma) P_sigma for every sigma in NC_n.

    S_sigma itself is computed independently as the product of dual generator
    matrices along a factorization of sigma.
    """
    rep = Report(f"theorem-b n={n}", meta={"n": n})
    for p in enumerate_nc(n):
        s = dual_simple_by_generators(p)
        right = dual_simple_matrix(p)
        left = dual_simple_left_form(p)
        rep.add(str(p), s == right and s == left, right_form=s == right, left_form=s == left)
    return rep
