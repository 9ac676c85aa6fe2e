"""
Matrices of the LKB, simplicial (t = 1) and permutation (q = t = 1) representations.

Conventions, fixed once for the whole package:

* a generator acts on basis row vectors from the right, so row e_kl of a matrix
  is the image of e_kl; the same matrix acts on edge-norm columns from the left;
* a word is evaluated as the product of its token matrices in written order;
* P_sigma has a 1 in row e_kl, column e_{sigma^-1(k) sigma^-1(l)}, i.e. it
  sends the norm of e_kl to position e_{sigma(k) sigma(l)}. With right-to-left
  permutation products this makes P_a P_b = P_{ab}.

Every dual generator matrix S_ij is built as P_(ij) R^{ij}_{rc(ij)}; the standard
ones are checked against the LKB table at t = 1 in the test suite.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence, Union

from .disc import Edge, EdgePairClass, classify_pair, edge_rank, edges, third_edge
from .errors import DimensionMismatch, OutOfRange, UnsupportedToken
from .laurent import LaurentQT, ONE, Q, T, ZERO
from .matrix import EdgeMatrix
from .noncrossing import NCPartition, Permutation, complement
from .rescale import R
from .simplex import EdgeNormVector


# --- basic matrices -------------------------------------------------------

def permutation_matrix(sigma, n: int | None = None) -> EdgeMatrix:
    """Edge relabeling induced by a vertex permutation (symbolic 0/1 entries)."""
    perm = sigma.to_permutation() if isinstance(sigma, NCPartition) else sigma
    if n is not None and perm.n != n:
        raise DimensionMismatch(f"permutation on {perm.n} points for n={n}")
    n = perm.n
    inv = perm.inverse()
    dim = n * (n - 1) // 2
    rows = []
    for e in edges(n):
        row = [ZERO] * dim
        row[edge_rank(inv(e.i), inv(e.j), n)] = ONE
        rows.append(row)
    return EdgeMatrix(n, rows, "symbolic")


@lru_cache(maxsize=None)
def lkb_generator_matrix(i: int, n: int) -> EdgeMatrix:
    """Standard generator s_{i,i+1} in the LKB representation, symbolic in q and t."""
    if not 1 <= i < n:
        raise OutOfRange(f"standard generator index {i} outside 1..{n - 1}")
    j = i + 1
    dim = n * (n - 1) // 2
    rows = []
    for e in edges(n):
        k, l = e.i, e.j
        row = [ZERO] * dim
        r = edge_rank(k, l, n)
        if (k, l) == (i, j):
            row[r] = T * Q * Q
        elif i not in (k, l) and j not in (k, l):
            row[r] = ONE
        elif i == k and j < l:
            row[edge_rank(j, l, n)] = ONE
        elif i == l:
            row[edge_rank(k, j, n)] = ONE
        elif k < i and j == l:
            row[edge_rank(i, j, n)] += T * (Q * Q - Q)
            row[edge_rank(k, i, n)] += Q
            row[r] += ONE - Q
        elif j == k:
            row[edge_rank(i, j, n)] += Q * Q - Q
            row[edge_rank(i, l, n)] += Q
            row[r] += ONE - Q
        else:  # pragma: no cover - the six cases are exhaustive for j = i + 1
            raise AssertionError((i, k, l))
        rows.append(row)
    return EdgeMatrix(n, rows, "symbolic")


def simplicial_table_matrix(i: int, j: int, n: int) -> EdgeMatrix:
    """S_ij from the four-case description by edge-pair class (boundary edges only).

    identical: q^2 e_kl; noncrossing: e_kl; e_kl left of e_ij: e_new;
    e_kl right of e_ij: (q^2-q) e_ij + q e_new + (1-q) e_kl.
    """
    if not (1 <= i < j <= n) or (j - i != 1 and (i, j) != (1, n)):
        raise OutOfRange(f"({i}, {j}) is not a boundary edge of D_{n}")
    g = Edge(i, j)
    dim = n * (n - 1) // 2
    rows = []
    for e in edges(n):
        row = [ZERO] * dim
        r = edge_rank(e.i, e.j, n)
        cls = classify_pair(g, e)
        if cls is EdgePairClass.IDENTICAL:
            row[r] = Q * Q
        elif cls is EdgePairClass.NONCROSSING:
            row[r] = ONE
        elif cls is EdgePairClass.COUNTERCLOCKWISE:  # e left of g
            row[third_edge(g, e).rank(n)] = ONE
        elif cls is EdgePairClass.CLOCKWISE:  # e right of g
            row[g.rank(n)] += Q * Q - Q
            row[third_edge(g, e).rank(n)] += Q
            row[r] += ONE - Q
        else:
            raise AssertionError("boundary edges cross nothing")
        rows.append(row)
    return EdgeMatrix(n, rows, "symbolic")


@lru_cache(maxsize=None)
def simplicial_generator_matrix(i: int, j: int, n: int) -> EdgeMatrix:
    """Dual generator S_ij = P_(ij) R^{ij}_{rc(ij)} over Z[q]."""
    if i > j:
        i, j = j, i
    if not 1 <= i < j <= n:
        raise OutOfRange(f"dual generator ({i}, {j}) outside 1..{n}")
    sigma = Permutation.from_cycles(n, [(i, j)])
    return permutation_matrix(sigma) @ R(n, sigma, complement(sigma, "right"))


def _as_partition(sigma, n: int | None) -> NCPartition:
    if isinstance(sigma, NCPartition):
        return sigma
    if isinstance(sigma, Permutation):
        from .noncrossing import from_permutation

        return from_permutation(sigma)
    return NCPartition.from_blocks(sigma, n)


@lru_cache(maxsize=None)
def _dual_simple_cached(p: NCPartition) -> EdgeMatrix:
    perm = p.to_permutation()
    return permutation_matrix(perm) @ R(p.n, perm, complement(perm, "right"))


def dual_simple_matrix(sigma, n: int | None = None) -> EdgeMatrix:
    """S_sigma = P_sigma R^sigma_{rc(sigma)}."""
    return _dual_simple_cached(_as_partition(sigma, n))


def dual_simple_left_form(sigma, n: int | None = None) -> EdgeMatrix:
    """R^sigma_{lc(sigma)} P_sigma; equal to dual_simple_matrix since every dual simple relabels and rescales."""
    p = _as_partition(sigma, n)
    perm = p.to_permutation()
    return R(p.n, perm, complement(perm, "left")) @ permutation_matrix(perm)


def generator_factorization(sigma, n: int | None = None) -> list[tuple[int, int]]:
    """Dual generators whose product is s_sigma: s_B = s_{b1 b2} s_{b2 b3} ... per block."""
    p = _as_partition(sigma, n)
    return [(x, y) for b in p.nontrivial_blocks for x, y in zip(b, b[1:])]


def dual_simple_by_generators(sigma, n: int | None = None) -> EdgeMatrix:
    """S_sigma as the product of dual generator matrices along generator_factorization."""
    p = _as_partition(sigma, n)
    mats = [simplicial_generator_matrix(i, j, p.n) for i, j in generator_factorization(p)]
    return reduce(lambda a, b: a @ b, mats, EdgeMatrix.identity(p.n))


# --- words ----------------------------------------------------------------

@dataclass(frozen=True)
class DualGen:
    i: int
    j: int

    def __post_init__(self):
        if self.i >= self.j:
            raise OutOfRange(f"dual generator needs i < j, got ({self.i}, {self.j})")

    @property
    def is_standard(self) -> bool:
        return self.j == self.i + 1

    def __str__(self):
        return f"s{self.i}{self.j}" if self.j < 10 else f"s{self.i},{self.j}"


@dataclass(frozen=True)
class DualSimple:
    partition: NCPartition

    def __str__(self):
        blocks = self.partition.nontrivial_blocks
        return "d{" + "|".join(",".join(map(str, b)) for b in blocks) + "}"


Generator = Union[DualGen, DualSimple]


@dataclass(frozen=True)
class Token:
    gen: Generator
    power: int = 1

    def __post_init__(self):
        if self.power not in (1, -1):
            raise ValueError("token power must be +1 or -1")

    def __str__(self):
        return str(self.gen) + ("'" if self.power == -1 else "")


_TOKEN_RE = re.compile(
    r"^(?:s(?P<a>\d+),(?P<b>\d+)|s(?P<c>\d)(?P<d>\d)|d(?P<blocks>\{[^}]*\}))(?P<inv>'|\^-1)?$"
)


@dataclass(frozen=True)
class BraidWord:
    n: int
    tokens: tuple[Token, ...] = ()

    def __post_init__(self):
        for tok in self.tokens:
            g = tok.gen
            if isinstance(g, DualGen) and g.j > self.n:
                raise OutOfRange(f"generator {g} outside 1..{self.n}")
            if isinstance(g, DualSimple) and g.partition.n != self.n:
                raise DimensionMismatch(f"dual simple {g} is not on {self.n} points")

    @classmethod
    def parse(cls, text: str, n: int) -> BraidWord:
        """Whitespace-separated tokens: s12, s3,10, d{1,3,4|5,6}, each optionally suffixed ' or ^-1."""
        tokens = []
        for raw in text.split():
            m = _TOKEN_RE.match(raw)
            if not m:
                raise ValueError(f"bad token {raw!r}")
            power = -1 if m.group("inv") else 1
            if m.group("blocks"):
                gen: Generator = DualSimple(NCPartition.parse(m.group("blocks"), n))
            else:
                a = int(m.group("a") or m.group("c"))
                b = int(m.group("b") or m.group("d"))
                if a == b or not (1 <= a <= n and 1 <= b <= n):
                    raise OutOfRange(f"bad generator {raw!r} for n={n}")
                gen = DualGen(min(a, b), max(a, b))
            tokens.append(Token(gen, power))
        return cls(n, tuple(tokens))

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(Token(t.gen, -t.power) for t in reversed(self.tokens)))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")
        return BraidWord(self.n, self.tokens + other.tokens)

    def __pow__(self, k: int) -> BraidWord:
        w = self if k >= 0 else self.inverse()
        return BraidWord(self.n, w.tokens * abs(k))

    def __len__(self):
        return len(self.tokens)

    def __str__(self):
        return " ".join(map(str, self.tokens))


def random_word(n: int, length: int, rng: random.Random, inverses: bool = True) -> BraidWord:
    """A word of exactly ``length`` random dual generators (with random signs if ``inverses``)."""
    gens = [DualGen(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    toks = []
    for _ in range(length):
        g = rng.choice(gens)
        p = rng.choice((1, -1)) if inverses else 1
        toks.append(Token(g, p))
    return BraidWord(n, tuple(toks))


# --- representations ------------------------------------------------------

@dataclass(frozen=True)
class RepMode:
    """Which representation to evaluate: "lkb", "simplicial" or "perm".

    For "lkb", ``t`` may be None (symbolic) or an integer specialization.
    """

    kind: str = "simplicial"
    t: int | None = None

    def __post_init__(self):
        if self.kind not in ("lkb", "simplicial", "perm"):
            raise ValueError(f"unknown representation {self.kind!r}")

    @classmethod
    def parse(cls, text: str, t=None) -> RepMode:
        kind = {"permutation": "perm"}.get(text, text)
        return cls(kind, t)


LKB = RepMode("lkb")
SIMPLICIAL = RepMode("simplicial")
PERMUTATION = RepMode("perm")


def generator_matrix(gen: Generator, n: int, mode: RepMode = SIMPLICIAL) -> EdgeMatrix:
    if mode.kind == "lkb":
        if not (isinstance(gen, DualGen) and gen.is_standard):
            raise UnsupportedToken(f"{gen} is not a standard generator; LKB mode supports s_i,i+1 only")
        m = lkb_generator_matrix(gen.i, n)
        return m.subs_t(mode.t) if mode.t is not None else m
    if isinstance(gen, DualGen):
        m = simplicial_generator_matrix(gen.i, gen.j, n)
    else:
        m = dual_simple_matrix(gen.partition)
    if mode.kind == "perm":
        return m.map(lambda x: LaurentQT.const(int(x.eval(1))))
    return m


@lru_cache(maxsize=None)
def _inverse_cached(gen: Generator, n: int, mode: RepMode) -> EdgeMatrix:
    return generator_matrix(gen, n, mode).inverse()


def token_matrix(tok: Token, n: int, mode: RepMode = SIMPLICIAL) -> EdgeMatrix:
    if tok.power == 1:
        return generator_matrix(tok.gen, n, mode)
    return _inverse_cached(tok.gen, n, mode)


def evaluate_word(w: BraidWord, mode: RepMode = SIMPLICIAL, q0=None, t0=None) -> EdgeMatrix:
    """Product of the token matrices in written order; evaluated at q0 (and t0) if given."""
    if q0 is None and t0 is None:
        mats = [token_matrix(t, w.n, mode) for t in w.tokens]
        return reduce(lambda a, b: a @ b, mats, EdgeMatrix.identity(w.n))
    q0 = 1 if q0 is None else q0
    t0 = 1 if t0 is None else t0
    exact = not isinstance(q0, float) and not isinstance(t0, float)
    q0 = Fraction(q0) if exact else q0
    t0 = Fraction(t0) if exact else t0
    domain = "rational" if exact else "float"
    acc = EdgeMatrix.identity(w.n, domain)
    for tok in w.tokens:
        acc = acc @ evaluated_token_matrix(tok, w.n, mode, q0, t0)
    return acc


def evaluated_token_matrix(tok: Token, n: int, mode: RepMode, q0, t0=1) -> EdgeMatrix:
    """A token's matrix at numeric q0, t0; inverses are taken numerically."""
    # 2.0 == Fraction(2) hash alike, so the scalar types are part of the key
    return _evaluated_token_matrix(tok, n, mode, q0, t0, type(q0), type(t0))


@lru_cache(maxsize=4096)
def _evaluated_token_matrix(tok, n, mode, q0, t0, _qtype, _ttype) -> EdgeMatrix:
    m = generator_matrix(tok.gen, n, mode).evaluate(q0, t0)
    return m if tok.power == 1 else m.inverse()


def act_on_norms(m: EdgeMatrix, v: EdgeNormVector) -> EdgeNormVector:
    """M . v for an evaluated matrix M and an edge-norm column vector v."""
    if m.domain == "symbolic":
        raise TypeError("evaluate the matrix at numeric q before acting on norms")
    if m.n != v.n:
        raise DimensionMismatch(f"matrix for n={m.n}, vector for n={v.n}")
    return EdgeNormVector(v.n, tuple(m.apply(v.a)))


def act_word_on_norms(w: BraidWord, v: EdgeNormVector, q0, mode: RepMode = SIMPLICIAL) -> EdgeNormVector:
    """Same as act_on_norms(evaluate_word(w, mode, q0), v), without forming the product."""
    if w.n != v.n:
        raise DimensionMismatch(f"word for n={w.n}, vector for n={v.n}")
    exact = not isinstance(q0, float)
    q0 = Fraction(q0) if exact else q0
    vec = list(v.a)
    for tok in reversed(w.tokens):
        vec = evaluated_token_matrix(tok, w.n, mode, q0, Fraction(1) if exact else 1.0).apply(vec)
    return EdgeNormVector(v.n, tuple(vec))
