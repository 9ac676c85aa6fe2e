"""
Labeled euclidean simplices described by their edge norms (squared edge lengths).

Exact work stays inside the rationals: positive definiteness is read off the
pivots of an LDL^T factorization of the Gram matrix, and ``embed`` returns points
whose coordinates are rational in a frame with a diagonal metric (the D of the
factorization). ``float_coordinates`` turns that into ordinary coordinates for
export.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .disc import edge_rank, edges, num_edges
from .errors import DegenerateInput, DimensionMismatch, NonPositiveEntry

FLOAT_PIVOT_RTOL = 1e-12


def _vertex_count(dim: int) -> int:
    n = int((1 + math.isqrt(1 + 8 * dim)) // 2)
    if num_edges(n) != dim:
        raise DimensionMismatch(f"{dim} is not a triangular number n(n-1)/2")
    return n


@dataclass(frozen=True)
class EdgeNormVector:
    """Edge norms a_ij in lexicographic edge order."""

    n: int
    a: tuple

    def __post_init__(self):
        if len(self.a) != num_edges(self.n):
            raise DimensionMismatch(f"need {num_edges(self.n)} norms for n={self.n}, got {len(self.a)}")
        vals = tuple(x if isinstance(x, float) else Fraction(x) for x in self.a)
        object.__setattr__(self, "a", vals)

    @classmethod
    def of(cls, values: Sequence) -> EdgeNormVector:
        return cls(_vertex_count(len(values)), tuple(values))

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(x, float) for x in self.a)

    def norm(self, i: int, j: int):
        if i == j:
            return Fraction(0) if self.is_exact else 0.0
        return self.a[edge_rank(i, j, self.n)]

    def scaled(self, s2) -> EdgeNormVector:
        return EdgeNormVector(self.n, tuple(x * s2 for x in self.a))

    def to_float(self) -> EdgeNormVector:
        return EdgeNormVector(self.n, tuple(float(x) for x in self.a))

    def to_json(self) -> dict:
        return {"n": self.n, "a": [str(x) if isinstance(x, Fraction) else x for x in self.a]}

    @classmethod
    def from_json(cls, data: dict) -> EdgeNormVector:
        vals = [Fraction(x) if isinstance(x, (str, int)) else float(x) for x in data["a"]]
        return cls(int(data["n"]), tuple(vals))

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)


@dataclass(frozen=True)
class PointConfig:
    """n labeled points in an (n-1)-dimensional space with metric diag(metric).

    The default metric is all ones, i.e. ordinary coordinates.
    """

    points: tuple[tuple, ...]
    metric: tuple = field(default=())

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        dim = len(pts) - 1
        if any(len(p) != dim for p in pts):
            raise DimensionMismatch(f"{len(pts)} points need {dim} coordinates each")
        metric = tuple(self.metric) if self.metric else tuple(1 for _ in range(dim))
        if len(metric) != dim:
            raise DimensionMismatch("metric length must equal the coordinate dimension")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "metric", metric)

    @property
    def n(self) -> int:
        return len(self.points)

    def sqdist(self, i: int, j: int):
        p, q = self.points[i - 1], self.points[j - 1]
        return sum(w * (x - y) ** 2 for w, x, y in zip(self.metric, p, q))

    def diff(self, i: int, j: int) -> tuple:
        """Coordinates of the vector from p_i to p_j."""
        return tuple(y - x for x, y in zip(self.points[i - 1], self.points[j - 1]))

    def inner(self, u: Sequence, v: Sequence):
        return sum(w * x * y for w, x, y in zip(self.metric, u, v))

    def float_coordinates(self) -> list[list[float]]:
        s = [math.sqrt(float(w)) for w in self.metric]
        return [[float(x) * r for x, r in zip(p, s)] for p in self.points]


def inner_product_from_norms(v: EdgeNormVector, i: int, j: int, k: int, l: int):
    """<v_ij, v_kl> where v_ij runs from p_i to p_j; repeated points are allowed."""
    a = v.norm
    return (a(i, l) + a(j, k) - a(i, k) - a(j, l)) / 2


def gram_from_norms(v: EdgeNormVector) -> list[list]:
    """Gram matrix of v_12, ..., v_1n (rows and columns indexed by the far endpoint)."""
    n = v.n
    return [[inner_product_from_norms(v, 1, r, 1, c) for c in range(2, n + 1)] for r in range(2, n + 1)]


def ldl(gram: Sequence[Sequence]) -> tuple[list[list], list] | None:
    """LDL^T without pivoting; None if a pivot is not positive.

    Exact for Fraction input. Float input uses a pivot threshold relative to the
    largest diagonal entry.
    """
    m = len(gram)
    exact = not any(isinstance(x, float) for r in gram for x in r)
    tol = 0 if exact else FLOAT_PIVOT_RTOL * max((abs(gram[k][k]) for k in range(m)), default=1.0)
    L = [[(Fraction(int(r == c)) if exact else float(r == c)) for c in range(m)] for r in range(m)]
    D = []
    for j in range(m):
        d = gram[j][j] - sum(L[j][k] ** 2 * D[k] for k in range(j))
        if d <= tol:
            return None
        D.append(d)
        for i in range(j + 1, m):
            L[i][j] = (gram[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / d
    return L, D


def _check_positive(v: EdgeNormVector):
    if any(x <= 0 for x in v.a):
        raise NonPositiveEntry("edge norms must be strictly positive")


def is_nondegenerate(v: EdgeNormVector) -> bool:
    _check_positive(v)
    return ldl(gram_from_norms(v)) is not None


def norms_from_points(p: PointConfig) -> EdgeNormVector:
    return EdgeNormVector(p.n, tuple(p.sqdist(e.i, e.j) for e in edges(p.n)))


def embed(v: EdgeNormVector) -> PointConfig:
    """Place p_1 at the origin and read p_2..p_n off the Gram factorization.

    Exact input gives rational coordinates in the metric diag(D) of G = L D L^T;
    float input gives ordinary Cholesky coordinates.
    """
    _check_positive(v)
    gram = gram_from_norms(v)
    m = v.n - 1
    if v.is_exact:
        fac = ldl(gram)
        if fac is None:
            raise DegenerateInput("Gram matrix is not positive definite")
        L, D = fac
        zero = tuple(Fraction(0) for _ in range(m))
        return PointConfig((zero,) + tuple(tuple(r) for r in L), tuple(D))
    if ldl(gram) is None:
        raise DegenerateInput("Gram matrix is not positive definite")
    chol = np.linalg.cholesky(np.array(gram, dtype=float)) if m else np.zeros((0, 0))
    zero = tuple(0.0 for _ in range(m))
    return PointConfig((zero,) + tuple(tuple(float(x) for x in r) for r in chol))
