"""
q-rescalings R^scaled_fixed as exact matrices over Z[q].

A rescaling keeps the direction of every edge of a spanning tree and multiplies its
length by q (edges inside a block of ``scaled``) or by 1 (inside a block of
``fixed``). The new norm of any edge e_kl is the norm of the rescaled tree path
from k to l; expanding it with the four-point inner-product formula gives row
e_kl of the matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .disc import Edge, block_edges, edge_rank, edges, num_edges
from .errors import DegenerateInput, NotHypertree
from .laurent import LaurentQT, ONE, Q, ZERO
from .matrix import EdgeMatrix
from .noncrossing import NCPartition, Permutation
from .simplex import PointConfig, is_nondegenerate, norms_from_points

Blocks = tuple[tuple[int, ...], ...]


def _blocks_of(x, n: int) -> Blocks:
    if isinstance(x, NCPartition):
        return x.nontrivial_blocks
    if isinstance(x, Permutation):
        return tuple(c for c in x.cycles() if len(c) > 1)
    out = []
    for b in x:
        b = tuple(sorted(set(b)))
        if len(b) > 1:
            out.append(b)
    return tuple(sorted(out))


@dataclass(frozen=True)
class RescalingSpec:
    """Nontrivial blocks rescaled by q and nontrivial blocks held fixed.

    Blocks may be given as NCPartition, Permutation (its cycles) or plain iterables.
    Together they must form a spanning hypertree on {1..n}.
    """

    n: int
    scaled: Blocks
    fixed: Blocks

    @classmethod
    def make(cls, n: int, scaled, fixed) -> RescalingSpec:
        spec = cls(n, _blocks_of(scaled, n), _blocks_of(fixed, n))
        spec.validate()
        return spec

    def validate(self):
        blocks = self.scaled + self.fixed
        for b in blocks:
            if any(not 1 <= x <= self.n for x in b):
                raise NotHypertree(f"block {b} outside 1..{self.n}")
        if sum(len(b) - 1 for b in blocks) != self.n - 1:
            raise NotHypertree("block sizes do not add up to a spanning hypertree")
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for b in blocks:
            for x in b[1:]:
                rx, rb = find(x), find(b[0])
                if rx == rb:
                    raise NotHypertree(f"block {b} closes a cycle")
                parent[rx] = rb
        if len({find(x) for x in range(1, self.n + 1)}) != 1:
            raise NotHypertree("blocks do not connect all vertices")

    def __str__(self):
        fmt = lambda bl: "{" + "|".join(",".join(map(str, b)) for b in bl) + "}"
        return f"R{fmt(self.scaled)}^fix{fmt(self.fixed)}"


@dataclass(frozen=True)
class TreeEdge:
    u: int
    v: int
    factor: LaurentQT  # Q or ONE

    @property
    def edge(self) -> Edge:
        return Edge.of(self.u, self.v)


SpanningTreePlan = tuple[TreeEdge, ...]


def _assert_tree(n: int, plan: Sequence[TreeEdge]):
    if len(plan) != n - 1:
        raise NotHypertree(f"{len(plan)} tree edges for {n} vertices")
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for te in plan:
        a, b = find(te.u), find(te.v)
        if a == b:
            raise NotHypertree(f"tree edge {te.edge} closes a cycle")
        parent[a] = b


def build_tree(spec: RescalingSpec) -> SpanningTreePlan:
    """Path edges b1-b2, b2-b3, ... inside each sorted block, tagged with the block's factor."""
    spec.validate()
    plan = []
    for blocks, f in ((spec.scaled, Q), (spec.fixed, ONE)):
        for b in blocks:
            plan.extend(TreeEdge(x, y, f) for x, y in zip(b, b[1:]))
    _assert_tree(spec.n, plan)
    return tuple(plan)


def random_tree(spec: RescalingSpec, rng: random.Random) -> SpanningTreePlan:
    """A uniformly shuffled spanning tree of each block, for tree-independence checks."""
    spec.validate()
    plan = []
    for blocks, f in ((spec.scaled, Q), (spec.fixed, ONE)):
        for b in blocks:
            cand = block_edges(b)
            rng.shuffle(cand)
            parent = {x: x for x in b}

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            for e in cand:
                ru, rv = find(e.i), find(e.j)
                if ru != rv:
                    parent[ru] = rv
                    u, v = (e.i, e.j) if rng.random() < 0.5 else (e.j, e.i)
                    plan.append(TreeEdge(u, v, f))
    _assert_tree(spec.n, plan)
    return tuple(plan)


def _positions(n: int, plan: Sequence[TreeEdge]) -> dict[int, dict[int, int]]:
    """For each vertex x, v_{1x} as a signed combination {tree edge index: +-1}."""
    adj: dict[int, list[tuple[int, int, int]]] = {x: [] for x in range(1, n + 1)}
    for k, te in enumerate(plan):
        adj[te.u].append((te.v, k, 1))
        adj[te.v].append((te.u, k, -1))
    pos = {1: {}}
    stack = [1]
    while stack:
        x = stack.pop()
        for y, k, sign in adj[x]:
            if y not in pos:
                pos[y] = dict(pos[x])
                pos[y][k] = sign
                stack.append(y)
    return pos


def _path_coeffs(pos, k: int, l: int) -> dict[int, int]:
    out = dict(pos[l])
    for e, s in pos[k].items():
        c = out.get(e, 0) - s
        if c:
            out[e] = c
        else:
            out.pop(e, None)
    return out


def matrix_from_tree(n: int, plan: Sequence[TreeEdge]) -> EdgeMatrix:
    """Rescaling matrix determined by a spanning tree with factors in {q, 1}."""
    _assert_tree(n, plan)
    pos = _positions(n, plan)
    dim = num_edges(n)
    rows = []
    for e in edges(n):
        coeffs = sorted(_path_coeffs(pos, e.i, e.j).items())
        row = [ZERO] * dim
        for a_idx, (ka, ca) in enumerate(coeffs):
            ta = plan[ka]
            fa = ta.factor * ca
            # <v_e, v_e> = a_e
            row[edge_rank(ta.u, ta.v, n)] += fa * fa
            for kb, cb in coeffs[a_idx + 1:]:
                tb = plan[kb]
                w = fa * (tb.factor * cb)
                x, y, z, u = ta.u, ta.v, tb.u, tb.v
                # 2<v_xy, v_zu> = a_xu + a_yz - a_xz - a_yu, counted twice in the square
                for (s, t), sign in (((x, u), 1), ((y, z), 1), ((x, z), -1), ((y, u), -1)):
                    if s != t:
                        row[edge_rank(s, t, n)] += w * sign
        rows.append(row)
    return EdgeMatrix(n, rows, "symbolic")


def rescaling_matrix(spec: RescalingSpec, tree: Sequence[TreeEdge] | None = None) -> EdgeMatrix:
    return matrix_from_tree(spec.n, tree if tree is not None else build_tree(spec))


def R(n: int, scaled, fixed) -> EdgeMatrix:
    """Shorthand for rescaling_matrix(RescalingSpec.make(n, scaled, fixed))."""
    return rescaling_matrix(RescalingSpec.make(n, scaled, fixed))


def rescale_points_by(p: PointConfig, factors: Iterable[tuple[int, int, object]]) -> PointConfig:
    """Geometric rescaling with arbitrary positive factors, keeping vertex 1 fixed.

    ``factors`` lists spanning-tree edges (u, v, s): the new vector from p_u to p_v
    is s times the old one.
    """
    n = p.n
    adj: dict[int, list[tuple[int, object]]] = {x: [] for x in range(1, n + 1)}
    count = 0
    for u, v, s in factors:
        if s <= 0:
            raise ValueError("scale factors must be positive")
        adj[u].append((v, s))
        adj[v].append((u, s))
        count += 1
    if count != n - 1:
        raise NotHypertree(f"{count} tree edges for {n} vertices")
    new = {1: p.points[0]}
    stack = [1]
    while stack:
        x = stack.pop()
        for y, s in adj[x]:
            if y not in new:
                d = p.diff(x, y)
                new[y] = tuple(a + s * b for a, b in zip(new[x], d))
                stack.append(y)
    if len(new) != n:
        raise NotHypertree("tree does not span all vertices")
    return PointConfig(tuple(new[x] for x in range(1, n + 1)), p.metric)


def rescale_points(p: PointConfig, tree: Sequence[TreeEdge], q0) -> PointConfig:
    """Geometric oracle: every tree edge keeps its direction, scaled by its factor at q0."""
    if not is_nondegenerate(norms_from_points(p)):
        raise DegenerateInput("points are not in general position")
    if isinstance(q0, int):
        q0 = Fraction(q0)
    return rescale_points_by(p, ((te.u, te.v, te.factor.eval(q0)) for te in tree))
