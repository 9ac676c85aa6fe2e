import itertools
import random
from fractions import Fraction

import pytest

from braidsimplex import EdgeMatrix, NCPartition, Permutation, Q, enumerate_nc
from braidsimplex.disc import edge_rank
from braidsimplex.errors import NotHypertree, ProductNotNoncrossing
from braidsimplex.laurent import ONE
from braidsimplex.noncrossing import five_permutations, left_complement, right_complement
from braidsimplex.rescale import (
    R,
    RescalingSpec,
    TreeEdge,
    build_tree,
    matrix_from_tree,
    random_tree,
    rescale_points,
    rescale_points_by,
    rescaling_matrix,
)
from braidsimplex.simplex import EdgeNormVector, embed, is_nondegenerate, norms_from_points

from conftest import EQ1_TRIANGLE, EQ3_TETRA, random_points, sym

q = Q


def _nondegenerate_points(n, rng):
    while True:
        p = random_points(n, rng)
        v = norms_from_points(p)
        if all(x > 0 for x in v.a) and is_nondegenerate(v):
            return p


def test_triangle_matrix():
    assert R(3, [[1, 2]], [[2, 3]]) == sym(3, EQ1_TRIANGLE)


def test_tetrahedron_matrix():
    assert R(4, [[1, 2]], [[2, 3, 4]]) == sym(4, EQ3_TETRA)


def _row(m, i, j):
    return m.row(edge_rank(i, j, 4))


def _coeffs(n, **kw):
    out = [0] * 6
    for name, c in kw.items():
        out[edge_rank(int(name[1]), int(name[2]), n)] = c
    return tuple(out)


def test_diagonal_edge_reference_formula_uses_fixed_12_34():
    # the reference formula expands v13 = v12 + v24 + v43, i.e. fixed blocks {1,2},{3,4}
    m = R(4, [[2, 4]], [[1, 2], [3, 4]])
    expected = _coeffs(4, a13=1, a24=(q - 1) ** 2, a14=q - 1, a23=q - 1, a12=1 - q, a34=1 - q)
    assert _row(m, 1, 3) == expected


def test_diagonal_edge_with_right_complement_blocks():
    # rc((2,4)) = (1,4)(2,3): the linear coefficients swap sign
    m = R(4, [[2, 4]], [[2, 3], [1, 4]])
    expected = _coeffs(4, a13=1, a24=(q - 1) ** 2, a14=1 - q, a23=1 - q, a12=q - 1, a34=q - 1)
    assert _row(m, 1, 3) == expected


def test_diagonal_edge_rows_match_geometry(rng):
    q0 = Fraction(3)
    for fixed in ([[2, 3], [1, 4]], [[1, 2], [3, 4]]):
        spec = RescalingSpec.make(4, [[2, 4]], fixed)
        for _ in range(5):
            p = _nondegenerate_points(4, rng)
            v = norms_from_points(p)
            image = rescaling_matrix(spec).evaluate(q0).apply(v.a)
            assert tuple(image) == norms_from_points(rescale_points(p, build_tree(spec), q0)).a


def test_build_tree_examples():
    plan = build_tree(RescalingSpec.make(4, [[1, 2]], [[2, 3, 4]]))
    assert [(te.u, te.v, te.factor) for te in plan] == [(1, 2, Q), (2, 3, ONE), (3, 4, ONE)]
    plan = build_tree(RescalingSpec.make(5, [[1, 2, 3, 4, 5]], []))
    assert [(te.u, te.v) for te in plan] == [(k, k + 1) for k in range(1, 5)] and all(te.factor == Q for te in plan)
    with pytest.raises(NotHypertree):
        RescalingSpec.make(4, [[1, 2]], [[3, 4]])
    with pytest.raises(NotHypertree):
        RescalingSpec.make(3, [[1, 2], [2, 3]], [[1, 3]])


def test_spec_accepts_partitions_and_permutations():
    a = RescalingSpec.make(4, NCPartition.parse("{1,2}", 4), Permutation.parse("(2,3,4)", 4))
    assert a == RescalingSpec.make(4, [[1, 2]], [[2, 3, 4]])


def test_rescale_points_examples(rng):
    p = embed(EdgeNormVector.of([1, 1, 1]))
    plan = (TreeEdge(1, 2, Q), TreeEdge(2, 3, ONE))
    assert norms_from_points(rescale_points(p, plan, 2)).a == (4, 3, 1)
    p = _nondegenerate_points(4, rng)
    spec = RescalingSpec.make(4, [[1, 2]], [[2, 3, 4]])
    assert norms_from_points(rescale_points(p, build_tree(spec), 1)) == norms_from_points(p)
    full = build_tree(RescalingSpec.make(4, [[1, 2, 3, 4]], []))
    assert norms_from_points(rescale_points(p, full, Fraction(5, 2))) == norms_from_points(p).scaled(Fraction(25, 4))


def _complement_specs(n):
    for part in enumerate_nc(n):
        s = part.to_permutation()
        yield s, RescalingSpec.make(n, s, right_complement(s))
        yield s, RescalingSpec.make(n, s, left_complement(s))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tree_independence(n):
    rng = random.Random(n)
    for _, spec in _complement_specs(n):
        base = rescaling_matrix(spec)
        for _ in range(4):
            assert rescaling_matrix(spec, random_tree(spec, rng)) == base


@pytest.mark.parametrize("n", [3, 4, 5])
def test_matrix_matches_geometric_oracle(n):
    rng = random.Random(100 + n)
    for _, spec in itertools.islice(_complement_specs(n), 0, None, 3):
        p = _nondegenerate_points(n, rng)
        q0 = Fraction(rng.choice([1, 2, 3]), rng.choice([1, 2, 5]))
        image = rescaling_matrix(spec).evaluate(q0).apply(norms_from_points(p).a)
        assert tuple(image) == norms_from_points(rescale_points(p, build_tree(spec), q0)).a


def test_rescalings_along_a_common_tree_compose(rng):
    # scaling by q then q' along the same tree is scaling by q q'
    spec = RescalingSpec.make(5, [[1, 3], [4, 5]], [[1, 2], [3, 4]])
    m = rescaling_matrix(spec)
    assert m.evaluate(2) @ m.evaluate(Fraction(1, 3)) == m.evaluate(Fraction(2, 3))
    assert (m @ m.invert_q()).is_identity()


def _blocks(*perms):
    return [c for s in perms for c in s.cycles() if len(c) > 1]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rescaling_composition_through_five_permutations(n):
    # R^{s1}_{s4 s2} R^{s2}_{s1 s4} = R^{s1 s2}_{s4}, complements combined blockwise
    perms = [p.to_permutation() for p in enumerate_nc(n)]
    checked = 0
    for s1, s2 in itertools.product(perms, repeat=2):
        try:
            _, s4, _ = five_permutations(s1, s2)
        except ProductNotNoncrossing:
            continue
        assert s4 * s2 == right_complement(s1) and s1 * s4 == left_complement(s2)
        lhs = R(n, _blocks(s1), _blocks(s4, s2)) @ R(n, _blocks(s2), _blocks(s1, s4))
        assert lhs == R(n, s1 * s2, s4), (str(s1), str(s2))
        checked += 1
    assert checked == {3: 12, 4: 55, 5: 273}[n]


def test_composition_needs_length_additive_product():
    # (4,5)(3,4,5) = (3,5) is noncrossing but not a reduced product
    s1, s2 = Permutation.parse("(4,5)", 5), Permutation.parse("(3,4,5)", 5)
    with pytest.raises(ProductNotNoncrossing):
        five_permutations(s1, s2)


def test_general_factors_oracle(rng):
    p = _nondegenerate_points(3, rng)
    out = rescale_points_by(p, [(1, 2, Fraction(2)), (2, 3, Fraction(1))])
    assert norms_from_points(out).a[0] == 4 * norms_from_points(p).a[0]
    with pytest.raises(ValueError):
        rescale_points_by(p, [(1, 2, 0), (2, 3, 1)])


def test_matrix_from_tree_validates():
    with pytest.raises(NotHypertree):
        matrix_from_tree(3, (TreeEdge(1, 2, Q),))
