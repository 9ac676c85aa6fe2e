import itertools

import pytest
from hypothesis import given, settings, strategies as st

from braidsimplex.errors import CapExceeded, NotAPartition, NotNoncrossingPermutation
from braidsimplex.noncrossing import (
    NCPartition,
    Permutation,
    catalan,
    complement,
    enumerate_nc,
    five_permutations,
    from_permutation,
    is_noncrossing,
    is_noncrossing_permutation,
    left_complement,
    nc_join,
    nc_leq,
    nc_meet,
    partition_complement,
    right_complement,
    to_permutation,
)

P = Permutation.parse


@pytest.mark.parametrize("n", range(1, 11))
def test_catalan_counts(n):
    assert catalan(n) == [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796][n - 1]
    assert len(enumerate_nc(n)) == catalan(n)


def test_enumeration_is_distinct_and_noncrossing():
    parts = enumerate_nc(6)
    assert len(set(parts)) == len(parts)
    assert all(is_noncrossing(p.blocks, 6) for p in parts)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_nc(13)


def test_crossing_examples():
    assert not is_noncrossing([[1, 2, 4, 5], [3, 7, 8], [6], [9]], 9)
    assert is_noncrossing([[1, 2, 4, 5], [7, 8, 9], [3], [6]], 9)
    assert is_noncrossing([[k] for k in range(1, 8)], 7)
    with pytest.raises(NotAPartition):
        is_noncrossing([[1, 2], [2, 3]], 3)


def test_to_and_from_permutation():
    p = NCPartition.from_blocks([[1, 3, 4], [5, 6, 7, 8, 9]], 9)
    perm = to_permutation(p)
    assert str(perm) == "(1,3,4)(5,6,7,8,9)"
    assert from_permutation(perm) == p
    assert to_permutation(NCPartition.full(5)) == Permutation.delta(5)
    assert to_permutation(NCPartition.discrete(5)).is_identity()
    assert from_permutation(Permutation.identity(5)) == NCPartition.discrete(5)
    with pytest.raises(NotNoncrossingPermutation):
        from_permutation(P("(1,4,3)", 4))


def test_complements_of_136():
    s = P("(1,3,6)", 9)
    assert complement(s, "left") == P("(2,3)(4,5,6)(1,7,8,9)", 9)
    assert complement(s, "right") == P("(1,2)(3,4,5)(6,7,8,9)", 9)
    e = Permutation.identity(9)
    assert left_complement(e) == right_complement(e) == Permutation.delta(9)


def test_five_permutations_examples():
    s3, s4, s5 = five_permutations(P("(2,3,4,5)", 9), P("(5,6,7)", 9))
    assert (s3, s4, s5) == (P("(1,7,8,9)", 9), P("(1,5,8,9)", 9), P("(1,2,8,9)", 9))
    s = P("(1,3)", 4)
    s3, s4, s5 = five_permutations(Permutation.identity(4), s)
    assert s3 == right_complement(s) and s4 == left_complement(s) and s5 == left_complement(s)
    assert all(x.is_identity() for x in five_permutations(P("(1,2)", 3), P("(2,3)", 3)))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_complements_are_noncrossing_and_inverse_bijections(n):
    d = Permutation.delta(n)
    perms = [p.to_permutation() for p in enumerate_nc(n)]
    for s in perms:
        lc, rc = left_complement(s), right_complement(s)
        assert lc * s == d and s * rc == d
        assert is_noncrossing_permutation(lc) and is_noncrossing_permutation(rc)
        assert left_complement(rc) == s and right_complement(lc) == s
    assert len({right_complement(s) for s in perms}) == len(perms)


def test_lattice_examples():
    x = NCPartition.parse("{1,3|2}", 4)
    assert nc_meet(x, NCPartition.discrete(4)).is_discrete()
    assert nc_join(x, NCPartition.full(4)) == NCPartition.full(4)
    a = NCPartition.from_blocks([[1, 2], [3, 4]], 4)
    b = NCPartition.from_blocks([[2, 3]], 4)
    assert nc_meet(a, b).is_discrete()
    assert nc_join(a, b) == NCPartition.full(4)


@pytest.mark.parametrize("n", [4, 5])
def test_lattice_axioms(n):
    parts = enumerate_nc(n)
    for a, b in itertools.product(parts, repeat=2):
        m, j = nc_meet(a, b), nc_join(a, b)
        assert nc_leq(m, a) and nc_leq(m, b)
        assert nc_leq(a, j) and nc_leq(b, j)
        assert nc_meet(a, b) == nc_meet(b, a) and nc_join(a, b) == nc_join(b, a)
        assert nc_meet(a, j) == a and nc_join(a, m) == a
        # greatest lower bound
        lower = [c for c in parts if nc_leq(c, a) and nc_leq(c, b)]
        assert all(nc_leq(c, m) for c in lower)


@pytest.mark.parametrize("n", [4, 5])
def test_complement_is_order_reversing(n):
    parts = enumerate_nc(n)
    for a, b in itertools.product(parts, repeat=2):
        if nc_leq(a, b):
            assert nc_leq(partition_complement(b, "right"), partition_complement(a, "right"))
        assert partition_complement(a, "right").rank() == n - 1 - a.rank()


@settings(max_examples=50)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, catalan(n) - 1))))
def test_json_round_trip(pair):
    n, k = pair
    p = enumerate_nc(n)[k]
    assert NCPartition.from_json(p.to_json()) == p
    assert NCPartition.parse(str(p), n) == p
    assert from_permutation(P(str(p.to_permutation()), n)) == p


def test_permutation_parse_and_compose():
    a, b = P("(1,2)", 3), P("(2,3)", 3)
    # right to left: (a*b)(x) = a(b(x))
    assert (a * b)(2) == a(3) == 3
    assert a * b == Permutation.delta(3)
    assert P("()", 3).is_identity()
    assert P("(23)(456)", 6) == Permutation.from_cycles(6, [[2, 3], [4, 5, 6]])
