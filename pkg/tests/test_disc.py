import itertools

import pytest

from braidsimplex.disc import (
    Edge,
    EdgePairClass,
    block_edges,
    classify_pair,
    edge_rank,
    edges,
    is_left_of,
    is_right_of,
    num_edges,
    parse_edge,
    rank_edge,
    third_edge,
)
from braidsimplex.errors import IdenticalEdges, NoSharedEndpoint, OutOfRange

E = Edge.of


def test_rank_examples():
    assert edge_rank(1, 2, 4) == 0
    assert edge_rank(2, 3, 4) == 3
    assert edge_rank(3, 4, 4) == 5
    assert edge_rank(2, 3, 3) == 2
    assert rank_edge(0, 9) == E(1, 2)


@pytest.mark.parametrize("n", range(2, 10))
def test_rank_is_lexicographic_bijection(n):
    listed = sorted(itertools.combinations(range(1, n + 1), 2))
    assert [(e.i, e.j) for e in edges(n)] == listed
    assert len(listed) == num_edges(n)
    for r, e in enumerate(edges(n)):
        assert edge_rank(e.i, e.j, n) == r
        assert rank_edge(r, n) == e


def test_rank_out_of_range():
    with pytest.raises(OutOfRange):
        edge_rank(3, 5, 4)
    with pytest.raises(OutOfRange):
        rank_edge(6, 4)


def test_pair_classifications():
    assert classify_pair(E(3, 4), E(4, 7), 9) is EdgePairClass.CLOCKWISE
    assert classify_pair(E(2, 7), E(4, 7), 9) is EdgePairClass.COUNTERCLOCKWISE
    assert classify_pair(E(1, 3), E(2, 4), 4) is EdgePairClass.CROSSING
    assert classify_pair(E(1, 2), E(3, 4), 4) is EdgePairClass.NONCROSSING
    assert classify_pair(E(1, 2), E(1, 2), 4) is EdgePairClass.IDENTICAL


def test_left_and_right_of_e47():
    e47 = E(4, 7)
    for f in (E(3, 4), E(4, 9), E(6, 7)):
        assert is_left_of(f, e47)
        assert not is_right_of(f, e47)
    for f in (E(2, 7), E(7, 8), E(4, 5)):
        assert is_right_of(f, e47)


def test_orientation_is_antisymmetric():
    n = 6
    for e, f in itertools.permutations(edges(n), 2):
        c = classify_pair(e, f, n)
        back = classify_pair(f, e, n)
        if c is EdgePairClass.CLOCKWISE:
            assert back is EdgePairClass.COUNTERCLOCKWISE
        elif c is EdgePairClass.COUNTERCLOCKWISE:
            assert back is EdgePairClass.CLOCKWISE
        else:
            assert back is c


def test_third_edge():
    assert third_edge(E(1, 2), E(2, 3)) == E(1, 3)
    assert third_edge(E(1, 2), E(2, 4)) == E(1, 4)
    assert third_edge(E(3, 4), E(4, 7)) == E(3, 7)
    with pytest.raises(NoSharedEndpoint):
        third_edge(E(1, 2), E(3, 4))
    with pytest.raises(IdenticalEdges):
        third_edge(E(1, 2), E(1, 2))


def test_block_edges():
    assert block_edges([1, 3, 4]) == [E(1, 3), E(1, 4), E(3, 4)]
    assert block_edges([2]) == []
    assert block_edges([1, 2, 3, 4]) == list(edges(4))


def test_parse_and_str():
    assert parse_edge("e12") == E(1, 2)
    assert parse_edge("e(10,12)") == E(10, 12)
    assert str(E(3, 7)) == "e37"
    assert str(E(10, 12)) == "e(10,12)"
    assert E(4, 2) == E(2, 4)
