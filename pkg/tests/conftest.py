import random
from fractions import Fraction

import pytest

from braidsimplex import EdgeMatrix, Q, ONE
from braidsimplex.simplex import PointConfig

q = Q
one = ONE


def sym(n, rows):
    return EdgeMatrix(n, rows, "symbolic")


# Reference matrices, transcribed entry by entry.
EQ1_TRIANGLE = [
    [q**2, 0, 0],
    [q**2 - q, q, 1 - q],
    [0, 0, 1],
]

EQ3_TETRA = [
    [q**2, 0, 0, 0, 0, 0],
    [q**2 - q, q, 0, 1 - q, 0, 0],
    [q**2 - q, 0, q, 0, 1 - q, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]

S12_N4 = [
    [q**2, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [q**2 - q, q, 0, 1 - q, 0, 0],
    [q**2 - q, 0, q, 0, 1 - q, 0],
    [0, 0, 0, 0, 0, 1],
]

# a permutation matrix fixing e34 needs the 1 in the last row
P12_N4 = [
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
]


def random_points(n, rng, box=10):
    return PointConfig(tuple(tuple(Fraction(rng.randint(-box, box)) for _ in range(n - 1)) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
