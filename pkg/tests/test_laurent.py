from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from braidsimplex.errors import ZeroBase
from braidsimplex.laurent import LaurentQT, ONE, Q, T, ZERO, poly_eval, poly_mul

terms = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-2, 2)), st.integers(-5, 5), max_size=5
)
laurent = terms.map(LaurentQT)
nonzero_q = st.fractions(min_value=-4, max_value=4).filter(lambda x: x != 0)


def test_canonical_form_drops_zero_coefficients():
    p = LaurentQT({(1, 0): 2, (2, 0): 0})
    assert p.terms == {(1, 0): 2}
    assert Q - Q == ZERO
    assert (Q - Q).terms == {}


def test_poly_mul_examples():
    assert poly_mul(Q**2 - Q, ONE) == Q**2 - Q
    assert poly_mul(Q, Q) == Q**2
    assert poly_mul(Q - 1, Q - 1) == Q**2 - 2 * Q + 1


def test_poly_eval_examples():
    assert poly_eval(Q**2, 2) == 4
    assert poly_eval(Q**2 - Q, 1) == 0
    assert poly_eval((Q**2 - Q) + Q + (1 - Q), 2) == 3


def test_eval_is_exact_for_fractions():
    val = (Q**2 - Q).eval(Fraction(1, 3))
    assert val == Fraction(-2, 9) and isinstance(val, Fraction)


def test_negative_powers_of_unit_monomials():
    assert (Q**-1) * Q == ONE
    assert (T * Q) ** -2 == LaurentQT.monomial(-2, -2)
    assert LaurentQT.monomial(1, 0, -1) ** -1 == LaurentQT.monomial(-1, 0, -1)
    with pytest.raises(ValueError):
        (Q + 1) ** -1


def test_zero_base_raises():
    with pytest.raises(ZeroBase):
        (Q**-1).eval(0)
    assert (Q**2).eval(0) == 0


def test_degrees_and_substitution():
    p = T * Q**2 - Q**-1 + 3
    assert p.q_degree() == 2
    assert p.q_low_degree() == -1
    assert p.t_degree() == 1
    assert p.subs_t(1) == Q**2 - Q**-1 + 3
    assert p.invert_q() == T * Q**-2 - Q + 3


def test_str():
    assert str(Q**2 - Q) == "q^2 - q"
    assert str(ZERO) == "0"


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(laurent, laurent, nonzero_q, nonzero_q)
def test_eval_is_a_ring_homomorphism(a, b, q0, t0):
    assert (a + b).eval(q0, t0) == a.eval(q0, t0) + b.eval(q0, t0)
    assert (a * b).eval(q0, t0) == a.eval(q0, t0) * b.eval(q0, t0)


@given(laurent)
def test_json_round_trip(a):
    assert LaurentQT.from_json(a.to_json()) == a
